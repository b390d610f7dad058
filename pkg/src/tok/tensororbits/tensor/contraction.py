from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict
from typing import Iterable
from typing import List
from typing import Sequence
from typing import Tuple

from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.echelon import rref_rows
from tok.tensororbits.linalg.echelon import Vector
from tok.tensororbits.linalg.matrixfq import MatrixFq
from tok.tensororbits.linalg.matrixfq import rank
from tok.tensororbits.linalg.subspace import Subspace
from tok.tensororbits.tensor.tensors import Tensor


@dataclass(frozen=True)
class ContractionSpace:
    """
    The contraction space A_axis of a tensor: the span of its slices along one axis.  spanning holds the slices
    themselves; space holds their span in flattened (row-major) matrix coordinates.
    """

    axis: int
    spanning: Tuple[MatrixFq, ...]
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def matrix_shape(self) -> Tuple[int, int]:
        return self.spanning[0].rows, self.spanning[0].cols

    def basis_matrices(self) -> List[MatrixFq]:
        rows, cols = self.matrix_shape
        return [MatrixFq(self.space.field, rows, cols, v) for v in self.space.basis]

    def points(self) -> List[MatrixFq]:
        """One representative matrix per point of the projective space PG(A_axis)"""
        rows, cols = self.matrix_shape
        points = projective_points(self.space.field, self.space.basis)
        return [MatrixFq(self.space.field, rows, cols, v) for v in points]


def contraction(a: Tensor, axis: int) -> ContractionSpace:
    """
    axis 1: slices M^(i), (M^(i))_jk = a_ijk.  axis 2: slices N^(j), (N^(j))_ik = a_ijk.  axis 3: slices P^(k),
    (P^(k))_ij = a_ijk.
    """
    n1, n2, n3 = a.SHAPE
    if axis == 1:
        spanning = a.slices()
    elif axis == 2:
        spanning = [
            MatrixFq(a.field, n1, n3, tuple(a.get(i, j, k) for i in range(n1) for k in range(n3))) for j in range(n2)
        ]
    elif axis == 3:
        spanning = [
            MatrixFq(a.field, n1, n2, tuple(a.get(i, j, k) for i in range(n1) for j in range(n2))) for k in range(n3)
        ]
    else:
        raise ValueError(f"Contraction axis must be 1, 2 or 3 (got {axis})")

    rows, cols = spanning[0].rows, spanning[0].cols
    space = Subspace.span(a.field, rows * cols, [m.entries for m in spanning])
    return ContractionSpace(axis, tuple(spanning), space)


def contraction_dims(a: Tensor) -> Tuple[int, int, int]:
    return contraction(a, 1).dim, contraction(a, 2).dim, contraction(a, 3).dim


def first_contraction_basis(a: Tensor) -> Tuple[Vector, ...]:
    """Canonical basis of A_1, the hashable key every orbit invariant of a tensor is a function of"""
    n1, n2, n3 = a.SHAPE
    width = n2 * n3
    return rref_rows(a.field, [a.a[i * width : (i + 1) * width] for i in range(n1)])


def projective_coordinates(field: FieldSpec, dim: int) -> Iterable[Tuple[int, ...]]:
    """
    Normalised coordinates of the points of PG(dim - 1, q): the first nonzero coordinate is 1.  Points are ordered by
    the position of that leading 1, then by the remaining coordinates in canonical element order, so for dim 2 the order
    is (1, 0), (1, 1), ..., (1, q - 1), (0, 1).
    """
    for lead in range(dim):
        for tail in itertools.product(field.elements(), repeat=dim - lead - 1):
            yield (0,) * lead + (1,) + tail


def projective_points(field: FieldSpec, basis: Sequence[Sequence[int]]) -> List[Vector]:
    """The vectors sum_i c_i b_i for every normalised coordinate tuple c, one per point of PG(span(basis))"""
    add = field.add_table
    mul = field.mul_table
    if not basis:
        return []

    width = len(basis[0])
    points = []
    for coordinates in projective_coordinates(field, len(basis)):
        v = [0] * width
        for c, b in zip(coordinates, basis):
            if c:
                row = mul[c]
                v = [add[x][row[y]] for x, y in zip(v, b)]
        points.append(tuple(v))
    return points


@dataclass(frozen=True)
class RankDistribution:
    """Numbers of points of rank 1, 2 and 3 in the projective space of a contraction space"""

    counts: Tuple[int, int, int]

    @property
    def a(self) -> int:
        return self.counts[0]

    @property
    def b(self) -> int:
        return self.counts[1]

    @property
    def c(self) -> int:
        return self.counts[2]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_list(self) -> List[int]:
        return list(self.counts)

    def __str__(self):
        return f"[{self.a},{self.b},{self.c}]"


def rank_distribution_of_points(points: Iterable[MatrixFq]) -> RankDistribution:
    counts: Dict[int, int] = {1: 0, 2: 0, 3: 0}
    for m in points:
        counts[rank(m)] += 1
    return RankDistribution((counts[1], counts[2], counts[3]))


def rank_distribution(a: Tensor, axis: int = 1) -> RankDistribution:
    return rank_distribution_of_points(contraction(a, axis).points())
