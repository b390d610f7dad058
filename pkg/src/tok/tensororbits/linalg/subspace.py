from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Sequence
from typing import Tuple

from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.echelon import pivot_columns
from tok.tensororbits.linalg.echelon import rref_rows
from tok.tensororbits.linalg.echelon import Vector
from tok.tensororbits.linalg.matrixfq import MatrixFq


@dataclass(frozen=True)
class Subspace:
    """
    A subspace of F_q^ambient_dim held by its reduced row echelon basis.  The basis is canonical, so equality and
    hashing of Subspace values is equality of subspaces.
    """

    field: FieldSpec
    ambient_dim: int
    basis: Tuple[Vector, ...]

    @staticmethod
    def span(field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence[int]]) -> Subspace:
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"Vector {v} does not lie in F_{field.q}^{ambient_dim}")
        return Subspace(field, ambient_dim, rref_rows(field, vectors))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return pivot_columns(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        return len(rref_rows(self.field, list(self.basis) + [tuple(v)])) == self.dim

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        if (self.field, self.ambient_dim) != (other.field, other.ambient_dim):
            raise ValueError(f"Cannot sum subspaces of different spaces: {self!r}, {other!r}")
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def image(self, g: MatrixFq) -> Subspace:
        """The image {g v} of this subspace under the square matrix g"""
        if (g.rows, g.cols) != (self.ambient_dim, self.ambient_dim):
            raise ValueError(f"Cannot map F^{self.ambient_dim} by a {g.rows}x{g.cols} matrix")
        images = [(g @ MatrixFq(self.field, self.ambient_dim, 1, v)).entries for v in self.basis]
        return Subspace.span(self.field, self.ambient_dim, images)

    def __repr__(self):
        return f"Subspace(q={self.field.q}, ambient_dim={self.ambient_dim}, basis={list(self.basis)})"


def row_space(m: MatrixFq) -> Subspace:
    return Subspace.span(m.field, m.cols, m.to_rows())


def col_space(m: MatrixFq) -> Subspace:
    return Subspace.span(m.field, m.rows, m.to_columns())


def spanning_tuple_count(q: int, dim: int, length: int) -> int:
    """Number of ordered tuples of the given length that span a fixed dim-dimensional subspace over F_q"""
    if dim > length:
        return 0
    return math.prod(q**length - q**i for i in range(dim))


class SubspaceGrid:
    """
    Every subspace of F_q^ambient_dim of dimension dim, indexed 0..len-1 through its reduced row echelon basis.  Bases
    are grouped by pivot columns in itertools.combinations order, and within a group the free entries are read as base-q
    digits, row by row, last entry least significant.
    """

    def __init__(self, field: FieldSpec, ambient_dim: int, dim: int):
        if not 0 <= dim <= ambient_dim:
            raise ValueError(f"No {dim}-dimensional subspaces of F_{field.q}^{ambient_dim}")

        self.field = field
        self.ambient_dim = ambient_dim
        self.dim = dim
        self._pivots: List[Tuple[int, ...]] = []
        self._free: List[List[Tuple[int, int]]] = []
        self._offsets: List[int] = []

        total = 0
        for pivots in itertools.combinations(range(ambient_dim), dim):
            free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, ambient_dim) if c not in pivots]
            self._pivots.append(pivots)
            self._free.append(free)
            self._offsets.append(total)
            total += field.q ** len(free)
        self._count = total

    def __len__(self) -> int:
        return self._count

    def basis_at(self, index: int) -> Tuple[Vector, ...]:
        if not 0 <= index < self._count:
            raise IndexError(f"Subspace index {index} out of range for {self._count} subspaces")

        group = bisect.bisect_right(self._offsets, index) - 1
        local = index - self._offsets[group]
        rows = [[0] * self.ambient_dim for _ in range(self.dim)]
        for r, p in enumerate(self._pivots[group]):
            rows[r][p] = 1
        for r, c in reversed(self._free[group]):
            local, rows[r][c] = divmod(local, self.field.q)
        return tuple(tuple(row) for row in rows)

    def __iter__(self) -> Iterator[Tuple[Vector, ...]]:
        return (self.basis_at(i) for i in range(self._count))
