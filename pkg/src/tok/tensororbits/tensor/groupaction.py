from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List
from typing import Sequence
from typing import Tuple
from typing import TypeVar

from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.matrixfq import det
from tok.tensororbits.linalg.matrixfq import inverse
from tok.tensororbits.linalg.matrixfq import MatrixFq
from tok.tensororbits.tensor.tensors import Tensor

T = TypeVar("T", bound=Tensor)


def random_invertible(field: FieldSpec, n: int, rng: random.Random) -> MatrixFq:
    while True:
        candidate = MatrixFq(field, n, n, tuple(rng.randrange(field.q) for _ in range(n * n)))
        if det(candidate):
            return candidate


@dataclass(frozen=True)
class GroupElementH:
    """
    (g1, g2, g3) acting by u (x) v (x) w -> g1 u (x) g2 v (x) g3 w.  With transpose_flag set the element is (g1, g2, g3)
    composed after the factor swap T, which together with H generates G.
    """

    g1: MatrixFq
    g2: MatrixFq
    g3: MatrixFq
    transpose_flag: bool = False

    def __post_init__(self):
        for name, g in (("g1", self.g1), ("g2", self.g2), ("g3", self.g3)):
            if not g.is_square or det(g) == 0:
                raise ValueError(f"{name} must be an invertible square matrix (got {g!r})")
        if self.transpose_flag and self.g2.rows != self.g3.rows:
            raise ValueError(
                f"The factor swap needs equal second and third factors (got {self.g2.rows}, {self.g3.rows})"
            )

    @property
    def shape(self) -> Tuple[int, int, int]:
        return self.g1.rows, self.g2.rows, self.g3.rows

    @staticmethod
    def identity(field: FieldSpec, shape: Sequence[int] = (2, 3, 3)) -> GroupElementH:
        n1, n2, n3 = shape
        return GroupElementH(MatrixFq.identity(field, n1), MatrixFq.identity(field, n2), MatrixFq.identity(field, n3))

    @staticmethod
    def transposition(field: FieldSpec) -> GroupElementH:
        return GroupElementH(
            MatrixFq.identity(field, 2), MatrixFq.identity(field, 3), MatrixFq.identity(field, 3), transpose_flag=True
        )

    @staticmethod
    def random(
        field: FieldSpec, rng: random.Random, shape: Sequence[int] = (2, 3, 3), allow_transpose: bool = False
    ) -> GroupElementH:
        n1, n2, n3 = shape
        return GroupElementH(
            random_invertible(field, n1, rng),
            random_invertible(field, n2, rng),
            random_invertible(field, n3, rng),
            transpose_flag=allow_transpose and rng.random() < 0.5,
        )

    def inverse(self) -> GroupElementH:
        # (g o T)^-1 = T o g^-1 = (g1^-1, g3^-1, g2^-1) o T
        if self.transpose_flag:
            return GroupElementH(inverse(self.g1), inverse(self.g3), inverse(self.g2), transpose_flag=True)
        return GroupElementH(inverse(self.g1), inverse(self.g2), inverse(self.g3))


def mode_product(field: FieldSpec, entries: Sequence[int], shape: Sequence[int], axis: int, g: MatrixFq) -> List[int]:
    """Apply g along the given zero-based axis of a flattened tensor of the given shape"""
    add = field.add_table
    mul = field.mul_table
    n = shape[axis]
    stride = 1
    for extent in shape[axis + 1 :]:
        stride *= extent
    block = n * stride

    result = [0] * len(entries)
    for base in range(0, len(entries), block):
        for offset in range(stride):
            fibre = [entries[base + offset + t * stride] for t in range(n)]
            for row in range(n):
                total = 0
                for col, x in enumerate(fibre):
                    if x:
                        total = add[total][mul[g.get(row, col)][x]]
                result[base + offset + row * stride] = total
    return result


def act(a: T, h: GroupElementH) -> T:
    """
    A'_(i'j'k') = sum g1[i',i] g2[j',j] g3[k',k] a_ijk, after swapping the last two factors when
    transpose_flag is set
    """
    if h.shape != a.SHAPE:
        raise ValueError(f"Group element of shape {h.shape} cannot act on {type(a).__name__}")

    source = a
    if h.transpose_flag:
        source = a.transpose()  # type: ignore[attr-defined]

    entries: List[int] = list(source.a)
    for axis, g in enumerate((h.g1, h.g2, h.g3)):
        entries = mode_product(a.field, entries, a.SHAPE, axis, g)
    return type(a)(a.field, tuple(entries))
