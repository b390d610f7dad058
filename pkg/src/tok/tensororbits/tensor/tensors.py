from __future__ import annotations

import random
from dataclasses import dataclass
from typing import ClassVar
from typing import List
from typing import Sequence
from typing import Tuple
from typing import Type
from typing import TypeVar

from tok.tensororbits.gf.fieldelement import FieldElement
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.matrixfq import MatrixFq

T = TypeVar("T", bound="Tensor")


@dataclass(frozen=True)
class Tensor:
    """
    A tensor in F^n1 (x) F^n2 (x) F^n3 held as its coefficient array a_ijk, flattened in lexicographic (i, j, k) order.
    Indices are zero-based in code; entry (i, j, k) lives at i*n2*n3 + j*n3 + k.
    """

    SHAPE: ClassVar[Tuple[int, int, int]] = (0, 0, 0)

    field: FieldSpec
    a: Tuple[int, ...]

    def __post_init__(self):
        expected = self.size()
        if len(self.a) != expected:
            raise ValueError(f"{type(self).__name__} needs {expected} entries (got {len(self.a)})")
        for x in self.a:
            if not 0 <= x < self.field.q:
                raise ValueError(f"Entry {x} is not an element encoding of {self.field!r}")

    @classmethod
    def size(cls) -> int:
        n1, n2, n3 = cls.SHAPE
        return n1 * n2 * n3

    @classmethod
    def from_entries(cls: Type[T], field: FieldSpec, entries: Sequence) -> T:
        return cls(field, tuple(int(x) for x in entries))

    @classmethod
    def zero(cls: Type[T], field: FieldSpec) -> T:
        return cls(field, (0,) * cls.size())

    @classmethod
    def from_slices(cls: Type[T], field: FieldSpec, slices: Sequence[MatrixFq]) -> T:
        """Build the tensor sum_i e_i (x) M^(i) from its first-axis slices"""
        n1, n2, n3 = cls.SHAPE
        if len(slices) != n1 or any((m.rows, m.cols) != (n2, n3) for m in slices):
            raise ValueError(f"{cls.__name__} needs {n1} slices of shape {n2}x{n3}")
        return cls(field, tuple(x for m in slices for x in m.entries))

    @classmethod
    def random(cls: Type[T], field: FieldSpec, rng: random.Random) -> T:
        return cls(field, tuple(rng.randrange(field.q) for _ in range(cls.size())))

    @classmethod
    def from_packed(cls: Type[T], field: FieldSpec, packed: int) -> T:
        if not 0 <= packed < field.q ** cls.size():
            raise ValueError(f"Packed value {packed} is out of range for {cls.__name__} over {field!r}")
        digits = []
        for _ in range(cls.size()):
            packed, d = divmod(packed, field.q)
            digits.append(d)
        return cls(field, tuple(reversed(digits)))

    def packed(self) -> int:
        """Base-q positional encoding; entry (0, 0, 0) is the most significant digit"""
        value = 0
        for x in self.a:
            value = value * self.field.q + x
        return value

    def index(self, i: int, j: int, k: int) -> int:
        _, n2, n3 = self.SHAPE
        return (i * n2 + j) * n3 + k

    def get(self, i: int, j: int, k: int) -> int:
        return self.a[self.index(i, j, k)]

    def element(self, i: int, j: int, k: int) -> FieldElement:
        return FieldElement(self.field, self.get(i, j, k))

    def slices(self) -> List[MatrixFq]:
        """The first-axis slices M^(i) with (M^(i))_jk = a_ijk"""
        n1, n2, n3 = self.SHAPE
        width = n2 * n3
        return [MatrixFq(self.field, n2, n3, self.a[i * width : (i + 1) * width]) for i in range(n1)]

    def is_zero(self) -> bool:
        return not any(self.a)

    def __add__(self: T, other: T) -> T:
        if type(other) is not type(self) or other.field != self.field:
            raise ValueError(f"Cannot add {self!r} and {other!r}")
        add = self.field.add_table
        return type(self)(self.field, tuple(add[x][y] for x, y in zip(self.a, other.a)))

    def __repr__(self):
        return f"{type(self).__name__}(q={self.field.q}, a={list(self.a)})"


@dataclass(frozen=True, repr=False)
class Tensor233(Tensor):
    """An element of F^2 (x) F^3 (x) F^3"""

    SHAPE: ClassVar[Tuple[int, int, int]] = (2, 3, 3)

    def transpose(self) -> Tensor233:
        """T: u (x) v (x) w -> u (x) w (x) v, i.e. each slice M^(i) is transposed"""
        return Tensor233.from_slices(self.field, [m.transpose() for m in self.slices()])


@dataclass(frozen=True, repr=False)
class Tensor223(Tensor):
    """An element of F^2 (x) F^2 (x) F^3"""

    SHAPE: ClassVar[Tuple[int, int, int]] = (2, 2, 3)


@dataclass(frozen=True, repr=False)
class Tensor222(Tensor):
    """An element of F^2 (x) F^2 (x) F^2"""

    SHAPE: ClassVar[Tuple[int, int, int]] = (2, 2, 2)

    def transpose(self) -> Tensor222:
        return Tensor222.from_slices(self.field, [m.transpose() for m in self.slices()])


def _embed(b: Tensor) -> Tensor233:
    _, n2, n3 = b.SHAPE
    entries = [0] * Tensor233.size()
    for i in range(2):
        for j in range(n2):
            for k in range(n3):
                entries[(i * 3 + j) * 3 + k] = b.get(i, j, k)
    return Tensor233(b.field, tuple(entries))


def embed_223(b: Tensor223) -> Tensor233:
    """Include F^2 (x) F^2 (x) F^3 as the j <= 2 part of F^2 (x) F^3 (x) F^3"""
    return _embed(b)


def embed_222(b: Tensor222) -> Tensor233:
    return _embed(b)


def tensor_type_for_shape(shape: str) -> Type[Tensor]:
    try:
        return {"233": Tensor233, "223": Tensor223, "222": Tensor222}[shape]
    except KeyError:
        raise ValueError(f'Unsupported tensor shape "{shape}" - expected one of 233, 223, 222')


def tensor_type_for_size(size: int) -> Type[Tensor]:
    for tensor_type in (Tensor233, Tensor223, Tensor222):
        if tensor_type.size() == size:
            return tensor_type
    raise ValueError(f"No supported tensor shape has {size} entries")
