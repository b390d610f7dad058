from __future__ import annotations

from typing import List
from typing import Union

from tok.tensororbits.gf.fieldspec import FieldSpec


class FieldElement:
    """An element of a FieldSpec, stored as its canonical integer encoding"""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        if not 0 <= value < field.q:
            raise ValueError(f"Element encoding must lie in 0..{field.q - 1} (got {value})")
        self.field = field
        self.value = value

    def _coerce(self, other: Union[FieldElement, int]) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"Cannot combine elements of {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.from_integer(other)
        raise TypeError(f"Cannot combine FieldElement with {type(other).__name__}")

    def _wrap(self, value: int) -> FieldElement:
        return FieldElement(self.field, value)

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._coerce(other)))

    def __rtruediv__(self, other):
        return self._wrap(self.field.div(self._coerce(other), self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, exponent: int):
        return self._wrap(self.field.pow(self.value, exponent))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return False
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __repr__(self):
        return f"FieldElement({self.value}, q={self.field.q})"

    def __str__(self):
        return str(self.value)


def all_elements(field: FieldSpec) -> List[FieldElement]:
    """Every element of the field in canonical encoding order, beginning 0, 1"""
    return [FieldElement(field, v) for v in field.elements()]


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()
