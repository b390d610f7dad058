from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable
from typing import List
from typing import Sequence
from typing import Tuple

from tok.tensororbits.gf.fieldelement import FieldElement
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.gf.fieldspec import format_polynomial


@dataclass(frozen=True)
class PolyFq:
    """A univariate polynomial over F_q in t, with coefficients stored low-degree-first and no trailing zeros"""

    field: FieldSpec
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if self.coefficients and self.coefficients[-1] == 0:
            raise ValueError(f"Polynomial coefficients must be trimmed (got {self.coefficients})")

    @staticmethod
    def from_coefficients(field: FieldSpec, coefficients: Iterable) -> PolyFq:
        values = [int(c) for c in coefficients]
        for c in values:
            if not 0 <= c < field.q:
                raise ValueError(f"Coefficient {c} is not an element encoding of {field!r}")
        while values and values[-1] == 0:
            values.pop()
        return PolyFq(field, tuple(values))

    @staticmethod
    def zero(field: FieldSpec) -> PolyFq:
        return PolyFq(field, ())

    @staticmethod
    def constant(field: FieldSpec, c: int) -> PolyFq:
        return PolyFq.from_coefficients(field, [c])

    @staticmethod
    def linear(field: FieldSpec, a: int, b: int) -> PolyFq:
        """a*t + b"""
        return PolyFq.from_coefficients(field, [b, a])

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial"""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def monic(self) -> PolyFq:
        if self.is_zero():
            raise ValueError("The zero polynomial has no monic normalisation")
        return self.scale(self.field.inv(self.leading))

    def scale(self, c: int) -> PolyFq:
        row = self.field.mul_table[c]
        return PolyFq.from_coefficients(self.field, [row[x] for x in self.coefficients])

    def _check_field(self, other: PolyFq):
        if other.field != self.field:
            raise ValueError(f"Cannot combine polynomials over {self.field!r} and {other.field!r}")

    def __add__(self, other: PolyFq) -> PolyFq:
        self._check_field(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return PolyFq.from_coefficients(
            self.field, [self.field.add(self.coefficient(i), other.coefficient(i)) for i in range(n)]
        )

    def __neg__(self) -> PolyFq:
        return PolyFq(self.field, tuple(self.field.neg(c) for c in self.coefficients))

    def __sub__(self, other: PolyFq) -> PolyFq:
        return self + (-other)

    def __mul__(self, other: PolyFq) -> PolyFq:
        self._check_field(other)
        if self.is_zero() or other.is_zero():
            return PolyFq.zero(self.field)

        add = self.field.add_table
        mul = self.field.mul_table
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] = add[product[i + j]][mul[a][b]]
        return PolyFq.from_coefficients(self.field, product)

    def __pow__(self, exponent: int) -> PolyFq:
        if exponent < 0:
            raise ValueError(f"Polynomial exponent must be non-negative (got {exponent})")
        result = PolyFq.constant(self.field, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, divisor: PolyFq) -> Tuple[PolyFq, PolyFq]:
        self._check_field(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")

        field = self.field
        remainder = list(self.coefficients)
        quotient = [0] * max(len(remainder) - divisor.degree, 0)
        lead_inv = field.inv(divisor.leading)
        for shift in range(len(remainder) - 1 - divisor.degree, -1, -1):
            c = field.mul(remainder[shift + divisor.degree], lead_inv)
            if c:
                quotient[shift] = c
                for i, d in enumerate(divisor.coefficients):
                    remainder[shift + i] = field.sub(remainder[shift + i], field.mul(c, d))
        return PolyFq.from_coefficients(field, quotient), PolyFq.from_coefficients(field, remainder)

    def __mod__(self, divisor: PolyFq) -> PolyFq:
        return divmod(self, divisor)[1]

    def evaluate(self, x: int) -> int:
        """Horner evaluation at the element encoding x"""
        add = self.field.add_table
        mul = self.field.mul_table
        result = 0
        for c in reversed(self.coefficients):
            result = add[mul[result][x]][c]
        return result

    def roots(self) -> List[int]:
        return [x for x in self.field.elements() if self.evaluate(x) == 0]

    def root_multiplicity(self, x: int) -> int:
        if self.is_zero():
            raise ValueError("Every element is a root of the zero polynomial with unbounded multiplicity")
        root_factor = PolyFq.linear(self.field, 1, self.field.neg(x))
        multiplicity = 0
        remaining = self
        while True:
            quotient, remainder = divmod(remaining, root_factor)
            if not remainder.is_zero():
                return multiplicity
            multiplicity += 1
            remaining = quotient

    def is_irreducible(self) -> bool:
        if self.degree < 1:
            return False
        if self.degree <= 3:
            return not self.roots()

        for d in range(1, self.degree // 2 + 1):
            for lower in itertools.product(self.field.elements(), repeat=d):
                if (self % PolyFq.from_coefficients(self.field, list(lower) + [1])).is_zero():
                    return False
        return True

    def elements(self) -> List[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coefficients]

    def __str__(self):
        return format_polynomial(self.coefficients, variable="t")

    def __repr__(self):
        return f"PolyFq({self}, q={self.field.q})"


def monic_polynomials(field: FieldSpec, degree: int) -> Iterable[PolyFq]:
    """All monic polynomials of the given degree, in canonical (low-degree-coefficient-first) order"""
    for lower in itertools.product(field.elements(), repeat=degree):
        yield PolyFq.from_coefficients(field, list(lower) + [1])


def poly_from_roots(field: FieldSpec, roots: Sequence[int]) -> PolyFq:
    result = PolyFq.constant(field, 1)
    for r in roots:
        result = result * PolyFq.linear(field, 1, field.neg(r))
    return result
