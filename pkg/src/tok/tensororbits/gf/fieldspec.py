from __future__ import annotations

import functools
import itertools
import logging
from typing import Dict
from typing import List
from typing import Sequence
from typing import Tuple

import numpy as np

log = logging.getLogger(__name__)

# Arithmetic is table-driven, so q is bounded to keep the q*q tables small
MAX_FIELD_ORDER = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power_decomposition(q: int) -> Tuple[int, int]:
    """Return (p, k) such that q == p**k, raising ValueError if q is not a prime power"""
    if q < 2:
        raise ValueError(f"Field order must be at least 2 (got {q})")

    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    remainder = q
    while remainder % p == 0:
        remainder //= p
        k += 1

    if remainder != 1:
        raise ValueError(f"Field order must be a prime power (got {q})")

    return p, k


def _prime_poly_remainder(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    """Remainder of a modulo the monic polynomial m over F_p.  Coefficients are low-degree-first."""
    work = list(a)
    dm = len(m) - 1
    for shift in range(len(work) - 1 - dm, -1, -1):
        c = work[shift + dm]
        if c:
            for i, mi in enumerate(m):
                work[shift + i] = (work[shift + i] - c * mi) % p
    return (work + [0] * dm)[:dm]


def _is_irreducible_over_prime_field(m: Sequence[int], p: int) -> bool:
    degree = len(m) - 1
    for d in range(1, degree // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            divisor = list(lower) + [1]
            if not any(_prime_poly_remainder(m, divisor, p)):
                return False
    return True


def smallest_irreducible_modulus(p: int, k: int) -> Tuple[int, ...]:
    """
    The lexicographically smallest monic irreducible polynomial of degree k over F_p, compared low-degree coefficient
    first.  itertools.product varies its last position fastest, so the constant term is the most significant key.
    """
    for lower in itertools.product(range(p), repeat=k):
        candidate = tuple(lower) + (1,)
        if _is_irreducible_over_prime_field(candidate, p):
            return candidate

    raise RuntimeError(f"No irreducible polynomial of degree {k} over F_{p} found")  # unreachable for valid p, k


def format_polynomial(coefficients: Sequence, variable: str = "x") -> str:
    """Render low-degree-first coefficients as e.g. 'x^2+x+1'"""
    terms = []
    for degree in range(len(coefficients) - 1, -1, -1):
        c = int(coefficients[degree])
        if c == 0:
            continue
        if degree == 0:
            terms.append(str(c))
            continue
        power = variable if degree == 1 else f"{variable}^{degree}"
        terms.append(power if c == 1 else f"{c}{power}")
    return "+".join(terms) if terms else "0"


class FieldSpec:
    """
    The finite field F_q, q = p**k.  Elements are the integers 0..q-1, encoding the residue polynomial in base p with
    the constant coefficient as the least significant digit.  Instances are immutable and shared (see field_new).
    """

    def __init__(self, p: int, k: int, modulus: Tuple[int, ...]):
        if not is_prime(p):
            raise ValueError(f"Field characteristic must be prime (got {p})")
        if k < 1:
            raise ValueError(f"Extension degree must be at least 1 (got {k})")
        if p**k > MAX_FIELD_ORDER:
            raise ValueError(f"Field order {p}**{k} exceeds the supported maximum of {MAX_FIELD_ORDER}")
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError(f"Modulus must be monic of degree {k} (got {modulus})")
        if k > 1 and not _is_irreducible_over_prime_field(modulus, p):
            raise ValueError(f"Modulus {format_polynomial(modulus)} is reducible over F_{p}")

        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus)

        q = self.q
        self._digits = [self._to_digits(v) for v in range(q)]
        self.add_table: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(self._direct_add(a, b) for b in range(q)) for a in range(q)
        )
        self.neg_table: Tuple[int, ...] = tuple(self._direct_neg(a) for a in range(q))

        self.primitive_element = self._find_primitive_element()
        self._exp: List[int] = []
        self._log: Dict[int, int] = {}
        power = 1
        for exponent in range(q - 1):
            self._exp.append(power)
            self._log[power] = exponent
            power = self._direct_mul(power, self.primitive_element)

        self.mul_table: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(self._table_mul(a, b) for b in range(q)) for a in range(q)
        )
        self.inv_table: Tuple[int, ...] = tuple(0 if a == 0 else self._exp[(-self._log[a]) % (q - 1)] for a in range(q))

        log.debug(f"Constructed {self!r} with primitive element {self.primitive_element}")

    # construction helpers

    def _to_digits(self, value: int) -> Tuple[int, ...]:
        digits = []
        for _ in range(self.k):
            value, d = divmod(value, self.p)
            digits.append(d)
        return tuple(digits)

    def _from_digits(self, digits: Sequence[int]) -> int:
        value = 0
        for d in reversed(digits):
            value = value * self.p + d
        return value

    def _direct_add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self._from_digits([(x + y) % self.p for x, y in zip(self._digits[a], self._digits[b])])

    def _direct_neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self._from_digits([(-x) % self.p for x in self._digits[a]])

    def _direct_mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        da, db = self._digits[a], self._digits[b]
        product = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    product[i + j] = (product[i + j] + x * y) % self.p
        return self._from_digits(_prime_poly_remainder(product, self.modulus, self.p))

    def _multiplicative_order(self, a: int) -> int:
        order = 1
        power = a
        while power != 1:
            power = self._direct_mul(power, a)
            order += 1
        return order

    def _find_primitive_element(self) -> int:
        for candidate in range(1, self.q):
            if self._multiplicative_order(candidate) == self.q - 1:
                return candidate
        raise RuntimeError(f"No primitive element found for {self!r}")  # unreachable: F_q^* is cyclic

    def _table_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return (a * b) % self.p
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    # arithmetic on canonical integer representatives

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"Cannot invert zero in {self!r}")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul_table[a][self.inv(b)]

    def pow(self, a: int, exponent: int) -> int:
        if exponent < 0:
            return self.pow(self.inv(a), -exponent)
        if a == 0:
            return 1 if exponent == 0 else 0
        return self._exp[(self._log[a] * exponent) % (self.q - 1)]

    def from_integer(self, n: int) -> int:
        """The image of the integer n under Z -> F_q"""
        return n % self.p

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError(f"Zero has no discrete logarithm in {self!r}")
        return self._log[a]

    def exp(self, exponent: int) -> int:
        return self._exp[exponent % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    # vectorised tables for whole-state-space work

    @functools.cached_property
    def np_add(self) -> np.ndarray:
        return np.array(self.add_table, dtype=np.uint8)

    @functools.cached_property
    def np_mul(self) -> np.ndarray:
        return np.array(self.mul_table, dtype=np.uint8)

    # presentation

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    def modulus_str(self) -> str:
        return format_polynomial(self.modulus)

    def header(self) -> str:
        """Output header line content; non-prime fields also name their modulus"""
        if self.is_prime_field:
            return f"q={self.q}"
        return f"q={self.q}; modulus={self.modulus_str()}"

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return False
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.is_prime_field:
            return f"FieldSpec(q={self.q})"
        return f"FieldSpec(q={self.q}, modulus={self.modulus_str()})"

    def __reduce__(self):
        # unpickles to the shared instance, so worker processes keep table caches and identity-based lookups
        return field_new, (self.p, self.k)


@functools.lru_cache(maxsize=None)
def field_new(p: int, k: int = 1) -> FieldSpec:
    """Return the (shared) field F_{p^k} with the lexicographically smallest irreducible modulus"""
    if not is_prime(p):
        raise ValueError(f"Field characteristic must be prime (got {p})")
    if k < 1:
        raise ValueError(f"Extension degree must be at least 1 (got {k})")
    if p**k > MAX_FIELD_ORDER:
        raise ValueError(f"Field order {p}**{k} exceeds the supported maximum of {MAX_FIELD_ORDER}")

    modulus = (0, 1) if k == 1 else smallest_irreducible_modulus(p, k)
    return FieldSpec(p, k, modulus)


def field_for_order(q: int) -> FieldSpec:
    p, k = prime_power_decomposition(q)
    return field_new(p, k)
