from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable
from typing import List
from typing import Sequence
from typing import Tuple

from tok.tensororbits.gf.fieldelement import FieldElement
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.echelon import rref_rows
from tok.tensororbits.linalg.polyfq import PolyFq

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatrixFq:
    """
    A rows x cols matrix over a finite field.  Entries are canonical element encodings stored row-major; use element()
    for a FieldElement view.
    """

    field: FieldSpec
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            expected = self.rows * self.cols
            raise ValueError(f"A {self.rows}x{self.cols} matrix needs {expected} entries (got {len(self.entries)})")

    @staticmethod
    def from_rows(field: FieldSpec, rows: Sequence[Sequence]) -> MatrixFq:
        if not rows:
            raise ValueError("A matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError(f"Ragged rows: {[len(r) for r in rows]}")
        entries = tuple(int(x) for r in rows for x in r)
        for x in entries:
            if not 0 <= x < field.q:
                raise ValueError(f"Entry {x} is not an element encoding of {field!r}")
        return MatrixFq(field, len(rows), width, entries)

    @staticmethod
    def zero(field: FieldSpec, rows: int, cols: int) -> MatrixFq:
        return MatrixFq(field, rows, cols, (0,) * (rows * cols))

    @staticmethod
    def identity(field: FieldSpec, n: int) -> MatrixFq:
        return MatrixFq(field, n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def unit(field: FieldSpec, rows: int, cols: int, i: int, j: int) -> MatrixFq:
        """The matrix unit E_ij, zero-based"""
        entries = [0] * (rows * cols)
        entries[i * cols + j] = 1
        return MatrixFq(field, rows, cols, tuple(entries))

    @staticmethod
    def diagonal(field: FieldSpec, values: Sequence[int]) -> MatrixFq:
        n = len(values)
        return MatrixFq(field, n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    def get(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.get(i, j))

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Tuple[int, ...]:
        return self.entries[j :: self.cols]

    def to_rows(self) -> List[Tuple[int, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def to_columns(self) -> List[Tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def transpose(self) -> MatrixFq:
        return MatrixFq(self.field, self.cols, self.rows, tuple(x for col in self.to_columns() for x in col))

    def _check_compatible(self, other: MatrixFq):
        if other.field != self.field:
            raise ValueError(f"Cannot combine matrices over {self.field!r} and {other.field!r}")

    def __add__(self, other: MatrixFq) -> MatrixFq:
        self._check_compatible(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"Shape mismatch: {self.rows}x{self.cols} + {other.rows}x{other.cols}")
        add = self.field.add_table
        return MatrixFq(self.field, self.rows, self.cols, tuple(add[a][b] for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> MatrixFq:
        neg = self.field.neg_table
        return MatrixFq(self.field, self.rows, self.cols, tuple(neg[a] for a in self.entries))

    def __sub__(self, other: MatrixFq) -> MatrixFq:
        return self + (-other)

    def scale(self, c: int) -> MatrixFq:
        row = self.field.mul_table[c]
        return MatrixFq(self.field, self.rows, self.cols, tuple(row[a] for a in self.entries))

    def __matmul__(self, other: MatrixFq) -> MatrixFq:
        self._check_compatible(other)
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        add = self.field.add_table
        mul = self.field.mul_table
        columns = other.to_columns()
        entries = []
        for i in range(self.rows):
            r = self.row(i)
            for col in columns:
                total = 0
                for a, b in zip(r, col):
                    total = add[total][mul[a][b]]
                entries.append(total)
        return MatrixFq(self.field, self.rows, other.cols, tuple(entries))

    def __repr__(self):
        return f"MatrixFq(q={self.field.q}, rows={self.to_rows()})"


def rank(m: MatrixFq) -> int:
    return len(rref_rows(m.field, m.to_rows()))


def det(m: MatrixFq) -> int:
    if not m.is_square:
        raise ValueError(f"Determinant requires a square matrix (got {m.rows}x{m.cols})")

    field = m.field
    work = [list(r) for r in m.to_rows()]
    n = m.rows
    result = 1
    for c in range(n):
        pr = next((r for r in range(c, n) if work[r][c]), None)
        if pr is None:
            return 0
        if pr != c:
            work[c], work[pr] = work[pr], work[c]
            result = field.neg(result)
        pivot = work[c][c]
        result = field.mul(result, pivot)
        pivot_inv = field.inv(pivot)
        for r in range(c + 1, n):
            if work[r][c]:
                factor = field.mul(work[r][c], pivot_inv)
                work[r] = [field.sub(x, field.mul(factor, y)) for x, y in zip(work[r], work[c])]
    return result


def is_invertible(m: MatrixFq) -> bool:
    return m.is_square and det(m) != 0


def inverse(m: MatrixFq) -> MatrixFq:
    if not m.is_square:
        raise ValueError(f"Only square matrices are invertible (got {m.rows}x{m.cols})")

    n = m.rows
    augmented = [list(m.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    reduced = rref_rows(m.field, augmented)
    if len(reduced) < n or any(reduced[i][i] != 1 for i in range(n)):
        raise ValueError(f"{m!r} is singular")
    return MatrixFq.from_rows(m.field, [r[n:] for r in reduced])


def principal_minor_sum(m: MatrixFq, k: int) -> int:
    """Sum of all k x k principal minors, i.e. the k-th elementary symmetric function of the eigenvalues"""
    if k == 0:
        return 1
    total = 0
    for subset in itertools.combinations(range(m.rows), k):
        minor = MatrixFq.from_rows(m.field, [[m.get(i, j) for j in subset] for i in subset])
        total = m.field.add(total, det(minor))
    return total


def charpoly(m: MatrixFq) -> PolyFq:
    """
    det(tI - M), monic of degree n.  The coefficient of t^(n-k) is (-1)^k times the sum of the k x k principal minors.
    Written against a pencil v1 - t*v, the polynomial det(v1 - t*v) with v = I is (-1)^n charpoly(v1): the two agree up
    to sign, so their roots and factorisations coincide.
    """
    if not m.is_square:
        raise ValueError(f"Characteristic polynomial requires a square matrix (got {m.rows}x{m.cols})")

    field = m.field
    n = m.rows
    coefficients = [0] * (n + 1)
    for k in range(n + 1):
        e_k = principal_minor_sum(m, k)
        coefficients[n - k] = e_k if k % 2 == 0 else field.neg(e_k)
    return PolyFq.from_coefficients(field, coefficients)


def companion(f: PolyFq) -> MatrixFq:
    """Companion matrix with ones on the subdiagonal and -f_0, ..., -f_(n-1) down the last column"""
    if f.degree < 1 or not f.is_monic():
        raise ValueError(f"Companion matrix requires a monic polynomial of positive degree (got {f!r})")

    field = f.field
    n = f.degree
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i + 1][i] = 1
    for i in range(n):
        rows[i][n - 1] = field.neg(f.coefficient(i))
    return MatrixFq.from_rows(field, rows)


def similar_irreducible(m: MatrixFq, n: MatrixFq) -> bool:
    """
    Similarity test for matrices with irreducible characteristic polynomial: both are then similar to the companion
    matrix of that polynomial, so similarity is charpoly equality.
    """
    f, g = charpoly(m), charpoly(n)
    for label, p in (("first", f), ("second", g)):
        if not p.is_irreducible():
            raise ValueError(f"Characteristic polynomial {p} of the {label} matrix is reducible")
    return f == g


def general_linear_group(field: FieldSpec, n: int) -> Iterable[MatrixFq]:
    """Every invertible n x n matrix, in canonical entry order"""
    for entries in itertools.product(field.elements(), repeat=n * n):
        candidate = MatrixFq(field, n, n, tuple(entries))
        if det(candidate):
            yield candidate


def general_linear_group_order(q: int, n: int) -> int:
    order = 1
    for i in range(n):
        order *= q**n - q**i
    return order
