from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import List
from typing import Tuple

from tok.tensororbits.gf.fieldelement import FieldElement
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.matrixfq import MatrixFq
from tok.tensororbits.linalg.polyfq import PolyFq


class FactorType(enum.Enum):
    ZERO = "Zero"
    TRIPLE_LINEAR = "TripleLinear"
    DOUBLE_LINEAR = "DoubleLinear"
    THREE_DISTINCT_LINEAR = "ThreeDistinctLinear"
    LINEAR_TIMES_IRREDUCIBLE_QUADRATIC = "LinearTimesIrreducibleQuadratic"
    IRREDUCIBLE_CUBIC = "IrreducibleCubic"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BinaryCubic:
    """The binary form c0 s^3 + c1 s^2 t + c2 s t^2 + c3 t^3"""

    field: FieldSpec
    coefficients: Tuple[int, int, int, int]

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def evaluate(self, s: int, t: int) -> int:
        add = self.field.add_table
        mul = self.field.mul_table
        total = 0
        for i, c in enumerate(self.coefficients):
            term = c
            for _ in range(3 - i):
                term = mul[term][s]
            for _ in range(i):
                term = mul[term][t]
            total = add[total][term]
        return total

    def dehomogenised(self) -> PolyFq:
        """f(1, x), whose roots are the points (1 : x)"""
        return PolyFq.from_coefficients(self.field, self.coefficients)

    def infinite_root_multiplicity(self) -> int:
        """Multiplicity of the point (0 : 1), i.e. the power of s dividing the form"""
        multiplicity = 0
        for c in reversed(self.coefficients):
            if c:
                break
            multiplicity += 1
        return multiplicity

    def projective_roots(self) -> List[Tuple[Tuple[int, int], int]]:
        """[((s, t), multiplicity), ...] over the points of PG(1, q), for a nonzero form"""
        if self.is_zero():
            raise ValueError("The zero form vanishes at every point")

        affine = self.dehomogenised()
        roots = [((1, x), affine.root_multiplicity(x)) for x in affine.roots()]
        at_infinity = self.infinite_root_multiplicity()
        if at_infinity:
            roots.append(((0, 1), at_infinity))
        return roots

    def elements(self) -> List[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coefficients]

    def __str__(self):
        monomials = ["s^3", "s^2t", "st^2", "t^3"]
        terms = [(m if c == 1 else f"{c}{m}") for c, m in zip(self.coefficients, monomials) if c]
        return "+".join(terms) if terms else "0"


def _binary_form_product(field: FieldSpec, f: List[int], g: List[int]) -> List[int]:
    """Product of binary forms given by their coefficients indexed by the power of t"""
    add = field.add_table
    mul = field.mul_table
    product = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                product[i + j] = add[product[i + j]][mul[x][y]]
    return product


def _permutation_sign(permutation: Tuple[int, ...]) -> int:
    pairs = itertools.combinations(range(len(permutation)), 2)
    inversions = sum(1 for i, j in pairs if permutation[i] > permutation[j])
    return -1 if inversions % 2 else 1


def det_form(m1: MatrixFq, m2: MatrixFq) -> BinaryCubic:
    """det(s*M1 + t*M2) expanded symbolically by the Leibniz formula over the six permutations of three columns"""
    if (m1.rows, m1.cols) != (3, 3) or (m2.rows, m2.cols) != (3, 3):
        raise ValueError(f"det_form requires two 3x3 matrices (got {m1.rows}x{m1.cols} and {m2.rows}x{m2.cols})")

    field = m1.field
    total = [0, 0, 0, 0]
    for permutation in itertools.permutations(range(3)):
        term = [1]
        for r, c in enumerate(permutation):
            term = _binary_form_product(field, term, [m1.get(r, c), m2.get(r, c)])
        if _permutation_sign(permutation) < 0:
            term = [field.neg(x) for x in term]
        total = [field.add(x, y) for x, y in zip(total, term)]
    return BinaryCubic(field, (total[0], total[1], total[2], total[3]))


def factor_type(f: BinaryCubic) -> FactorType:
    """Factorisation pattern of the form over F_q, read off the multiset of its projective roots"""
    if f.is_zero():
        return FactorType.ZERO

    multiplicities = sorted(m for _, m in f.projective_roots())
    if not multiplicities:
        return FactorType.IRREDUCIBLE_CUBIC
    if multiplicities == [1]:
        return FactorType.LINEAR_TIMES_IRREDUCIBLE_QUADRATIC
    if multiplicities == [3]:
        return FactorType.TRIPLE_LINEAR
    if multiplicities == [1, 2]:
        return FactorType.DOUBLE_LINEAR
    if multiplicities == [1, 1, 1]:
        return FactorType.THREE_DISTINCT_LINEAR

    raise ValueError(f"Root multiplicities {multiplicities} of {f} are impossible for a binary cubic")
