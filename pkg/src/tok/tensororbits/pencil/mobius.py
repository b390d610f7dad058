from __future__ import annotations

from dataclasses import dataclass
from typing import List
from typing import Union

from tok.tensororbits.gf.fieldelement import FieldElement
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.matrixfq import MatrixFq
from tok.tensororbits.linalg.polyfq import PolyFq

Scalar = Union[int, FieldElement]


@dataclass(frozen=True)
class Mobius:
    """
    An element [[a, b], [c, d]] of PGL(2, q), scaled so that the first nonzero of (a, b, c, d) is 1.  It acts on the
    right on polynomials of degree n: f^phi(t) = (ct + d)^n f((at + b)/(ct + d)), and f^(phi psi) = (f^phi)^psi for the
    ordinary matrix product phi psi.
    """

    field: FieldSpec
    a: int
    b: int
    c: int
    d: int

    @staticmethod
    def new(field: FieldSpec, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Mobius:
        a, b, c, d = (int(x) for x in (a, b, c, d))
        if field.sub(field.mul(a, d), field.mul(b, c)) == 0:
            raise ValueError(f"Degenerate Mobius transformation [[{a},{b}],[{c},{d}]] over {field!r}")
        lead = next(x for x in (a, b, c, d) if x)
        scale = field.inv(lead)
        return Mobius(field, field.mul(a, scale), field.mul(b, scale), field.mul(c, scale), field.mul(d, scale))

    @staticmethod
    def identity(field: FieldSpec) -> Mobius:
        return Mobius(field, 1, 0, 0, 1)

    def matrix(self) -> MatrixFq:
        return MatrixFq.from_rows(self.field, [[self.a, self.b], [self.c, self.d]])

    def __mul__(self, other: Mobius) -> Mobius:
        product = self.matrix() @ other.matrix()
        return Mobius.new(self.field, *product.entries)

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def pgl2_elements(field: FieldSpec) -> List[Mobius]:
    """All q^3 - q elements of PGL(2, q) in canonical scaling"""
    elements = []
    q = field.q
    for b in range(q):
        for c in range(q):
            for d in range(q):
                if d != field.mul(b, c):
                    elements.append(Mobius(field, 1, b, c, d))
    for c in range(1, q):
        for d in range(q):
            elements.append(Mobius(field, 0, 1, c, d))
    return elements


def mobius_transform_raw(f: PolyFq, phi: Mobius, n: int = 3) -> PolyFq:
    """sum_i f_i (at + b)^i (ct + d)^(n - i), without normalisation"""
    if f.field != phi.field:
        raise ValueError(f"Polynomial over {f.field!r} cannot be moved by a Mobius transformation over {phi.field!r}")
    if f.degree > n:
        raise ValueError(f"Polynomial {f} has degree above {n}")

    field = f.field
    numerator = PolyFq.linear(field, phi.a, phi.b)
    denominator = PolyFq.linear(field, phi.c, phi.d)
    result = PolyFq.zero(field)
    for i in range(n + 1):
        fi = f.coefficient(i)
        if fi:
            result = result + ((numerator**i) * (denominator ** (n - i))).scale(fi)
    return result


def mobius_transform(f: PolyFq, phi: Mobius) -> PolyFq:
    """
    f^phi for a cubic f, made monic when its t^3 coefficient is nonzero and returned as computed otherwise, since the
    action is only defined up to a nonzero scalar.
    """
    if f.degree != 3:
        raise ValueError(f"mobius_transform acts on cubics (got degree {f.degree} for {f})")
    image = mobius_transform_raw(f, phi, n=3)
    return image.monic() if image.degree == 3 else image


def shift_scale_charpoly(f: PolyFq, alpha: Scalar, beta: Scalar) -> PolyFq:
    """charpoly(alpha I + beta C(f)) = beta^n f((t - alpha)/beta), i.e. the image of f under [[1, -alpha], [0, beta]]"""
    field = f.field
    alpha, beta = int(alpha), int(beta)
    if beta == 0:
        raise ValueError("shift_scale_charpoly requires a nonzero scale beta")
    if not f.is_monic():
        raise ValueError(f"shift_scale_charpoly requires a monic polynomial (got {f})")
    return mobius_transform_raw(f, Mobius.new(field, 1, field.neg(alpha), 0, beta), n=f.degree)
