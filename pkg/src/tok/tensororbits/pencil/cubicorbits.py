from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict
from typing import List
from typing import Optional
from typing import Set
from typing import Union

from tok.tensororbits.gf.fieldspec import field_for_order
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.polyfq import monic_polynomials
from tok.tensororbits.linalg.polyfq import PolyFq
from tok.tensororbits.pencil.mobius import Mobius
from tok.tensororbits.pencil.mobius import mobius_transform
from tok.tensororbits.pencil.mobius import pgl2_elements

log = logging.getLogger(__name__)

FieldLike = Union[int, FieldSpec]


def _as_field(q: FieldLike) -> FieldSpec:
    return q if isinstance(q, FieldSpec) else field_for_order(q)


def _require_irreducible_cubic(f: PolyFq):
    if f.degree != 3 or not f.is_monic() or not f.is_irreducible():
        raise ValueError(f"Expected a monic irreducible cubic (got {f})")


def irreducible_monic_cubics(q: FieldLike) -> List[PolyFq]:
    field = _as_field(q)
    return [f for f in monic_polynomials(field, 3) if f.is_irreducible()]


def pgl_orbit_of_cubic(f: PolyFq, q: Optional[FieldLike] = None) -> Set[PolyFq]:
    """The orbit of f under PGL(2, q); every image of a rootless cubic is again a cubic, so all are monic"""
    _require_irreducible_cubic(f)
    field = f.field if q is None else _as_field(q)
    return {mobius_transform(f, phi) for phi in pgl2_elements(field)}


def stabilizer(f: PolyFq) -> List[Mobius]:
    _require_irreducible_cubic(f)
    return [phi for phi in pgl2_elements(f.field) if mobius_transform(f, phi) == f]


def line_equivalence_witness(f: PolyFq, g: PolyFq) -> Optional[Mobius]:
    """Some phi in PGL(2, q) with f^phi = g, or None"""
    _require_irreducible_cubic(f)
    _require_irreducible_cubic(g)
    return next((phi for phi in pgl2_elements(f.field) if mobius_transform(f, phi) == g), None)


def lines_equivalent_rank3(f: PolyFq, g: PolyFq, q: Optional[FieldLike] = None) -> bool:
    """Whether the constant-rank-3 lines with characteristic polynomials f and g are equivalent"""
    _require_irreducible_cubic(g)
    return g in pgl_orbit_of_cubic(f, q)


@dataclass
class PencilOrbitReport:
    q: int
    cubic_count: int
    orbit_sizes: List[int]
    stabilizer_orders: Dict[int, int]  # stabilizer order -> number of cubics

    @property
    def orbit_count(self) -> int:
        return len(self.orbit_sizes)

    @property
    def expected_cubic_count(self) -> int:
        return (self.q**3 - self.q) // 3

    def is_consistent(self) -> bool:
        """One orbit, (q^3 - q)/3 cubics, every stabiliser of order 3"""
        return (
            self.cubic_count == self.expected_cubic_count
            and self.orbit_count == 1
            and set(self.stabilizer_orders) == {3}
        )

    def lines(self) -> List[str]:
        orders = ", ".join(f"{order} (x{count})" for order, count in sorted(self.stabilizer_orders.items()))
        return [
            f"q={self.q}",
            f"irreducible monic cubics: {self.cubic_count} (expected {self.expected_cubic_count})",
            f"PGL(2,{self.q}) orbits: {self.orbit_count} of sizes {self.orbit_sizes}",
            f"stabilizer orders: {orders}",
        ]

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "consistent": self.is_consistent(),
            "cubic_count": self.cubic_count,
            "expected_cubic_count": self.expected_cubic_count,
            "orbit_sizes": self.orbit_sizes,
            "stabilizer_orders": {str(order): count for order, count in sorted(self.stabilizer_orders.items())},
        }


def pencil_orbit_report(q: FieldLike) -> PencilOrbitReport:
    field = _as_field(q)
    cubics = irreducible_monic_cubics(field)
    log.info(f"Found {len(cubics)} irreducible monic cubics over {field!r}")

    remaining = set(cubics)
    orbit_sizes = []
    while remaining:
        seed = min(remaining, key=lambda f: f.coefficients)
        orbit = pgl_orbit_of_cubic(seed)
        orbit_sizes.append(len(orbit))
        remaining -= orbit

    stabilizer_orders: Dict[int, int] = {}
    for f in cubics:
        order = len(stabilizer(f))
        stabilizer_orders[order] = stabilizer_orders.get(order, 0) + 1

    return PencilOrbitReport(field.q, len(cubics), orbit_sizes, stabilizer_orders)
