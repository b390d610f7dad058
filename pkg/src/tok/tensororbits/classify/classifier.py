from __future__ import annotations

import enum
import functools
import logging
from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import Optional
from typing import Tuple

from tok.tensororbits.classify.orbitlabel import LABELS_222
from tok.tensororbits.classify.orbitlabel import LABELS_223
from tok.tensororbits.classify.orbitlabel import nurmiev_label
from tok.tensororbits.classify.orbitlabel import OrbitLabel
from tok.tensororbits.errors import ClassificationError
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.echelon import rref_rows
from tok.tensororbits.linalg.echelon import Vector
from tok.tensororbits.linalg.matrixfq import MatrixFq
from tok.tensororbits.linalg.matrixfq import rank
from tok.tensororbits.pencil.binarycubic import det_form
from tok.tensororbits.pencil.binarycubic import factor_type
from tok.tensororbits.pencil.binarycubic import FactorType
from tok.tensororbits.tensor.contraction import first_contraction_basis
from tok.tensororbits.tensor.contraction import rank_distribution
from tok.tensororbits.tensor.contraction import projective_points
from tok.tensororbits.tensor.contraction import RankDistribution
from tok.tensororbits.tensor.qmembership import in_Q
from tok.tensororbits.tensor.qmembership import QMembership
from tok.tensororbits.tensor.tensors import embed_222
from tok.tensororbits.tensor.tensors import embed_223
from tok.tensororbits.tensor.tensors import Tensor222
from tok.tensororbits.tensor.tensors import Tensor223
from tok.tensororbits.tensor.tensors import Tensor233

log = logging.getLogger(__name__)

# Large enough to hold every subspace of dimension <= 2 of M_3(F_2)
SIGNATURE_CACHE_SIZE = 1 << 17


class LineSide(enum.Enum):
    """For a line of rank-1 matrices: whether its points share a column space or a row space"""

    COLUMN = "column"
    ROW = "row"


@dataclass(frozen=True)
class InvariantSignature:
    dimA1: int  # noqa: N815
    dimA2: int  # noqa: N815
    dimA3: int  # noqa: N815
    rd: RankDistribution
    rd2: Optional[RankDistribution]
    rd3: Optional[RankDistribution]
    det_type: Optional[FactorType] = None
    q_case: Optional[QMembership] = None
    side: Optional[LineSide] = None

    @property
    def dims(self) -> Tuple[int, int, int]:
        return self.dimA1, self.dimA2, self.dimA3

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dims": list(self.dims),
            "rd": self.rd.to_list(),
            "rd2": None if self.rd2 is None else self.rd2.to_list(),
            "rd3": None if self.rd3 is None else self.rd3.to_list(),
            "det": None if self.det_type is None else str(self.det_type),
            "q_case": None if self.q_case is None else self.q_case.value,
            "side": None if self.side is None else self.side.value,
        }


def _dim_of_sum(field: FieldSpec, vectors) -> int:
    return len(rref_rows(field, list(vectors)))


def compute_signature(
    field: FieldSpec, basis: Tuple[Vector, ...], side_distributions: bool = True
) -> InvariantSignature:
    """
    All orbit invariants of a tensor, computed from the canonical basis of its first contraction space.  Any two tensors
    with the same A_1 are related by a change of basis in the first factor, so this is well defined.  Without
    side_distributions, rd2 and rd3 are left unset; the decision tree does not read them.
    """
    matrices = [MatrixFq(field, 3, 3, v) for v in basis]
    representative = Tensor233.from_slices(field, (matrices + [MatrixFq.zero(field, 3, 3)] * 2)[:2])

    dim_a1 = len(basis)
    dim_a2 = _dim_of_sum(field, [col for m in matrices for col in m.to_columns()])
    dim_a3 = _dim_of_sum(field, [row for m in matrices for row in m.to_rows()])
    rd = rank_distribution(representative, axis=1)
    rd2 = rank_distribution(representative, axis=2) if side_distributions else None
    rd3 = rank_distribution(representative, axis=3) if side_distributions else None

    det_type = None
    q_case = None
    side = None
    if dim_a1 == 2:
        det_type = factor_type(det_form(matrices[0], matrices[1]))

        if rd.a == field.q + 1:
            if dim_a2 == 1:
                side = LineSide.COLUMN
            elif dim_a3 == 1:
                side = LineSide.ROW
        elif rd.a == 1 and rd.b >= 1:
            points = [MatrixFq(field, 3, 3, v) for v in projective_points(field, basis)]
            rank_one = next(m for m in points if rank(m) == 1)
            rank_two = next(m for m in points if rank(m) == 2)
            q_case = in_Q(rank_one, rank_two)

    return InvariantSignature(dim_a1, dim_a2, dim_a3, rd, rd2, rd3, det_type, q_case, side)


@functools.lru_cache(maxsize=SIGNATURE_CACHE_SIZE)
def signature_from_basis(field: FieldSpec, basis: Tuple[Vector, ...]) -> InvariantSignature:
    return compute_signature(field, basis)


def invariant_signature(a: Tensor233) -> InvariantSignature:
    return signature_from_basis(a.field, first_contraction_basis(a))


def label_from_signature(signature: InvariantSignature, q: int) -> OrbitLabel:
    """The orbit decision tree"""
    s = signature
    rd = s.rd

    if s.dimA1 == 0:
        return OrbitLabel.O0

    if s.dimA1 == 1:
        return {1: OrbitLabel.O1, 2: OrbitLabel.O2, 3: OrbitLabel.O3}[rd.counts.index(1) + 1]

    if rd.a == q + 1:
        if s.side == LineSide.COLUMN:
            return OrbitLabel.O4
        if s.side == LineSide.ROW:
            return OrbitLabel.O4T
    elif rd.a == 2:
        return OrbitLabel.O5
    elif rd.a == 1 and rd.b >= 1:
        return {
            QMembership.INSIDE: OrbitLabel.O6,
            QMembership.COL_ONLY: OrbitLabel.O7,
            QMembership.ROW_ONLY: OrbitLabel.O7T,
            QMembership.OUTSIDE: OrbitLabel.O8,
        }[s.q_case]
    elif rd.a == 1:
        return OrbitLabel.O9
    elif rd.a == 0:
        if s.det_type == FactorType.ZERO:
            by_dims = {
                (2, 2): OrbitLabel.O10,
                (2, 3): OrbitLabel.O11,
                (3, 2): OrbitLabel.O11T,
                (3, 3): OrbitLabel.O12,
            }
            if (s.dimA2, s.dimA3) in by_dims:
                return by_dims[(s.dimA2, s.dimA3)]
        else:
            return {
                FactorType.DOUBLE_LINEAR: OrbitLabel.O13,
                FactorType.THREE_DISTINCT_LINEAR: OrbitLabel.O14,
                FactorType.LINEAR_TIMES_IRREDUCIBLE_QUADRATIC: OrbitLabel.O15,
                FactorType.TRIPLE_LINEAR: OrbitLabel.O16,
                FactorType.IRREDUCIBLE_CUBIC: OrbitLabel.O17,
            }[s.det_type]

    raise ClassificationError(f"Invariants {s.to_dict()} over F_{q} match no orbit")


@functools.lru_cache(maxsize=SIGNATURE_CACHE_SIZE)
def label_from_basis(field: FieldSpec, basis: Tuple[Vector, ...]) -> OrbitLabel:
    return label_from_signature(signature_from_basis(field, basis), field.q)


def label_of_subspace(field: FieldSpec, basis: Tuple[Vector, ...]) -> OrbitLabel:
    """Uncached label of the tensors whose first contraction space has the given canonical basis"""
    return label_from_signature(compute_signature(field, basis, side_distributions=False), field.q)


def classify_h(a: Tensor233) -> OrbitLabel:
    if not isinstance(a, Tensor233):
        raise ValueError(f"classify_h expects a Tensor233 (got {type(a).__name__}); embed smaller shapes first")
    return label_from_basis(a.field, first_contraction_basis(a))


def classify_g(a: Tensor233) -> OrbitLabel:
    return classify_h(a).g_label


def classify_223(b: Tensor223) -> Tuple[OrbitLabel, OrbitLabel]:
    """(H-label, G-label) of a 2x2x3 tensor.  Under G of this space o4 joins o2, while o4T stays separate."""
    h_label = classify_h(embed_223(b))
    if h_label not in LABELS_223:
        raise ClassificationError(f"{b!r} classified as {h_label}, which does not occur in F^2 (x) F^2 (x) F^3")
    g_label = OrbitLabel.O2 if h_label == OrbitLabel.O4 else h_label
    return h_label, g_label


def classify_222(b: Tensor222) -> Tuple[OrbitLabel, OrbitLabel]:
    """(H-label, G-label) of a 2x2x2 tensor.  G permutes all three factors, so o2, o4 and o4T form one G-orbit."""
    h_label = classify_h(embed_222(b))
    if h_label not in LABELS_222:
        raise ClassificationError(f"{b!r} classified as {h_label}, which does not occur in F^2 (x) F^2 (x) F^2")
    g_label = OrbitLabel.O2 if h_label in (OrbitLabel.O4, OrbitLabel.O4T) else h_label
    return h_label, g_label


@dataclass(frozen=True)
class Classification:
    """Everything the classify command reports for one tensor"""

    h_label: OrbitLabel
    g_label: OrbitLabel
    signature: InvariantSignature
    nurmiev: Optional[int]

    def line(self) -> str:
        s = self.signature
        det = "-" if s.det_type is None else str(s.det_type)
        nurmiev = "-" if self.nurmiev is None else str(self.nurmiev)
        dims = f"({s.dimA1},{s.dimA2},{s.dimA3})"
        documented = f"H={self.h_label} G={self.g_label} rd={s.rd} dims={dims} det={det} nurmiev={nurmiev}"
        return f"{documented} rd2={s.rd2} rd3={s.rd3}"

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"H": str(self.h_label), "G": str(self.g_label)}
        result.update(self.signature.to_dict())
        result["nurmiev"] = self.nurmiev
        return result


def classify(tensor) -> Classification:
    """Full classification report of a tensor of any supported shape"""
    if isinstance(tensor, Tensor223):
        h_label, g_label = classify_223(tensor)
        embedded = embed_223(tensor)
    elif isinstance(tensor, Tensor222):
        h_label, g_label = classify_222(tensor)
        embedded = embed_222(tensor)
    else:
        h_label = classify_h(tensor)
        g_label = h_label.g_label
        embedded = tensor

    return Classification(h_label, g_label, invariant_signature(embedded), nurmiev_label(g_label))
