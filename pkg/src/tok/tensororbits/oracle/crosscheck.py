from __future__ import annotations

import logging
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from datetime import datetime
from typing import Dict
from typing import List
from typing import Optional

import numpy as np

from tok.tensororbits.classify.canonicalforms import canonical_form
from tok.tensororbits.classify.orbitlabel import G_LABELS
from tok.tensororbits.classify.orbitlabel import H_LABELS
from tok.tensororbits.classify.orbitlabel import OrbitLabel
from tok.tensororbits.gf.fieldspec import field_for_order
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.oracle.bfs import orbit_bfs
from tok.tensororbits.oracle.census import Classifier
from tok.tensororbits.oracle.census import label_array
from tok.tensororbits.oracle.generatorset import GeneratorSet
from tok.tensororbits.oracle.visited import make_visited
from tok.tensororbits.tensor.tensors import Tensor233
from tok.tensororbits.tensor.textformat import format_tensor
from tok.tensororbits.utils.misc import get_human_readable_elapsed_since

log = logging.getLogger(__name__)


def action_kernel_order(q: int) -> int:
    """Order of the kernel {(aI, bI, cI) : abc = 1} of H acting on tensors"""
    return (q - 1) ** 2


@dataclass
class OrbitComparison:
    label: OrbitLabel
    bfs_size: int
    census_count: int
    homogeneous: bool
    size_divides_group_order: bool

    @property
    def passed(self) -> bool:
        return self.bfs_size == self.census_count and self.homogeneous and self.size_divides_group_order

    def to_dict(self) -> dict:
        return {
            "label": str(self.label),
            "bfs": self.bfs_size,
            "census": self.census_count,
            "homogeneous": self.homogeneous,
            "size_divides_group_order": self.size_divides_group_order,
            "passed": self.passed,
        }


@dataclass
class CrossCheckReport:
    q: int
    h_rows: List[OrbitComparison] = dataclass_field(default_factory=list)
    g_rows: List[OrbitComparison] = dataclass_field(default_factory=list)
    mismatches: List[str] = dataclass_field(default_factory=list)
    counterexamples: List[str] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def lines(self) -> List[str]:
        result = ["orbit\tbfs\tcensus\tstatus"]
        rows = [("H", row) for row in self.h_rows] + [("G", row) for row in self.g_rows]
        for prefix, row in rows:
            result.append(f"{prefix}:{row.label}\t{row.bfs_size}\t{row.census_count}\t{'ok' if row.passed else 'FAIL'}")
        result.extend(f"MISMATCH: {m}" for m in self.mismatches)
        result.extend(f"COUNTEREXAMPLE: {c}" for c in self.counterexamples)
        result.append("PASS" if self.passed else "FAIL")
        return result

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "passed": self.passed,
            "H": [row.to_dict() for row in self.h_rows],
            "G": [row.to_dict() for row in self.g_rows],
            "mismatches": self.mismatches,
            "counterexamples": self.counterexamples,
        }


def census_matches_bfs(q: int = 2, classifier: Optional[Classifier] = None, threads: int = 1) -> CrossCheckReport:
    """
    Cross-validate the classifier against orbit enumeration: BFS from each canonical form must visit exactly the tensors
    the census gives that label, the orbits must be disjoint and cover the space, each G-orbit must be exactly the
    union of its H-orbits, and every orbit size must divide |H| over the kernel of the action.
    """
    if q != 2:
        raise ValueError(f"The BFS cross-check enumerates whole orbits and is only supported for q=2 (got {q})")

    started = datetime.now()
    field = field_for_order(q)
    report = CrossCheckReport(q)
    total = q ** Tensor233.size()

    labels = label_array(q, classifier, threads)
    census = np.bincount(labels, minlength=len(OrbitLabel))

    gens = GeneratorSet.standard(field)
    h1, h2, h3 = gens.expected_group_orders()
    effective_order = (h1 * h2 * h3) // action_kernel_order(q)
    if not gens.generates_h():
        report.mismatches.append(f"Generators span groups of orders {gens.group_orders()}, expected {(h1, h2, h3)}")

    visited = make_visited(total)
    members_by_label: Dict[OrbitLabel, np.ndarray] = {}
    for label in H_LABELS:
        representative = canonical_form(label, field)
        seed_label = OrbitLabel.from_code(int(labels[representative.packed()]))
        if seed_label != label:
            report.mismatches.append(f"Representative of {label} is classified as {seed_label}")
            report.counterexamples.append(format_tensor(representative))

        if visited.contains(representative.packed()):
            report.mismatches.append(f"Representative of {label} lies in an orbit that was already enumerated")
            report.counterexamples.append(format_tensor(representative))
            continue

        record = orbit_bfs(representative, gens, visited, collect_members=True)
        members = record.members if record.members is not None else np.empty(0, dtype=np.int64)
        members_by_label[label] = members

        foreign = members[labels[members] != seed_label.code]
        if foreign.size:
            offender = Tensor233.from_packed(field, int(foreign[0]))
            offender_label = OrbitLabel.from_code(int(labels[foreign[0]]))
            report.mismatches.append(f"Orbit of {label} contains {foreign.size} tensors labelled otherwise")
            report.counterexamples.append(f"{format_tensor(offender)}  # labelled {offender_label}, orbit of {label}")

        row = OrbitComparison(
            label,
            record.size,
            int(census[label.code]),
            homogeneous=foreign.size == 0,
            size_divides_group_order=effective_order % record.size == 0,
        )
        report.h_rows.append(row)
        if row.bfs_size != row.census_count:
            report.mismatches.append(
                f"Orbit of {label} has {row.bfs_size} tensors but the census counts {row.census_count}"
            )
        if not row.size_divides_group_order:
            report.mismatches.append(f"Orbit size {row.bfs_size} of {label} does not divide {effective_order}")

    covered = sum(row.bfs_size for row in report.h_rows)
    if covered != total:
        report.mismatches.append(f"Orbits from the canonical forms cover {covered} of {total} tensors")

    _check_g_refinement(report, field, labels, members_by_label)

    log.info(f"Cross-check over F_{q} finished in {get_human_readable_elapsed_since(started)}: passed={report.passed}")
    return report


def _check_g_refinement(
    report: CrossCheckReport, field: FieldSpec, labels: np.ndarray, members_by_label: Dict[OrbitLabel, np.ndarray]
):
    """Each G-orbit must be exactly its H-orbit, or the union of an H-orbit and its transpose partner"""
    gens = GeneratorSet.standard(field, include_transpose=True)
    visited = make_visited(field.q ** Tensor233.size())
    for g_label in G_LABELS:
        predicted = {g_label, g_label.transpose_partner}
        if any(label not in members_by_label for label in predicted):
            continue
        predicted_size = sum(int(members_by_label[label].size) for label in predicted)

        record = orbit_bfs(canonical_form(g_label, field), gens, visited, collect_members=True)
        members = record.members if record.members is not None else np.empty(0, dtype=np.int64)
        found_labels = {OrbitLabel.from_code(int(code)) for code in np.unique(labels[members])}
        homogeneous = found_labels <= predicted

        report.g_rows.append(OrbitComparison(g_label, record.size, predicted_size, homogeneous, True))
        if record.size != predicted_size or not homogeneous:
            report.mismatches.append(
                f"G-orbit of {g_label} has {record.size} tensors with labels {sorted(str(x) for x in found_labels)}, "
                f"expected {predicted_size} with labels {sorted(str(x) for x in predicted)}"
            )
