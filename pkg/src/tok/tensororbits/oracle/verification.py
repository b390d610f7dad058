from __future__ import annotations

import logging
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from typing import List
from typing import Optional

from tok.tensororbits.classify.canonicalforms import canonical_form
from tok.tensororbits.classify.canonicalforms import expected_rank_distribution
from tok.tensororbits.classify.classifier import classify_h
from tok.tensororbits.classify.orbitlabel import G_LABELS
from tok.tensororbits.classify.orbitlabel import H_LABELS
from tok.tensororbits.gf.fieldspec import field_for_order
from tok.tensororbits.oracle.census import CensusResult
from tok.tensororbits.oracle.census import full_census
from tok.tensororbits.oracle.crosscheck import census_matches_bfs
from tok.tensororbits.oracle.crosscheck import CrossCheckReport
from tok.tensororbits.tensor.contraction import rank_distribution

log = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    q: int
    failures: List[str] = dataclass_field(default_factory=list)
    census: Optional[CensusResult] = None
    cross_check: Optional[CrossCheckReport] = None

    @property
    def passed(self) -> bool:
        return not self.failures and (self.cross_check is None or self.cross_check.passed)

    def lines(self) -> List[str]:
        result = [f"canonical forms over F_{self.q}: {len(H_LABELS)} labels checked"]
        if self.census is not None:
            result.extend(self.census.lines())
        if self.cross_check is not None:
            result.extend(self.cross_check.lines())
        result.extend(f"FAILURE: {f}" for f in self.failures)
        result.append("PASS" if self.passed else "FAIL")
        return result

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "passed": self.passed,
            "canonical_forms_checked": len(H_LABELS),
            "failures": self.failures,
            "census": None if self.census is None else self.census.to_dict(),
            "cross_check": None if self.cross_check is None else self.cross_check.to_dict(),
        }


def run_verification(q: int, full: bool = False, bfs_cross_check: bool = False, threads: int = 1) -> VerificationReport:
    """
    Canonical forms classify to their own labels with the tabulated rank distributions; optionally the whole space is
    censused (21 H-orbits, 18 G-orbits, counts summing to q^18) and cross-checked against BFS.
    """
    field = field_for_order(q)
    report = VerificationReport(q)

    for label in H_LABELS:
        representative = canonical_form(label, field)
        found = classify_h(representative)
        if found != label:
            report.failures.append(f"Canonical form of {label} classifies as {found}")
        rd = rank_distribution(representative)
        expected = expected_rank_distribution(label, q)
        if rd != expected:
            report.failures.append(f"Canonical form of {label} has rank distribution {rd}, expected {expected}")

    if full:
        census = full_census(q, threads=threads)
        report.census = census
        if len(census.h_counts) != len(H_LABELS) or len(census.g_counts) != len(G_LABELS):
            report.failures.append(f"Census found {len(census.h_counts)} H-orbits and {len(census.g_counts)} G-orbits")
        if census.total != census.expected_total:
            report.failures.append(f"Census counts sum to {census.total}, expected {census.expected_total}")

    if bfs_cross_check:
        report.cross_check = census_matches_bfs(q, threads=threads)

    log.info(f"Verification over F_{q}: passed={report.passed}")
    return report
