from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from typing import Deque
from typing import Dict
from typing import List
from typing import Tuple

import numpy as np

from tok.tensororbits.classify.canonicalforms import canonical_form
from tok.tensororbits.classify.orbitlabel import H_LABELS
from tok.tensororbits.classify.orbitlabel import OrbitLabel
from tok.tensororbits.gf.fieldspec import field_for_order
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.echelon import rref_rows
from tok.tensororbits.linalg.echelon import Vector
from tok.tensororbits.linalg.matrixfq import MatrixFq
from tok.tensororbits.oracle.bfs import orbit_bfs
from tok.tensororbits.oracle.generatorset import factor_generators
from tok.tensororbits.oracle.generatorset import GeneratorSet
from tok.tensororbits.oracle.visited import BitsetVisited
from tok.tensororbits.oracle.visited import make_visited
from tok.tensororbits.tensor.contraction import first_contraction_basis
from tok.tensororbits.tensor.groupaction import act
from tok.tensororbits.tensor.groupaction import GroupElementH
from tok.tensororbits.tensor.tensors import Tensor233
from tok.tensororbits.tensor.textformat import format_tensor

log = logging.getLogger(__name__)

Basis = Tuple[Vector, ...]


def tensor_orbit_ids(field: FieldSpec) -> np.ndarray:
    """
    Orbit index of every tensor, by repeated BFS from the smallest tensor not yet reached.  Uses no classifier
    information.
    """
    total = field.q ** Tensor233.size()
    visited = make_visited(total)
    if not isinstance(visited, BitsetVisited):
        raise ValueError(f"Whole-space orbit indexing over F_{field.q} does not fit the memory budget")

    gens = GeneratorSet.standard(field)
    ids = np.full(total, -1, dtype=np.int16)
    next_id = 0
    while True:
        remaining = visited.unvisited()
        if remaining.size == 0:
            break
        record = orbit_bfs(Tensor233.from_packed(field, int(remaining[0])), gens, visited, collect_members=True)
        ids[record.members] = next_id
        next_id += 1

    log.info(f"Found {next_id} orbits over F_{field.q} by exhaustive BFS")
    return ids


class SubspaceOrbitIndex:
    """Orbits of subspaces of M_3(F_q) under M -> g2 M g3^T, discovered lazily by BFS over canonical bases"""

    def __init__(self, field: FieldSpec):
        self.field = field
        identity = MatrixFq.identity(field, 3)
        self.moves = [(g, identity) for g in factor_generators(field, 3)] + [
            (identity, g.transpose()) for g in factor_generators(field, 3)
        ]
        self.ids: Dict[Basis, int] = {}
        self.orbit_count = 0

    def _image(self, basis: Basis, left: MatrixFq, right: MatrixFq) -> Basis:
        images = [(left @ MatrixFq(self.field, 3, 3, v) @ right).entries for v in basis]
        return rref_rows(self.field, images)

    def orbit_id(self, basis: Basis) -> int:
        if basis in self.ids:
            return self.ids[basis]

        orbit_id = self.orbit_count
        self.orbit_count += 1
        self.ids[basis] = orbit_id
        queue: Deque[Basis] = deque([basis])
        while queue:
            current = queue.popleft()
            for left, right in self.moves:
                image = self._image(current, left, right)
                if image not in self.ids:
                    self.ids[image] = orbit_id
                    queue.append(image)
        return orbit_id


@dataclass
class EquivalenceCheckReport:
    q: int
    checked: int = 0
    equivalent_pairs: int = 0
    violations: List[str] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def lines(self) -> List[str]:
        result = [
            f"pairs checked: {self.checked} ({self.equivalent_pairs} in a common orbit)",
            *(f"VIOLATION: {v}" for v in self.violations),
            "PASS" if self.passed else "FAIL",
        ]
        return result

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "passed": self.passed,
            "checked": self.checked,
            "equivalent_pairs": self.equivalent_pairs,
            "violations": self.violations,
        }


def _sample_pairs(field: FieldSpec, samples: int, rng: random.Random) -> List[Tuple[Tensor233, Tensor233]]:
    pairs = [(canonical_form(OrbitLabel.O7, field), canonical_form(OrbitLabel.O7T, field))]
    while len(pairs) < samples:
        kind = len(pairs) % 3
        if kind == 0:
            a = Tensor233.random(field, rng)
            pairs.append((a, act(a, GroupElementH.random(field, rng))))
        elif kind == 1:
            a = act(canonical_form(rng.choice(H_LABELS), field), GroupElementH.random(field, rng))
            b = act(canonical_form(rng.choice(H_LABELS), field), GroupElementH.random(field, rng))
            pairs.append((a, b))
        else:
            pairs.append((Tensor233.random(field, rng), Tensor233.random(field, rng)))
    return pairs


def contraction_equivalence_check(q: int = 2, samples: int = 1000, seed: int = 0) -> EquivalenceCheckReport:
    """
    Two tensors are H-equivalent exactly when their first contraction spaces are equivalent under GL(3) x GL(3).  Both
    sides are decided by independent enumeration: tensor orbits by BFS over the whole space, subspace orbits by BFS
    over canonical bases.
    """
    if q != 2:
        raise ValueError(f"The contraction-equivalence check enumerates the whole space and needs q=2 (got {q})")

    field = field_for_order(q)
    rng = random.Random(seed)
    orbit_ids = tensor_orbit_ids(field)
    subspace_orbits = SubspaceOrbitIndex(field)
    report = EquivalenceCheckReport(q)

    for a, b in _sample_pairs(field, samples, rng):
        same_orbit = bool(orbit_ids[a.packed()] == orbit_ids[b.packed()])
        same_subspace_orbit = subspace_orbits.orbit_id(first_contraction_basis(a)) == subspace_orbits.orbit_id(
            first_contraction_basis(b)
        )
        report.checked += 1
        report.equivalent_pairs += int(same_orbit)
        if same_orbit != same_subspace_orbit:
            report.violations.append(
                f"{format_tensor(a)} / {format_tensor(b)}: same tensor orbit={same_orbit}, "
                f"same subspace orbit={same_subspace_orbit}"
            )

    log.info(f"Checked {report.checked} pairs, {len(report.violations)} violations")
    return report
