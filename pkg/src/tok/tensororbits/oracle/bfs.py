from __future__ import annotations

import logging
from dataclasses import dataclass
from datetime import datetime
from typing import List
from typing import Optional

import numpy as np

from tok.tensororbits.classify.classifier import classify_h
from tok.tensororbits.classify.orbitlabel import OrbitLabel
from tok.tensororbits.oracle.generatorset import GeneratorSet
from tok.tensororbits.oracle.generatorset import PackedCodec
from tok.tensororbits.oracle.runtimeconstants import OracleRuntimeConstants
from tok.tensororbits.oracle.visited import make_visited
from tok.tensororbits.oracle.visited import Visited
from tok.tensororbits.tensor.tensors import Tensor233
from tok.tensororbits.utils.misc import get_human_readable_elapsed_since

log = logging.getLogger(__name__)

# Whole-space and single-orbit enumeration both need 18-digit packed codes to fit a signed 64-bit integer
MAX_BFS_FIELD_ORDER = 9


@dataclass
class OrbitRecord:
    representative: Tensor233
    size: int
    label: OrbitLabel
    members: Optional[np.ndarray] = None  # sorted packed codes, when collected

    @property
    def packed(self) -> int:
        return self.representative.packed()


def orbit_bfs(
    a: Tensor233,
    gens: GeneratorSet,
    visited: Optional[Visited] = None,
    collect_members: bool = False,
) -> OrbitRecord:
    """
    Breadth-first closure of {a} under the generators.  A shared visited set may be passed in, in which case a must not
    have been visited already; this is how disjointness of several orbits is checked.
    """
    field = a.field
    if field != gens.field:
        raise ValueError(f"Tensor over {field!r} cannot be moved by generators over {gens.field!r}")
    if field.q > MAX_BFS_FIELD_ORDER:
        raise ValueError(f"Orbit enumeration supports q <= {MAX_BFS_FIELD_ORDER} (got {field.q})")

    started = datetime.now()
    codec = PackedCodec(field)
    maps = gens.linear_maps()
    chunk_size = OracleRuntimeConstants.bfs_frontier_chunk_size

    if visited is None:
        visited = make_visited(field.q ** Tensor233.size())

    seed = a.packed()
    if visited.contains(seed):
        raise ValueError(f"Seed {a!r} has already been visited")

    frontier = visited.add_new(np.array([seed], dtype=np.int64))
    found: List[np.ndarray] = [frontier]
    size = 1
    depth = 0
    while frontier.size:
        next_frontier: List[np.ndarray] = []
        for start in range(0, frontier.size, chunk_size):
            chunk = frontier[start : start + chunk_size]
            digits = codec.unpack(chunk)
            for linear_map in maps:
                new_codes = visited.add_new(codec.pack(codec.apply(linear_map, digits)))
                if new_codes.size:
                    next_frontier.append(new_codes)
                    size += int(new_codes.size)

        frontier = np.concatenate(next_frontier) if next_frontier else np.empty(0, dtype=np.int64)
        if collect_members and frontier.size:
            found.append(frontier)
        depth += 1
        log.debug(f"BFS depth {depth}: frontier {frontier.size}, orbit size so far {size}")

    members = np.sort(np.concatenate(found)) if collect_members else None
    label = classify_h(a)
    log.info(f"Orbit of {label} has size {size} (BFS depth {depth}, {get_human_readable_elapsed_since(started)})")
    return OrbitRecord(a, size, label, members)
