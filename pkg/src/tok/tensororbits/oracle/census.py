from __future__ import annotations

import functools
import logging
import multiprocessing
from dataclasses import dataclass
from datetime import datetime
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np

from tok.tensororbits.classify.classifier import classify_222
from tok.tensororbits.classify.classifier import classify_223
from tok.tensororbits.classify.classifier import label_from_basis
from tok.tensororbits.classify.classifier import label_of_subspace
from tok.tensororbits.classify.orbitlabel import LABELS_222
from tok.tensororbits.classify.orbitlabel import LABELS_223
from tok.tensororbits.classify.orbitlabel import OrbitLabel
from tok.tensororbits.gf.fieldspec import field_for_order
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.echelon import rref_rows
from tok.tensororbits.linalg.subspace import spanning_tuple_count
from tok.tensororbits.linalg.subspace import SubspaceGrid
from tok.tensororbits.oracle.runtimeconstants import OracleRuntimeConstants
from tok.tensororbits.tensor.tensors import Tensor233
from tok.tensororbits.tensor.tensors import tensor_type_for_shape
from tok.tensororbits.utils.misc import get_human_readable_elapsed_since
from tok.tensororbits.utils.misc import iterate_index_ranges

log = logging.getLogger(__name__)

Classifier = Callable[[Tensor233], OrbitLabel]

LABEL_COUNT = len(OrbitLabel)

# Admissible H-labels per shape, and the G-projection of each shape's own symmetry group
SHAPE_H_LABELS: Dict[str, List[OrbitLabel]] = {"233": list(OrbitLabel), "223": LABELS_223, "222": LABELS_222}


def g_label_for_shape(label: OrbitLabel, shape: str) -> OrbitLabel:
    if shape == "223":
        return OrbitLabel.O2 if label == OrbitLabel.O4 else label
    if shape == "222":
        return OrbitLabel.O2 if label in (OrbitLabel.O4, OrbitLabel.O4T) else label
    return label.g_label


@functools.lru_cache(maxsize=4)
def _slice_vectors(field: FieldSpec) -> List[Tuple[int, ...]]:
    """Every 3 x 3 slice in packed order, as its flattened digit vector"""
    q = field.q
    vectors = []
    for code in range(q**9):
        digits = []
        for _ in range(9):
            code, d = divmod(code, q)
            digits.append(d)
        vectors.append(tuple(reversed(digits)))
    return vectors


def label_codes(q: int, shape: str, start: int, stop: int, classifier: Optional[Classifier] = None) -> np.ndarray:
    """
    Label codes of the tensors with packed encodings start..stop-1.  Without a classifier override, 2x3x3 tensors are
    labelled from the canonical basis of their first contraction space, which is cached across tensors.
    """
    field = field_for_order(q)
    codes = np.empty(stop - start, dtype=np.uint8)

    if shape == "233" and classifier is None:
        slices = _slice_vectors(field)
        block = q**9
        for offset, packed in enumerate(range(start, stop)):
            first, second = divmod(packed, block)
            basis = rref_rows(field, (slices[first], slices[second]))
            codes[offset] = label_from_basis(field, basis).code
        return codes

    tensor_type = tensor_type_for_shape(shape)
    if shape == "233":
        label_of = classifier
    elif shape == "223":
        label_of = classifier or (lambda b: classify_223(b)[0])
    else:
        label_of = classifier or (lambda b: classify_222(b)[0])

    for offset, packed in enumerate(range(start, stop)):
        codes[offset] = label_of(tensor_type.from_packed(field, packed)).code  # type: ignore[misc]
    return codes


def label_counts(q: int, shape: str, start: int, stop: int, classifier: Optional[Classifier] = None) -> np.ndarray:
    return np.bincount(label_codes(q, shape, start, stop, classifier), minlength=LABEL_COUNT)


@functools.lru_cache(maxsize=4)
def _first_contraction_grids(field: FieldSpec) -> List[SubspaceGrid]:
    """The candidate first contraction spaces of a 2x3x3 tensor: subspaces of M_3(F_q) of dimension 0, 1 and 2"""
    return [SubspaceGrid(field, 9, dim) for dim in range(3)]


def subspace_label_counts(q: int, start: int, stop: int) -> np.ndarray:
    """
    Tensor counts per label over the candidate first contraction spaces with indices start..stop-1, concatenating the
    grids of dimension 0, 1 and 2.  Each space is classified once and stands for every ordered pair of slices spanning
    it.
    """
    field = field_for_order(q)
    counts = np.zeros(LABEL_COUNT, dtype=np.int64)
    offset = 0
    for grid in _first_contraction_grids(field):
        lo = max(start, offset)
        hi = min(stop, offset + len(grid))
        if lo < hi:
            weight = spanning_tuple_count(q, grid.dim, 2)
            for index in range(lo - offset, hi - offset):
                counts[label_of_subspace(field, grid.basis_at(index)).code] += weight
        offset += len(grid)
    return counts


def _run_subspace_census(q: int, threads: int) -> List[np.ndarray]:
    total = sum(len(grid) for grid in _first_contraction_grids(field_for_order(q)))
    ranges = list(iterate_index_ranges(total, OracleRuntimeConstants.census_chunk_size))
    log.debug(f"Classifying {total} first contraction spaces in {len(ranges)} work units on {threads} worker(s)")
    return _map_work_units(subspace_label_counts, [(q, start, stop) for start, stop in ranges], threads)


def _run_sharded(worker: Callable, q: int, shape: str, classifier: Optional[Classifier], threads: int) -> List:
    total = q ** tensor_type_for_shape(shape).size()
    ranges = list(iterate_index_ranges(total, OracleRuntimeConstants.census_chunk_size))
    arguments = [(q, shape, start, stop, classifier) for start, stop in ranges]
    log.debug(f"Classifying {total} tensors in {len(ranges)} work units on {threads} worker(s)")
    return _map_work_units(worker, arguments, threads)


def _map_work_units(worker: Callable, arguments: List[Tuple], threads: int) -> List:
    if threads > 1:
        with multiprocessing.Pool(processes=threads) as pool:
            return pool.starmap(worker, arguments)
    return [worker(*args) for args in arguments]


@dataclass
class CensusResult:
    q: int
    shape: str
    h_counts: Dict[OrbitLabel, int]
    g_counts: Dict[OrbitLabel, int]

    @property
    def total(self) -> int:
        return sum(self.h_counts.values())

    @property
    def expected_total(self) -> int:
        return self.q ** tensor_type_for_shape(self.shape).size()

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "shape": self.shape,
            "total": self.total,
            "H": {str(label): count for label, count in self.h_counts.items()},
            "G": {str(label): count for label, count in self.g_counts.items()},
        }

    def lines(self) -> List[str]:
        result = [f"{label}\t{count}" for label, count in self.h_counts.items()]
        result.append(f"total\t{self.total}")
        result.append(f"{len(self.h_counts)} H-orbits / {len(self.g_counts)} G-orbits")
        return result


def full_census(q: int, shape: str = "233", threads: int = 1, classifier: Optional[Classifier] = None) -> CensusResult:
    """
    Count the tensors of the given shape over F_q per label; labels with no tensors are omitted.  Without a classifier
    override, 2x3x3 tensors are counted through their first contraction spaces; otherwise every tensor is classified.
    """
    if shape not in SHAPE_H_LABELS:
        raise ValueError(f'Unsupported tensor shape "{shape}" - expected one of {list(SHAPE_H_LABELS)}')

    started = datetime.now()
    log.info(f"Starting census of {shape} tensors over F_{q}")
    counts = np.zeros(LABEL_COUNT, dtype=np.int64)
    if shape == "233" and classifier is None:
        partials = _run_subspace_census(q, threads)
    else:
        partials = _run_sharded(label_counts, q, shape, classifier, threads)
    for partial in partials:
        counts += partial

    h_counts = {label: int(counts[label.code]) for label in OrbitLabel if counts[label.code]}
    g_counts: Dict[OrbitLabel, int] = {}
    for label, count in h_counts.items():
        g_label = g_label_for_shape(label, shape)
        g_counts[g_label] = g_counts.get(g_label, 0) + count

    log.info(f"Census over F_{q} complete in {get_human_readable_elapsed_since(started)}")
    return CensusResult(q, shape, h_counts, g_counts)


def label_array(q: int, classifier: Optional[Classifier] = None, threads: int = 1) -> np.ndarray:
    """Label code of every 2x3x3 tensor, indexed by packed encoding"""
    return np.concatenate(_run_sharded(label_codes, q, "233", classifier, threads))
