import logging
from typing import Iterable
from typing import Set
from typing import Union

import numpy as np
import psutil  # type: ignore

from tok.tensororbits.errors import MemoryBudgetExceeded
from tok.tensororbits.oracle.runtimeconstants import OracleRuntimeConstants

log = logging.getLogger(__name__)

# rough per-entry cost of a Python set of ints
HASH_ENTRY_BYTES = 64


def memory_budget_bytes() -> int:
    configured = OracleRuntimeConstants.memory_cap_mb * 1024 * 1024
    available = psutil.virtual_memory().available
    return min(configured, available)


class BitsetVisited:
    """Visited set over the packed encodings 0..total-1, one bit per state"""

    def __init__(self, total: int):
        self.total = total
        self.bits = np.zeros((total + 7) // 8, dtype=np.uint8)
        self.count = 0

    def add_new(self, codes: np.ndarray) -> np.ndarray:
        """Mark codes as visited and return the distinct ones that were not visited before"""
        codes = np.unique(np.asarray(codes, dtype=np.int64))
        if codes.size == 0:
            return codes
        byte_index = codes >> 3
        masks = np.left_shift(1, codes & 7).astype(np.uint8)
        unseen = (self.bits[byte_index] & masks) == 0
        new_codes = codes[unseen]
        np.bitwise_or.at(self.bits, byte_index[unseen], masks[unseen])
        self.count += int(new_codes.size)
        return new_codes

    def contains(self, code: int) -> bool:
        return bool(self.bits[code >> 3] & (1 << (code & 7)))

    def unvisited(self) -> np.ndarray:
        """Codes not yet visited, in increasing order"""
        flags = np.unpackbits(self.bits, bitorder="little")[: self.total]
        return np.flatnonzero(flags == 0)


class HashVisited:
    """Visited set for state spaces too large for a bitset; bounded by the memory budget"""

    def __init__(self, max_entries: int):
        self.max_entries = max_entries
        self.members: Set[int] = set()

    @property
    def count(self) -> int:
        return len(self.members)

    def add_new(self, codes: Union[np.ndarray, Iterable[int]]) -> np.ndarray:
        new_codes = [c for c in np.unique(np.asarray(codes, dtype=np.int64)).tolist() if c not in self.members]
        self.members.update(new_codes)
        if len(self.members) > self.max_entries:
            raise MemoryBudgetExceeded(
                f"Visited set grew past {self.max_entries} entries; raise TOK_MEMORY_CAP_MB to enumerate larger orbits"
            )
        return np.array(new_codes, dtype=np.int64)

    def contains(self, code: int) -> bool:
        return code in self.members


Visited = Union[BitsetVisited, HashVisited]


def make_visited(total: int) -> Visited:
    """A bitset when the whole state space fits the memory budget, otherwise a bounded hash set"""
    budget = memory_budget_bytes()
    bitset_bytes = (total + 7) // 8
    if bitset_bytes <= budget:
        log.debug(f"Using a {bitset_bytes}-byte bitset visited set over {total} states")
        return BitsetVisited(total)

    log.info(f"Bitset over {total} states exceeds the {budget}-byte budget; falling back to a hash set")
    return HashVisited(max(budget // HASH_ENTRY_BYTES, 1))
