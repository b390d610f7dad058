from __future__ import annotations

import enum
from typing import Dict
from typing import List
from typing import Optional


class OrbitLabel(enum.Enum):
    """The 21 H-orbits of F^2 (x) F^3 (x) F^3 over a finite field"""

    O0 = "o0"
    O1 = "o1"
    O2 = "o2"
    O3 = "o3"
    O4 = "o4"
    O4T = "o4T"
    O5 = "o5"
    O6 = "o6"
    O7 = "o7"
    O7T = "o7T"
    O8 = "o8"
    O9 = "o9"
    O10 = "o10"
    O11 = "o11"
    O11T = "o11T"
    O12 = "o12"
    O13 = "o13"
    O14 = "o14"
    O15 = "o15"
    O16 = "o16"
    O17 = "o17"

    def __str__(self):
        return self.value

    @staticmethod
    def from_string(label: str) -> OrbitLabel:
        try:
            return OrbitLabel(label)
        except ValueError:
            raise ValueError(f'Unknown orbit label "{label}" - expected one of {[str(x) for x in OrbitLabel]}')

    @property
    def is_transposed(self) -> bool:
        return self.value.endswith("T")

    @property
    def transpose_partner(self) -> OrbitLabel:
        """The label of T applied to a tensor in this orbit"""
        return _TRANSPOSE_PARTNERS.get(self, self)

    @property
    def g_label(self) -> OrbitLabel:
        """Projection onto the 18 G-orbits, which identifies each transposed orbit with its partner"""
        return self.transpose_partner if self.is_transposed else self

    @property
    def code(self) -> int:
        """Stable small integer, used for compact per-tensor label arrays"""
        return _CODES[self]

    @staticmethod
    def from_code(code: int) -> OrbitLabel:
        return _LABELS_BY_CODE[code]


_TRANSPOSE_PARTNERS: Dict[OrbitLabel, OrbitLabel] = {
    OrbitLabel.O4: OrbitLabel.O4T,
    OrbitLabel.O4T: OrbitLabel.O4,
    OrbitLabel.O7: OrbitLabel.O7T,
    OrbitLabel.O7T: OrbitLabel.O7,
    OrbitLabel.O11: OrbitLabel.O11T,
    OrbitLabel.O11T: OrbitLabel.O11,
}

_LABELS_BY_CODE: List[OrbitLabel] = list(OrbitLabel)
_CODES: Dict[OrbitLabel, int] = {label: code for code, label in enumerate(_LABELS_BY_CODE)}

H_LABELS: List[OrbitLabel] = list(OrbitLabel)
G_LABELS: List[OrbitLabel] = [label for label in OrbitLabel if not label.is_transposed]

# Labels realised inside the smaller tensor spaces
LABELS_223: List[OrbitLabel] = [
    OrbitLabel.O0,
    OrbitLabel.O1,
    OrbitLabel.O2,
    OrbitLabel.O4,
    OrbitLabel.O4T,
    OrbitLabel.O5,
    OrbitLabel.O6,
    OrbitLabel.O7,
    OrbitLabel.O10,
    OrbitLabel.O11,
]
LABELS_222: List[OrbitLabel] = [
    OrbitLabel.O0,
    OrbitLabel.O1,
    OrbitLabel.O2,
    OrbitLabel.O4,
    OrbitLabel.O4T,
    OrbitLabel.O5,
    OrbitLabel.O6,
    OrbitLabel.O10,
]

# Numbering of the corresponding orbits in Nurmiev's classification of 3 x 3 x 2 tensors over the complex numbers.
# o10, o15 and o17 are empty over an algebraically closed field and have no counterpart.
NURMIEV_LABELS: Dict[OrbitLabel, int] = {
    OrbitLabel.O0: 25,
    OrbitLabel.O1: 24,
    OrbitLabel.O2: 23,
    OrbitLabel.O3: 22,
    OrbitLabel.O4: 23,
    OrbitLabel.O5: 20,
    OrbitLabel.O6: 21,
    OrbitLabel.O7: 19,
    OrbitLabel.O8: 15,
    OrbitLabel.O9: 16,
    OrbitLabel.O11: 18,
    OrbitLabel.O12: 17,
    OrbitLabel.O13: 12,
    OrbitLabel.O14: 9,
    OrbitLabel.O16: 13,
}


def nurmiev_label(label: OrbitLabel) -> Optional[int]:
    """Nurmiev's orbit number for a G-label (H-labels are projected first), or None where there is no counterpart"""
    return NURMIEV_LABELS.get(label.g_label)
