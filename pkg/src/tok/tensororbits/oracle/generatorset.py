from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable
from typing import Iterable
from typing import List
from typing import Set
from typing import Tuple
from typing import TypeVar

import numpy as np

from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.matrixfq import general_linear_group_order
from tok.tensororbits.linalg.matrixfq import MatrixFq
from tok.tensororbits.tensor.groupaction import act
from tok.tensororbits.tensor.groupaction import GroupElementH
from tok.tensororbits.tensor.tensors import Tensor233

log = logging.getLogger(__name__)

G = TypeVar("G")


def mulclose(generators: Iterable[G], multiply: Callable[[G, G], G]) -> Set[G]:
    """Closure of the generators under multiplication, grown one generator-layer at a time"""
    gens = list(generators)
    elements = set(gens)
    boundary = list(elements)
    while boundary:
        next_boundary = []
        for a in gens:
            for b in boundary:
                c = multiply(a, b)
                if c not in elements:
                    elements.add(c)
                    next_boundary.append(c)
        boundary = next_boundary
    return elements


def factor_generators(field: FieldSpec, n: int) -> List[MatrixFq]:
    """
    Generators of GL(n, q): the transvection I + E_12, diag(w, 1, ..., 1) for a primitive element w (omitted when it is
    the identity, i.e. q = 2), and the cyclic permutation e_i -> e_(i+1).
    """
    transvection = MatrixFq.identity(field, n) + MatrixFq.unit(field, n, n, 0, 1)
    scaling = MatrixFq.diagonal(field, [field.primitive_element] + [1] * (n - 1))
    cycle = MatrixFq.from_rows(field, [[1 if i == (j + 1) % n else 0 for j in range(n)] for i in range(n)])

    generators = [transvection]
    if scaling != MatrixFq.identity(field, n):
        generators.append(scaling)
    generators.append(cycle)
    return generators


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of H = GL(2,q) x GL(3,q) x GL(3,q), each acting in one factor, optionally with the factor swap T"""

    field: FieldSpec
    elements: Tuple[GroupElementH, ...]
    includes_transpose: bool = False

    @staticmethod
    def standard(field: FieldSpec, include_transpose: bool = False) -> GeneratorSet:
        identities = [MatrixFq.identity(field, n) for n in (2, 3, 3)]
        elements = []
        for factor, n in enumerate((2, 3, 3)):
            for g in factor_generators(field, n):
                matrices = list(identities)
                matrices[factor] = g
                elements.append(GroupElementH(*matrices))
        if include_transpose:
            elements.append(GroupElementH.transposition(field))
        return GeneratorSet(field, tuple(elements), include_transpose)

    def group_orders(self) -> Tuple[int, int, int]:
        """Orders of the groups generated in each factor, by explicit closure"""
        orders = []
        for factor, n in enumerate((2, 3, 3)):
            identity = MatrixFq.identity(self.field, n)
            gens = [(h.g1, h.g2, h.g3)[factor] for h in self.elements]
            gens = [g for g in gens if g != identity]
            orders.append(len(mulclose(gens, lambda a, b: a @ b)) if gens else 1)
        return orders[0], orders[1], orders[2]

    def expected_group_orders(self) -> Tuple[int, int, int]:
        q = self.field.q
        return general_linear_group_order(q, 2), general_linear_group_order(q, 3), general_linear_group_order(q, 3)

    def generates_h(self) -> bool:
        return self.group_orders() == self.expected_group_orders()

    def linear_maps(self) -> List[np.ndarray]:
        """
        Each generator as an 18 x 18 matrix L over F_q acting on coefficient vectors: column c of L is the image of the
        c-th unit tensor.
        """
        maps = []
        for h in self.elements:
            columns = []
            for c in range(Tensor233.size()):
                unit = [0] * Tensor233.size()
                unit[c] = 1
                columns.append(act(Tensor233(self.field, tuple(unit)), h).a)
            maps.append(np.array(columns, dtype=np.uint8).T.copy())
        return maps


class PackedCodec:
    """Vectorised conversion between packed base-q codes and coefficient digit arrays, plus linear maps on them"""

    def __init__(self, field: FieldSpec, size: int = 18):
        self.field = field
        self.size = size
        if field.q**size > np.iinfo(np.int64).max:
            raise ValueError(f"Packed codes of {size} digits over F_{field.q} overflow 64-bit integers")
        self.powers = np.array([field.q ** (size - 1 - i) for i in range(size)], dtype=np.int64)

    def unpack(self, codes: np.ndarray) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        return ((codes[:, None] // self.powers[None, :]) % self.field.q).astype(np.uint8)

    def pack(self, digits: np.ndarray) -> np.ndarray:
        return digits.astype(np.int64) @ self.powers

    def apply(self, linear_map: np.ndarray, digits: np.ndarray) -> np.ndarray:
        """Rows of digits mapped by v -> L v over F_q"""
        field = self.field
        if field.is_prime_field:
            return ((digits.astype(np.int64) @ linear_map.T.astype(np.int64)) % field.p).astype(np.uint8)

        result = np.zeros_like(digits)
        for c in range(self.size):
            column = linear_map[:, c]
            if column.any():
                contribution = field.np_mul[column[None, :], digits[:, c : c + 1]]
                result = field.np_add[result, contribution]
        return result

    def apply_packed(self, linear_map: np.ndarray, codes: np.ndarray) -> np.ndarray:
        return self.pack(self.apply(linear_map, self.unpack(codes)))
