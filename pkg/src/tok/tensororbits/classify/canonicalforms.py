"""
Representatives of the 21 H-orbits.  Each is given by its two first-axis slices (M1, M2), i.e. the tensor
e1 (x) M1 + e2 (x) M2, written with one-based matrix units E_jk.
"""
import functools
import itertools
import logging
from typing import Callable
from typing import Dict
from typing import Sequence
from typing import Tuple
from typing import Union

from tok.tensororbits.classify.orbitlabel import OrbitLabel
from tok.tensororbits.gf.fieldspec import field_for_order
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.linalg.matrixfq import MatrixFq
from tok.tensororbits.tensor.contraction import RankDistribution
from tok.tensororbits.tensor.tensors import Tensor233

log = logging.getLogger(__name__)

Term = Tuple[int, int, int]  # (j, k, coefficient), one-based


def _matrix(field: FieldSpec, *terms: Term) -> MatrixFq:
    entries = [0] * 9
    for j, k, c in terms:
        entries[(j - 1) * 3 + (k - 1)] = field.add(entries[(j - 1) * 3 + (k - 1)], c)
    return MatrixFq(field, 3, 3, tuple(entries))


def _values_avoid_roots(field: FieldSpec, polynomial: Callable[[int], int]) -> bool:
    return all(polynomial(x) != 0 for x in field.elements())


@functools.lru_cache(maxsize=None)
def quadratic_parameters(field: FieldSpec) -> Tuple[int, int]:
    """
    The first (u, v) in canonical order with v != 0 and v*l^2 + u*v*l - 1 != 0 for every l, so that the pencil
    [[s, us + t], [vt, s]] has nowhere-vanishing determinant s^2 - uv st - v t^2.
    """
    f = field
    for u, v in itertools.product(f.elements(), f.nonzero_elements()):
        uv = f.mul(u, v)
        if _values_avoid_roots(f, lambda x: f.sub(f.add(f.mul(v, f.mul(x, x)), f.mul(uv, x)), 1)):
            return u, v
    raise RuntimeError(f"No irreducible quadratic parameters found over {field!r}")  # unreachable over a finite field


@functools.lru_cache(maxsize=None)
def cubic_parameters(field: FieldSpec) -> Tuple[int, int, int]:
    """The first (alpha, beta, gamma) in canonical order with l^3 + gamma l^2 - beta l + alpha != 0 for every l"""
    f = field
    for alpha, beta, gamma in itertools.product(f.elements(), repeat=3):

        def value(x: int) -> int:
            x2 = f.mul(x, x)
            return f.add(f.sub(f.add(f.mul(x2, x), f.mul(gamma, x2)), f.mul(beta, x)), alpha)

        if _values_avoid_roots(f, value):
            return alpha, beta, gamma
    raise RuntimeError(f"No irreducible cubic parameters found over {field!r}")  # unreachable over a finite field


def _base_slices(label: OrbitLabel, field: FieldSpec) -> Sequence[MatrixFq]:
    identity = ((1, 1, 1), (2, 2, 1), (3, 3, 1))
    m = functools.partial(_matrix, field)

    if label in (OrbitLabel.O10, OrbitLabel.O15):
        u, v = quadratic_parameters(field)
        first = ((1, 1, 1), (2, 2, 1), (1, 2, u)) if label == OrbitLabel.O10 else identity + ((1, 2, u),)
        return m(*first), m((1, 2, 1), (2, 1, v))

    if label == OrbitLabel.O17:
        alpha, beta, gamma = cubic_parameters(field)
        return m(*identity), m((1, 2, 1), (2, 3, 1), (3, 1, alpha), (3, 2, beta), (3, 3, gamma))

    slices: Dict[OrbitLabel, Tuple[Tuple[Term, ...], Tuple[Term, ...]]] = {
        OrbitLabel.O0: ((), ()),
        OrbitLabel.O1: (((1, 1, 1),), ()),
        OrbitLabel.O2: (((1, 1, 1), (2, 2, 1)), ()),
        OrbitLabel.O3: (identity, ()),
        OrbitLabel.O4: (((1, 1, 1),), ((1, 2, 1),)),
        OrbitLabel.O5: (((1, 1, 1),), ((2, 2, 1),)),
        OrbitLabel.O6: (((1, 1, 1),), ((1, 2, 1), (2, 1, 1))),
        OrbitLabel.O7: (((1, 3, 1),), ((1, 1, 1), (2, 2, 1))),
        OrbitLabel.O8: (((1, 1, 1),), ((2, 2, 1), (3, 3, 1))),
        OrbitLabel.O9: (((3, 1, 1),), identity),
        OrbitLabel.O11: (((1, 1, 1), (2, 2, 1)), ((1, 2, 1), (2, 3, 1))),
        OrbitLabel.O12: (((1, 1, 1), (2, 2, 1)), ((1, 3, 1), (3, 2, 1))),
        OrbitLabel.O13: (((1, 1, 1), (2, 2, 1)), ((1, 2, 1), (3, 3, 1))),
        OrbitLabel.O14: (((1, 1, 1), (2, 2, 1)), ((2, 2, 1), (3, 3, 1))),
        OrbitLabel.O16: (identity, ((1, 2, 1), (2, 3, 1))),
    }
    first, second = slices[label]
    return m(*first), m(*second)


def canonical_form(label: OrbitLabel, q: Union[int, FieldSpec]) -> Tensor233:
    """The representative of the orbit; transposed labels are T applied to their partner's representative"""
    field = q if isinstance(q, FieldSpec) else field_for_order(q)
    if label.is_transposed:
        return canonical_form(label.transpose_partner, field).transpose()
    return Tensor233.from_slices(field, _base_slices(label, field))


def expected_rank_distribution(label: OrbitLabel, q: int) -> RankDistribution:
    """Rank distribution of the first contraction space of every tensor in the orbit, as a function of q"""
    table = {
        OrbitLabel.O0: (0, 0, 0),
        OrbitLabel.O1: (1, 0, 0),
        OrbitLabel.O2: (0, 1, 0),
        OrbitLabel.O3: (0, 0, 1),
        OrbitLabel.O4: (q + 1, 0, 0),
        OrbitLabel.O5: (2, q - 1, 0),
        OrbitLabel.O6: (1, q, 0),
        OrbitLabel.O7: (1, q, 0),
        OrbitLabel.O8: (1, 1, q - 1),
        OrbitLabel.O9: (1, 0, q),
        OrbitLabel.O10: (0, q + 1, 0),
        OrbitLabel.O11: (0, q + 1, 0),
        OrbitLabel.O12: (0, q + 1, 0),
        OrbitLabel.O13: (0, 2, q - 1),
        OrbitLabel.O14: (0, 3, q - 2),
        OrbitLabel.O15: (0, 1, q),
        OrbitLabel.O16: (0, 1, q),
        OrbitLabel.O17: (0, 0, q + 1),
    }
    return RankDistribution(table[label.g_label])
