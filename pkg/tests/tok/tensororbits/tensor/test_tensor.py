import random
import unittest

from tok.tensororbits.classify import canonical_form
from tok.tensororbits.classify import OrbitLabel
from tok.tensororbits.gf import field_for_order
from tok.tensororbits.gf import field_new
from tok.tensororbits.linalg import MatrixFq
from tok.tensororbits.linalg import row_space
from tok.tensororbits.linalg import Subspace
from tok.tensororbits.tensor import act
from tok.tensororbits.tensor import contraction
from tok.tensororbits.tensor import embed_222
from tok.tensororbits.tensor import embed_223
from tok.tensororbits.tensor import GroupElementH
from tok.tensororbits.tensor import in_Q
from tok.tensororbits.tensor import projective_points
from tok.tensororbits.tensor import q_of
from tok.tensororbits.tensor import QMembership
from tok.tensororbits.tensor import rank_distribution
from tok.tensororbits.tensor import RankDistribution
from tok.tensororbits.tensor import Tensor222
from tok.tensororbits.tensor import Tensor223
from tok.tensororbits.tensor import Tensor233
from tok.tensororbits.tensor.contraction import contraction_dims

from tests.tok.tensororbits.linalg.test_matrixfq import unit_sum

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9]


def elementary(field, i, j, k):
    """The fundamental tensor e_i (x) e_j (x) e_k, one-based"""
    entries = [0] * 18
    entries[(i - 1) * 9 + (j - 1) * 3 + (k - 1)] = 1
    return Tensor233(field, tuple(entries))


class ContractionTestCase(unittest.TestCase):
    def test_fundamental_tensor(self):
        f2 = field_new(2)
        a1 = contraction(elementary(f2, 1, 1, 1), 1)
        self.assertEqual(1, a1.dim)
        self.assertEqual([unit_sum(f2, (1, 1))], a1.basis_matrices())

    def test_o11_representative(self):
        f3 = field_new(3)
        a = canonical_form(OrbitLabel.O11, f3)
        self.assertEqual((2, 2, 3), contraction_dims(a))
        self.assertTrue(contraction(a, 2).spanning[2].is_zero())

    def test_zero_tensor(self):
        self.assertEqual((0, 0, 0), contraction_dims(Tensor233.zero(field_new(5))))

    def test_slice_conventions(self):
        f5 = field_new(5)
        a = Tensor233.from_entries(f5, [x % 5 for x in range(18)])
        for i in range(2):
            for j in range(3):
                for k in range(3):
                    value = a.get(i, j, k)
                    self.assertEqual(value, contraction(a, 1).spanning[i].get(j, k))
                    self.assertEqual(value, contraction(a, 2).spanning[j].get(i, k))
                    self.assertEqual(value, contraction(a, 3).spanning[k].get(i, j))

    def test_dimension_bounds(self):
        rng = random.Random(1)
        for q in SMALL_ORDERS:
            field = field_for_order(q)
            for _ in range(20):
                d1, d2, d3 = contraction_dims(Tensor233.random(field, rng))
                self.assertLessEqual(d1, 2)
                self.assertLessEqual(d2, 3)
                self.assertLessEqual(d3, 3)


class RankDistributionTestCase(unittest.TestCase):
    def test_table_examples(self):
        f2, f3 = field_new(2), field_new(3)
        self.assertEqual(RankDistribution((2, 1, 0)), rank_distribution(canonical_form(OrbitLabel.O5, f2)))
        self.assertEqual(RankDistribution((0, 3, 1)), rank_distribution(canonical_form(OrbitLabel.O14, f3)))
        self.assertEqual(RankDistribution((1, 0, 2)), rank_distribution(canonical_form(OrbitLabel.O9, f2)))
        self.assertEqual("[1,0,2]", str(rank_distribution(canonical_form(OrbitLabel.O9, f2))))

    def test_point_counts(self):
        rng = random.Random(2)
        for q in SMALL_ORDERS:
            field = field_for_order(q)
            for _ in range(20):
                a = Tensor233.random(field, rng)
                dim = contraction(a, 1).dim
                expected = {0: 0, 1: 1, 2: q + 1}[dim]
                self.assertEqual(expected, rank_distribution(a).total)

    def test_projective_points(self):
        f3 = field_new(3)
        basis = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)]
        points = projective_points(f3, basis)
        self.assertEqual(13, len(points))
        self.assertEqual(13, len(set(points)))
        self.assertEqual([(1, 0), (1, 1), (1, 2), (0, 1)], [p[:2] for p in projective_points(f3, basis[:2])])

    def test_invariance_under_h(self):
        rng = random.Random(3)
        for q in SMALL_ORDERS:
            field = field_for_order(q)
            for _ in range(10):
                a = Tensor233.random(field, rng)
                b = act(a, GroupElementH.random(field, rng))
                for axis in [1, 2, 3]:
                    self.assertEqual(rank_distribution(a, axis), rank_distribution(b, axis))
                self.assertEqual(contraction_dims(a), contraction_dims(b))


class GroupActionTestCase(unittest.TestCase):
    def test_identity(self):
        f4 = field_new(2, 2)
        a = Tensor233.random(f4, random.Random(4))
        self.assertEqual(a, act(a, GroupElementH.identity(f4)))

    def test_inverse(self):
        rng = random.Random(5)
        for q in [2, 3, 4, 5]:
            field = field_for_order(q)
            for _ in range(10):
                a = Tensor233.random(field, rng)
                h = GroupElementH.random(field, rng, allow_transpose=True)
                self.assertEqual(a, act(act(a, h), h.inverse()))

    def test_slice_formula(self):
        # the slices transform as M'_i = sum_i' g1[i, i'] g2 M_i' g3^T
        rng = random.Random(6)
        field = field_new(5)
        a = Tensor233.random(field, rng)
        h = GroupElementH.random(field, rng)
        moved = [h.g2 @ m @ h.g3.transpose() for m in a.slices()]
        expected = [moved[0].scale(h.g1.get(i, 0)) + moved[1].scale(h.g1.get(i, 1)) for i in range(2)]
        self.assertEqual(expected, act(a, h).slices())

    def test_transpose(self):
        f2 = field_new(2)
        a = elementary(f2, 1, 2, 3)
        self.assertEqual(elementary(f2, 1, 3, 2), act(a, GroupElementH.transposition(f2)))
        self.assertEqual(a, a.transpose().transpose())

    def test_singular_factor_rejected(self):
        f2 = field_new(2)
        with self.assertRaises(ValueError):
            GroupElementH(MatrixFq.identity(f2, 2), MatrixFq.zero(f2, 3, 3), MatrixFq.identity(f2, 3))


class QMembershipTestCase(unittest.TestCase):
    def test_q_of(self):
        f2 = field_new(2)
        e12 = Subspace.span(f2, 3, [(1, 0, 0), (0, 1, 0)])
        e23 = Subspace.span(f2, 3, [(0, 1, 0), (0, 0, 1)])
        self.assertEqual((e12, e12), q_of(unit_sum(f2, (1, 1), (2, 2))))
        self.assertEqual((e12, e23), q_of(unit_sum(f2, (1, 2), (2, 3))))
        with self.assertRaises(ValueError):
            q_of(unit_sum(f2, (1, 1)))

    def test_q_of_equivariance(self):
        rng = random.Random(8)
        for q in [2, 3, 5]:
            field = field_for_order(q)
            m = unit_sum(field, (1, 2), (2, 3))
            g, h = GroupElementH.random(field, rng).g2, GroupElementH.random(field, rng).g3
            cols, rows = q_of(m)
            self.assertEqual((cols.image(g), rows.image(h.transpose())), q_of(g @ m @ h))
            self.assertEqual(row_space(m @ h), rows.image(h.transpose()))

    def test_in_q_examples(self):
        f2 = field_new(2)
        diagonal = unit_sum(f2, (1, 1), (2, 2))
        self.assertEqual(QMembership.INSIDE, in_Q(unit_sum(f2, (1, 1)), diagonal))
        self.assertEqual(QMembership.COL_ONLY, in_Q(unit_sum(f2, (1, 3)), diagonal))
        self.assertEqual(QMembership.ROW_ONLY, in_Q(unit_sum(f2, (3, 1)), diagonal))
        self.assertEqual(QMembership.OUTSIDE, in_Q(unit_sum(f2, (1, 1)), unit_sum(f2, (2, 2), (3, 3))))

    def test_in_q_preconditions(self):
        f2 = field_new(2)
        with self.assertRaises(ValueError):
            in_Q(unit_sum(f2, (1, 1), (2, 2)), unit_sum(f2, (1, 1), (2, 2)))
        with self.assertRaises(ValueError):
            in_Q(unit_sum(f2, (1, 1)), MatrixFq.identity(f2, 3))


class EmbeddingTestCase(unittest.TestCase):
    def test_embed_223(self):
        f3 = field_new(3)
        self.assertEqual(Tensor233.zero(f3), embed_223(Tensor223.zero(f3)))

        b = Tensor223(f3, tuple(1 if idx == 2 else 0 for idx in range(12)))  # e1 (x) e1 (x) e3
        self.assertEqual(elementary(f3, 1, 1, 3), embed_223(b))

        rep = canonical_form(OrbitLabel.O11, f3)
        restricted = Tensor223(f3, tuple(rep.get(i, j, k) for i in range(2) for j in range(2) for k in range(3)))
        self.assertEqual(rep, embed_223(restricted))

    def test_embed_222(self):
        f2 = field_new(2)
        b = Tensor222(f2, (0, 0, 0, 0, 0, 0, 0, 1))  # e2 (x) e2 (x) e2
        self.assertEqual(elementary(f2, 2, 2, 2), embed_222(b))


class PackedEncodingTestCase(unittest.TestCase):
    def test_most_significant_entry(self):
        f2 = field_new(2)
        self.assertEqual(2**17, elementary(f2, 1, 1, 1).packed())
        self.assertEqual(1, elementary(f2, 2, 3, 3).packed())
        self.assertEqual(elementary(f2, 1, 1, 1), Tensor233.from_packed(f2, 2**17))

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            Tensor233.from_packed(field_new(2), 2**18)
