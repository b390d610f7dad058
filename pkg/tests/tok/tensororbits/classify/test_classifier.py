import itertools
import random
import unittest
from collections import Counter

import pytest

from tok.tensororbits.classify import canonical_form
from tok.tensororbits.classify import classify
from tok.tensororbits.classify import classify_222
from tok.tensororbits.classify import classify_223
from tok.tensororbits.classify import classify_g
from tok.tensororbits.classify import classify_h
from tok.tensororbits.classify import expected_rank_distribution
from tok.tensororbits.classify import G_LABELS
from tok.tensororbits.classify import H_LABELS
from tok.tensororbits.classify import invariant_signature
from tok.tensororbits.classify import InvariantSignature
from tok.tensororbits.classify import nurmiev_label
from tok.tensororbits.classify import OrbitLabel
from tok.tensororbits.classify.classifier import compute_signature
from tok.tensororbits.classify.classifier import label_from_signature
from tok.tensororbits.classify.classifier import label_of_subspace
from tok.tensororbits.classify.orbitlabel import LABELS_222
from tok.tensororbits.classify.orbitlabel import LABELS_223
from tok.tensororbits.errors import ClassificationError
from tok.tensororbits.gf import field_for_order
from tok.tensororbits.gf import field_new
from tok.tensororbits.oracle.runtimeconstants import OracleRuntimeConstants
from tok.tensororbits.pencil import FactorType
from tok.tensororbits.tensor import act
from tok.tensororbits.tensor import GroupElementH
from tok.tensororbits.tensor import rank_distribution
from tok.tensororbits.tensor import RankDistribution
from tok.tensororbits.tensor import Tensor222
from tok.tensororbits.tensor import Tensor223
from tok.tensororbits.tensor import Tensor233
from tok.tensororbits.tensor.contraction import first_contraction_basis

FIELD_ORDERS = [2, 3, 4, 5, 7, 8, 9]


class CanonicalFormTestCase(unittest.TestCase):
    def test_representatives_classify_to_their_label(self):
        for q in FIELD_ORDERS:
            field = field_for_order(q)
            for label in H_LABELS:
                with self.subTest(q=q, label=str(label)):
                    rep = canonical_form(label, field)
                    self.assertEqual(label, classify_h(rep))
                    self.assertEqual(expected_rank_distribution(label, q), rank_distribution(rep))

    def test_representatives_are_distinct(self):
        for q in [2, 3]:
            reps = [canonical_form(label, q) for label in H_LABELS]
            self.assertEqual(len(H_LABELS), len(set(reps)))

    def test_transposed_representatives(self):
        f3 = field_new(3)
        for label in [OrbitLabel.O4, OrbitLabel.O7, OrbitLabel.O11]:
            partner = label.transpose_partner
            self.assertEqual(canonical_form(partner, f3), canonical_form(label, f3).transpose())
            self.assertEqual(partner, classify_h(canonical_form(label, f3).transpose()))

    def test_symmetric_orbits_are_transpose_closed(self):
        f5 = field_new(5)
        for label in G_LABELS:
            if label.transpose_partner == label:
                with self.subTest(label=str(label)):
                    self.assertEqual(label, classify_h(canonical_form(label, f5).transpose()))

    def test_rank_distribution_table(self):
        self.assertEqual(RankDistribution((2, 1, 0)), expected_rank_distribution(OrbitLabel.O5, 2))
        self.assertEqual(RankDistribution((0, 3, 1)), expected_rank_distribution(OrbitLabel.O14, 3))
        self.assertEqual(RankDistribution((1, 0, 2)), expected_rank_distribution(OrbitLabel.O9, 2))
        self.assertEqual(RankDistribution((0, 0, 6)), expected_rank_distribution(OrbitLabel.O17, 5))
        self.assertEqual(RankDistribution((4, 0, 0)), expected_rank_distribution(OrbitLabel.O4T, 3))


class ClassifierInvarianceTestCase(unittest.TestCase):
    def assert_labels_survive_group_action(self, draws_per_label: int, seed: int):
        rng = random.Random(seed)
        for q in [2, 3, 4, 5]:
            field = field_for_order(q)
            for label in H_LABELS:
                rep = canonical_form(label, field)
                expected_labels = {False: label, True: label.transpose_partner}
                changed = []
                for _ in range(draws_per_label):
                    h = GroupElementH.random(field, rng, allow_transpose=True)
                    image = act(rep, h)
                    if classify_h(image) != expected_labels[h.transpose_flag] or classify_g(image) != label.g_label:
                        changed.append(h)
                with self.subTest(q=q, label=str(label)):
                    self.assertEqual([], changed)

    def test_random_group_elements(self):
        self.assert_labels_survive_group_action(draws_per_label=100, seed=11)

    @pytest.mark.slow
    @unittest.skipUnless(OracleRuntimeConstants.run_slow_tests, "set TOK_RUN_SLOW_TESTS=true for full-size runs")
    def test_ten_thousand_group_elements_per_label(self):
        self.assert_labels_survive_group_action(draws_per_label=10**4, seed=111)

    def test_random_tensors_classify(self):
        rng = random.Random(12)
        for q in FIELD_ORDERS:
            field = field_for_order(q)
            for _ in range(50):
                a = Tensor233.random(field, rng)
                label = classify_h(a)
                h = GroupElementH.random(field, rng)
                self.assertEqual(label, classify_h(act(a, h)))

    def test_generic_tensors_have_pencil_labels(self):
        # a random tensor over a large field almost surely has a two-dimensional A_1 of rank-3 points only
        rng = random.Random(13)
        field = field_for_order(9)
        labels = Counter(classify_h(Tensor233.random(field, rng)) for _ in range(200))
        self.assertTrue(set(labels) <= set(H_LABELS))
        self.assertGreater(labels[OrbitLabel.O14] + labels[OrbitLabel.O15] + labels[OrbitLabel.O17], 150)

    def test_rejects_other_shapes(self):
        with self.assertRaises(ValueError):
            classify_h(Tensor223.zero(field_new(2)))


class SmallShapeTestCase(unittest.TestCase):
    def test_223_over_f2(self):
        f2 = field_new(2)
        h_labels, g_labels = set(), set()
        for entries in itertools.product(range(2), repeat=12):
            h_label, g_label = classify_223(Tensor223(f2, entries))
            h_labels.add(h_label)
            g_labels.add(g_label)
        self.assertEqual(set(LABELS_223), h_labels)
        self.assertEqual(10, len(h_labels))
        self.assertEqual(9, len(g_labels))
        self.assertNotIn(OrbitLabel.O4, g_labels)
        self.assertIn(OrbitLabel.O4T, g_labels)

    def test_222_over_f2(self):
        f2 = field_new(2)
        h_labels, g_labels = set(), set()
        for entries in itertools.product(range(2), repeat=8):
            h_label, g_label = classify_222(Tensor222(f2, entries))
            h_labels.add(h_label)
            g_labels.add(g_label)
        self.assertEqual(set(LABELS_222), h_labels)
        self.assertEqual(8, len(h_labels))
        self.assertEqual(6, len(g_labels))

    def test_222_transposition_stays_in_g_orbit(self):
        f3 = field_new(3)
        b = Tensor222(f3, (1, 0, 0, 0, 0, 1, 0, 0))  # e1 (x) E11 + e2 (x) E12
        self.assertEqual(classify_222(b)[1], classify_222(b.transpose())[1])
        self.assertNotEqual(classify_222(b)[0], classify_222(b.transpose())[0])


class ClassificationReportTestCase(unittest.TestCase):
    def test_line(self):
        result = classify(canonical_form(OrbitLabel.O5, 3))
        self.assertEqual("H=o5 G=o5 rd=[2,2,0] dims=(2,2,2) det=Zero nurmiev=20 rd2=[2,2,0] rd3=[2,2,0]", result.line())

    def test_line_field_order(self):
        for label in H_LABELS:
            fields = classify(canonical_form(label, 2)).line().split()
            keys = [f.split("=")[0] for f in fields]
            self.assertEqual(["H", "G", "rd", "dims", "det", "nurmiev", "rd2", "rd3"], keys)

    def test_labels_without_side_distributions(self):
        for q in [2, 3, 4]:
            field = field_for_order(q)
            for label in H_LABELS:
                basis = first_contraction_basis(canonical_form(label, field))
                with self.subTest(q=q, label=str(label)):
                    self.assertEqual(label, label_of_subspace(field, basis))
                    light = compute_signature(field, basis, side_distributions=False)
                    self.assertIsNone(light.rd2)
                    self.assertIsNone(light.to_dict()["rd3"])

    def test_to_dict(self):
        result = classify(canonical_form(OrbitLabel.O17, 3)).to_dict()
        self.assertEqual("o17", result["H"])
        self.assertEqual("o17", result["G"])
        self.assertEqual([0, 0, 4], result["rd"])
        self.assertEqual([2, 3, 3], result["dims"])
        self.assertEqual("IrreducibleCubic", result["det"])
        self.assertIsNone(result["nurmiev"])

    def test_small_shapes(self):
        f2 = field_new(2)
        b = Tensor222(f2, (1, 0, 0, 0, 0, 1, 0, 0))
        result = classify(b)
        self.assertEqual(OrbitLabel.O4, result.h_label)
        self.assertEqual(OrbitLabel.O2, result.g_label)

    def test_signature(self):
        signature = invariant_signature(canonical_form(OrbitLabel.O13, 5))
        self.assertEqual(FactorType.DOUBLE_LINEAR, signature.det_type)
        self.assertEqual((2, 3, 3), signature.dims)

    def test_inconsistent_signature(self):
        empty = RankDistribution((0, 0, 0))
        signature = InvariantSignature(2, 2, 2, RankDistribution((3, 0, 0)), empty, empty)
        with self.assertRaises(ClassificationError):
            label_from_signature(signature, 2)


class NurmievLabelTestCase(unittest.TestCase):
    def test_mapping(self):
        self.assertEqual(25, nurmiev_label(OrbitLabel.O0))
        self.assertEqual(23, nurmiev_label(OrbitLabel.O4T))
        self.assertEqual(19, nurmiev_label(OrbitLabel.O7T))
        self.assertEqual(9, nurmiev_label(OrbitLabel.O14))
        for label in [OrbitLabel.O10, OrbitLabel.O15, OrbitLabel.O17]:
            self.assertIsNone(nurmiev_label(label))

    def test_labels(self):
        self.assertEqual(21, len(H_LABELS))
        self.assertEqual(18, len(G_LABELS))
        self.assertEqual(OrbitLabel.O11, OrbitLabel.O11T.g_label)
        self.assertEqual(OrbitLabel.O7T, OrbitLabel.from_string("o7T"))
        for label in H_LABELS:
            self.assertEqual(label, OrbitLabel.from_code(label.code))
        with self.assertRaises(ValueError):
            OrbitLabel.from_string("o18")
