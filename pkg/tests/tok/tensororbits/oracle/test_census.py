import unittest

import numpy as np
import pytest

from tok.tensororbits.classify import classify_h
from tok.tensororbits.classify import G_LABELS
from tok.tensororbits.classify import H_LABELS
from tok.tensororbits.classify import OrbitLabel
from tok.tensororbits.classify.orbitlabel import LABELS_222
from tok.tensororbits.classify.orbitlabel import LABELS_223
from tok.tensororbits.oracle import census_matches_bfs
from tok.tensororbits.oracle import contraction_equivalence_check
from tok.tensororbits.oracle import full_census
from tok.tensororbits.oracle import label_array
from tok.tensororbits.oracle import run_verification
from tok.tensororbits.oracle.census import subspace_label_counts
from tok.tensororbits.oracle.crosscheck import action_kernel_order
from tok.tensororbits.oracle.runtimeconstants import OracleRuntimeConstants

from tests.mocks.corruptedclassifier import merged_o11_classifier
from tests.mocks.corruptedclassifier import swapped_o7_classifier


class CensusTestCase(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.census = full_census(2)
        cls.labels = label_array(2)

    def test_orbit_counts_over_f2(self):
        self.assertEqual(set(H_LABELS), set(self.census.h_counts))
        self.assertEqual(set(G_LABELS), set(self.census.g_counts))
        self.assertEqual(262144, self.census.total)
        self.assertEqual(self.census.expected_total, self.census.total)
        self.assertEqual("21 H-orbits / 18 G-orbits", self.census.lines()[-1])

    def test_known_orbit_sizes(self):
        counts = self.census.h_counts
        self.assertEqual(1, counts[OrbitLabel.O0])
        self.assertEqual(147, counts[OrbitLabel.O1])
        self.assertEqual(882, counts[OrbitLabel.O2])
        self.assertEqual(504, counts[OrbitLabel.O3])

    def test_transposed_orbits_have_equal_sizes(self):
        counts = self.census.h_counts
        for label in [OrbitLabel.O4, OrbitLabel.O7, OrbitLabel.O11]:
            self.assertEqual(counts[label], counts[label.transpose_partner])
            self.assertEqual(2 * counts[label], self.census.g_counts[label])

    def test_sharded_census_agrees(self):
        sharded = full_census(2, threads=2)
        self.assertEqual(self.census.h_counts, sharded.h_counts)

    def test_to_dict(self):
        result = self.census.to_dict()
        self.assertEqual(262144, result["total"])
        self.assertEqual(147, result["H"]["o1"])
        self.assertEqual(18, len(result["G"]))

    def test_label_array(self):
        self.assertEqual(262144, self.labels.size)
        self.assertEqual(OrbitLabel.O0.code, int(self.labels[0]))

    def test_subspace_counts_match_per_tensor_labels(self):
        per_tensor = np.bincount(self.labels, minlength=len(OrbitLabel))
        for label in OrbitLabel:
            self.assertEqual(int(per_tensor[label.code]), self.census.h_counts.get(label, 0))

    def test_classifier_override_counts_every_tensor(self):
        per_tensor = full_census(2, classifier=classify_h)
        self.assertEqual(self.census.h_counts, per_tensor.h_counts)

    def test_subspace_work_units(self):
        grids_total = 1 + 511 + 43435
        counts = subspace_label_counts(2, 0, grids_total)
        self.assertEqual(262144, int(counts.sum()))
        split = subspace_label_counts(2, 0, 600) + subspace_label_counts(2, 600, grids_total)
        self.assertEqual(counts.tolist(), split.tolist())


class SmallShapeCensusTestCase(unittest.TestCase):
    def test_223_over_f2(self):
        census = full_census(2, shape="223")
        self.assertEqual(2**12, census.total)
        self.assertEqual(set(LABELS_223), set(census.h_counts))
        self.assertEqual(9, len(census.g_counts))
        self.assertNotIn(OrbitLabel.O4, census.g_counts)

    def test_222_over_f2(self):
        census = full_census(2, shape="222")
        self.assertEqual(2**8, census.total)
        self.assertEqual(set(LABELS_222), set(census.h_counts))
        self.assertEqual(6, len(census.g_counts))

    def test_unknown_shape(self):
        with self.assertRaises(ValueError):
            full_census(2, shape="333")


class CrossCheckTestCase(unittest.TestCase):
    def test_classifier_matches_orbit_enumeration(self):
        report = census_matches_bfs(2)
        self.assertTrue(report.passed, "\n".join(report.lines()))
        self.assertEqual(21, len(report.h_rows))
        self.assertEqual(18, len(report.g_rows))
        self.assertEqual(262144, sum(row.bfs_size for row in report.h_rows))
        self.assertEqual("PASS", report.lines()[-1])

    def test_swapped_labels_are_detected(self):
        report = census_matches_bfs(2, classifier=swapped_o7_classifier)
        self.assertFalse(report.passed)
        self.assertTrue(any("o7" in m for m in report.mismatches))
        self.assertTrue(report.counterexamples)

    def test_merged_labels_are_detected(self):
        report = census_matches_bfs(2, classifier=merged_o11_classifier)
        self.assertFalse(report.passed)
        o11 = next(row for row in report.h_rows if row.label == OrbitLabel.O11)
        self.assertNotEqual(o11.bfs_size, o11.census_count)

    def test_kernel_order(self):
        self.assertEqual(1, action_kernel_order(2))
        self.assertEqual(4, action_kernel_order(3))

    def test_only_f2(self):
        with self.assertRaises(ValueError):
            census_matches_bfs(3)


class ContractionEquivalenceTestCase(unittest.TestCase):
    def test_sampled_pairs(self):
        report = contraction_equivalence_check(2, samples=30, seed=1)
        self.assertTrue(report.passed, "\n".join(report.lines()))
        self.assertEqual(30, report.checked)
        self.assertGreaterEqual(report.equivalent_pairs, 9)

    @pytest.mark.slow
    @unittest.skipUnless(OracleRuntimeConstants.run_slow_tests, "set TOK_RUN_SLOW_TESTS=true for full-size runs")
    def test_thousand_pairs(self):
        report = contraction_equivalence_check(2, samples=10**3, seed=7)
        self.assertTrue(report.passed, "\n".join(report.lines()))
        self.assertEqual(10**3, report.checked)

    def test_only_f2(self):
        with self.assertRaises(ValueError):
            contraction_equivalence_check(3)


class VerificationTestCase(unittest.TestCase):
    def test_canonical_forms(self):
        for q in [2, 3, 4, 5]:
            report = run_verification(q)
            self.assertTrue(report.passed, "\n".join(report.lines()))

    def test_full_census_over_f2(self):
        report = run_verification(2, full=True)
        self.assertTrue(report.passed)
        self.assertIn("21 H-orbits / 18 G-orbits", report.lines())

    @pytest.mark.slow
    @unittest.skipUnless(OracleRuntimeConstants.run_slow_tests, "set TOK_RUN_SLOW_TESTS=true to census F_3")
    def test_full_census_over_f3(self):
        census = full_census(3, threads=8)
        self.assertEqual(3**18, census.total)
        self.assertEqual(21, len(census.h_counts))
        self.assertEqual(18, len(census.g_counts))
