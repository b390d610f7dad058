import unittest

from tok.tensororbits.gf import field_new
from tok.tensororbits.linalg import PolyFq
from tok.tensororbits.pencil import irreducible_monic_cubics
from tok.tensororbits.pencil import line_equivalence_witness
from tok.tensororbits.pencil import lines_equivalent_rank3
from tok.tensororbits.pencil import mobius_transform
from tok.tensororbits.pencil import pencil_orbit_report
from tok.tensororbits.pencil import pgl_orbit_of_cubic
from tok.tensororbits.pencil import stabilizer


class IrreducibleCubicTestCase(unittest.TestCase):
    def test_counts(self):
        for q, expected in [(2, 2), (3, 8), (4, 20), (5, 40), (7, 112)]:
            with self.subTest(q=q):
                self.assertEqual(expected, len(irreducible_monic_cubics(q)))

    def test_over_f2(self):
        f2 = field_new(2)
        expected = [PolyFq.from_coefficients(f2, [1, 1, 0, 1]), PolyFq.from_coefficients(f2, [1, 0, 1, 1])]
        self.assertEqual(set(expected), set(irreducible_monic_cubics(f2)))


class PglOrbitTestCase(unittest.TestCase):
    def test_single_orbit(self):
        for q in [2, 3, 4, 5, 7]:
            with self.subTest(q=q):
                cubics = irreducible_monic_cubics(q)
                self.assertEqual(set(cubics), pgl_orbit_of_cubic(cubics[0]))

    def test_stabilizer_order(self):
        for q in [3, 7]:
            for f in irreducible_monic_cubics(q):
                stab = stabilizer(f)
                with self.subTest(q=q, f=str(f)):
                    self.assertEqual(3, len(stab))
                    for phi in stab:
                        for psi in stab:
                            self.assertIn(phi * psi, stab)

    def test_witness(self):
        cubics = irreducible_monic_cubics(3)
        for g in cubics:
            phi = line_equivalence_witness(cubics[0], g)
            self.assertIsNotNone(phi)
            self.assertEqual(g, mobius_transform(cubics[0], phi))
            self.assertTrue(lines_equivalent_rank3(cubics[0], g))

    def test_rejects_reducible(self):
        f3 = field_new(3)
        reducible = PolyFq.from_coefficients(f3, [0, 1, 0, 1])  # t^3 + t
        with self.assertRaises(ValueError):
            stabilizer(reducible)
        with self.assertRaises(ValueError):
            pgl_orbit_of_cubic(reducible)


class PencilOrbitReportTestCase(unittest.TestCase):
    def test_consistent_for_small_fields(self):
        for q in [2, 3, 4, 5, 7]:
            with self.subTest(q=q):
                report = pencil_orbit_report(q)
                self.assertTrue(report.is_consistent())
                self.assertEqual([(q**3 - q) // 3], report.orbit_sizes)
                self.assertEqual({3: report.cubic_count}, report.stabilizer_orders)

    def test_lines(self):
        lines = pencil_orbit_report(2).lines()
        self.assertEqual("q=2", lines[0])
        self.assertIn("irreducible monic cubics: 2 (expected 2)", lines)
        self.assertIn("stabilizer orders: 3 (x2)", lines)
