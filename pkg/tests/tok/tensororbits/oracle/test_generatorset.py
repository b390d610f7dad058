import random
import unittest

import numpy as np

from tok.tensororbits.gf import field_for_order
from tok.tensororbits.gf import field_new
from tok.tensororbits.linalg.matrixfq import general_linear_group
from tok.tensororbits.linalg.matrixfq import general_linear_group_order
from tok.tensororbits.oracle import GeneratorSet
from tok.tensororbits.oracle.generatorset import factor_generators
from tok.tensororbits.oracle.generatorset import mulclose
from tok.tensororbits.oracle.generatorset import PackedCodec
from tok.tensororbits.tensor import act
from tok.tensororbits.tensor import GroupElementH
from tok.tensororbits.tensor import Tensor233


class GeneratorSetTestCase(unittest.TestCase):
    def test_group_orders_over_f2(self):
        gens = GeneratorSet.standard(field_new(2))
        self.assertEqual((6, 168, 168), gens.group_orders())
        self.assertTrue(gens.generates_h())

    def test_gl2_generators(self):
        for q in [2, 3, 4, 5, 7, 8, 9]:
            with self.subTest(q=q):
                field = field_for_order(q)
                closure = mulclose(factor_generators(field, 2), lambda a, b: a @ b)
                self.assertEqual(general_linear_group_order(q, 2), len(closure))

    def test_gl3_over_f3(self):
        f3 = field_new(3)
        closure = mulclose(factor_generators(f3, 3), lambda a, b: a @ b)
        self.assertEqual(11232, len(closure))

    def test_closure_is_whole_group(self):
        f2 = field_new(2)
        self.assertEqual(set(general_linear_group(f2, 3)), mulclose(factor_generators(f2, 3), lambda a, b: a @ b))

    def test_transpose_generator(self):
        gens = GeneratorSet.standard(field_new(3), include_transpose=True)
        self.assertTrue(gens.includes_transpose)
        self.assertTrue(gens.elements[-1].transpose_flag)
        self.assertEqual(len(GeneratorSet.standard(field_new(3)).elements) + 1, len(gens.elements))

    def test_linear_maps_match_action(self):
        rng = random.Random(21)
        for q in [2, 3, 4]:
            field = field_for_order(q)
            gens = GeneratorSet.standard(field, include_transpose=True)
            codec = PackedCodec(field)
            tensors = [Tensor233.random(field, rng) for _ in range(20)]
            codes = np.array([a.packed() for a in tensors], dtype=np.int64)
            for h, linear_map in zip(gens.elements, gens.linear_maps()):
                expected = [act(a, h).packed() for a in tensors]
                self.assertEqual(expected, codec.apply_packed(linear_map, codes).tolist())


class PackedCodecTestCase(unittest.TestCase):
    def test_unpack_digits(self):
        codec = PackedCodec(field_new(2))
        digits = codec.unpack(np.array([2**17, 1], dtype=np.int64))
        self.assertEqual([1] + [0] * 17, digits[0].tolist())
        self.assertEqual([0] * 17 + [1], digits[1].tolist())

    def test_matches_tensor_encoding(self):
        rng = random.Random(22)
        field = field_new(3)
        codec = PackedCodec(field)
        tensors = [Tensor233.random(field, rng) for _ in range(10)]
        digits = codec.unpack(np.array([a.packed() for a in tensors], dtype=np.int64))
        self.assertEqual([list(a.a) for a in tensors], digits.tolist())
        self.assertEqual([a.packed() for a in tensors], codec.pack(digits).tolist())

    def test_apply_random_element(self):
        rng = random.Random(23)
        for q in [5, 9]:
            field = field_for_order(q)
            h = GroupElementH.random(field, rng)
            linear_map = GeneratorSet(field, (h,)).linear_maps()[0]
            codec = PackedCodec(field)
            a = Tensor233.random(field, rng)
            self.assertEqual(act(a, h).packed(), int(codec.apply_packed(linear_map, np.array([a.packed()]))[0]))

    def test_overflow(self):
        with self.assertRaises(ValueError):
            PackedCodec(field_for_order(16))
