import unittest

from tok.tensororbits.errors import TensorFormatError
from tok.tensororbits.gf import field_new
from tok.tensororbits.tensor import format_tensor
from tok.tensororbits.tensor import parse_tensor_line
from tok.tensororbits.tensor import Tensor222
from tok.tensororbits.tensor import Tensor223
from tok.tensororbits.tensor import Tensor233
from tok.tensororbits.tensor.textformat import format_header
from tok.tensororbits.tensor.textformat import parse_tensor_lines


class TensorTextFormatTestCase(unittest.TestCase):
    def test_format(self):
        a = Tensor233.from_entries(field_new(3), [1] + [0] * 16 + [2])
        self.assertEqual("q=3; a=1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,2", format_tensor(a))
        self.assertEqual(a, parse_tensor_line(format_tensor(a)))

    def test_shape_from_entry_count(self):
        self.assertIsInstance(parse_tensor_line("q=2; a=" + ",".join(["0"] * 12)), Tensor223)
        self.assertIsInstance(parse_tensor_line("q=2; a=" + ",".join(["1"] * 8)), Tensor222)

    def test_modulus_field(self):
        a = parse_tensor_line("q=4; modulus=x^2+x+1; a=" + ",".join(["3"] * 18))
        self.assertEqual(4, a.field.q)
        with self.assertRaises(TensorFormatError):
            parse_tensor_line("q=4; modulus=x^2+1; a=" + ",".join(["3"] * 18))

    def test_header(self):
        self.assertEqual("# q=4; modulus=x^2+x+1", format_header(field_new(2, 2)))

    def test_malformed_lines(self):
        for line in [
            "a=" + ",".join(["0"] * 18),
            "q=2",
            "q=6; a=" + ",".join(["0"] * 18),
            "q=2; a=0,1,x",
            "q=2; a=0,1,0",
            "q=2; a=" + ",".join(["2"] * 18),
            "q=2; garbage",
        ]:
            with self.subTest(line=line):
                with self.assertRaises(TensorFormatError):
                    parse_tensor_line(line)

    def test_expected_type(self):
        with self.assertRaises(TensorFormatError):
            parse_tensor_line("q=2; a=" + ",".join(["0"] * 12), Tensor233)

    def test_parse_lines_skips_comments(self):
        lines = ["# q=2; modulus=x", "", "q=2; a=" + ",".join(["0"] * 18), "   "]
        self.assertEqual([Tensor233.zero(field_new(2))], parse_tensor_lines(lines))
