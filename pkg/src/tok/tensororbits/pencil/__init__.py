"""Determinant forms of matrix pencils and the PGL(2, q) action on cubics."""
from tok.tensororbits.pencil.binarycubic import BinaryCubic
from tok.tensororbits.pencil.binarycubic import det_form
from tok.tensororbits.pencil.binarycubic import factor_type
from tok.tensororbits.pencil.binarycubic import FactorType
from tok.tensororbits.pencil.cubicorbits import irreducible_monic_cubics
from tok.tensororbits.pencil.cubicorbits import line_equivalence_witness
from tok.tensororbits.pencil.cubicorbits import lines_equivalent_rank3
from tok.tensororbits.pencil.cubicorbits import pencil_orbit_report
from tok.tensororbits.pencil.cubicorbits import pgl_orbit_of_cubic
from tok.tensororbits.pencil.cubicorbits import stabilizer
from tok.tensororbits.pencil.mobius import Mobius
from tok.tensororbits.pencil.mobius import mobius_transform
from tok.tensororbits.pencil.mobius import pgl2_elements
from tok.tensororbits.pencil.mobius import shift_scale_charpoly
