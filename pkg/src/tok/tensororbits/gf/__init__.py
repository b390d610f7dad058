"""Exact arithmetic in the finite fields F_q, q = p^k <= 256."""
from tok.tensororbits.gf.fieldelement import add
from tok.tensororbits.gf.fieldelement import all_elements
from tok.tensororbits.gf.fieldelement import FieldElement
from tok.tensororbits.gf.fieldelement import inv
from tok.tensororbits.gf.fieldelement import mul
from tok.tensororbits.gf.fieldelement import neg
from tok.tensororbits.gf.fieldelement import sub
from tok.tensororbits.gf.fieldspec import field_for_order
from tok.tensororbits.gf.fieldspec import field_new
from tok.tensororbits.gf.fieldspec import FieldSpec
from tok.tensororbits.gf.fieldspec import format_polynomial
from tok.tensororbits.gf.fieldspec import MAX_FIELD_ORDER
