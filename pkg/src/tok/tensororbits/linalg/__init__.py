"""Exact matrix and polynomial algebra over F_q for the small fixed shapes of the classifier."""
from tok.tensororbits.linalg.matrixfq import charpoly
from tok.tensororbits.linalg.matrixfq import companion
from tok.tensororbits.linalg.matrixfq import det
from tok.tensororbits.linalg.matrixfq import inverse
from tok.tensororbits.linalg.matrixfq import is_invertible
from tok.tensororbits.linalg.matrixfq import MatrixFq
from tok.tensororbits.linalg.matrixfq import rank
from tok.tensororbits.linalg.matrixfq import similar_irreducible
from tok.tensororbits.linalg.polyfq import PolyFq
from tok.tensororbits.linalg.subspace import col_space
from tok.tensororbits.linalg.subspace import row_space
from tok.tensororbits.linalg.subspace import spanning_tuple_count
from tok.tensororbits.linalg.subspace import Subspace
from tok.tensororbits.linalg.subspace import SubspaceGrid
