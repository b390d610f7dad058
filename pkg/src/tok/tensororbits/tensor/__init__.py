"""The tensor data model: coefficient arrays, contraction spaces, rank distributions and the actions of H and G."""
from tok.tensororbits.tensor.contraction import contraction
from tok.tensororbits.tensor.contraction import ContractionSpace
from tok.tensororbits.tensor.contraction import projective_points
from tok.tensororbits.tensor.contraction import rank_distribution
from tok.tensororbits.tensor.contraction import RankDistribution
from tok.tensororbits.tensor.groupaction import act
from tok.tensororbits.tensor.groupaction import GroupElementH
from tok.tensororbits.tensor.qmembership import in_Q
from tok.tensororbits.tensor.qmembership import q_of
from tok.tensororbits.tensor.qmembership import QMembership
from tok.tensororbits.tensor.tensors import embed_222
from tok.tensororbits.tensor.tensors import embed_223
from tok.tensororbits.tensor.tensors import Tensor
from tok.tensororbits.tensor.tensors import Tensor222
from tok.tensororbits.tensor.tensors import Tensor223
from tok.tensororbits.tensor.tensors import Tensor233
from tok.tensororbits.tensor.textformat import format_tensor
from tok.tensororbits.tensor.textformat import parse_tensor_line
