"""Orbit classification of F^2 (x) F^3 (x) F^3 tensors and their canonical forms."""
from tok.tensororbits.classify.canonicalforms import canonical_form
from tok.tensororbits.classify.canonicalforms import expected_rank_distribution
from tok.tensororbits.classify.classifier import classify
from tok.tensororbits.classify.classifier import classify_222
from tok.tensororbits.classify.classifier import classify_223
from tok.tensororbits.classify.classifier import classify_g
from tok.tensororbits.classify.classifier import classify_h
from tok.tensororbits.classify.classifier import invariant_signature
from tok.tensororbits.classify.classifier import InvariantSignature
from tok.tensororbits.classify.orbitlabel import G_LABELS
from tok.tensororbits.classify.orbitlabel import H_LABELS
from tok.tensororbits.classify.orbitlabel import nurmiev_label
from tok.tensororbits.classify.orbitlabel import OrbitLabel
