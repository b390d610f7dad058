"""Brute-force ground truth for the classifier: orbit enumeration by BFS, whole-space censuses and cross-checks."""
from tok.tensororbits.oracle.bfs import orbit_bfs
from tok.tensororbits.oracle.bfs import OrbitRecord
from tok.tensororbits.oracle.census import full_census
from tok.tensororbits.oracle.census import label_array
from tok.tensororbits.oracle.contractionequivalence import contraction_equivalence_check
from tok.tensororbits.oracle.crosscheck import census_matches_bfs
from tok.tensororbits.oracle.generatorset import GeneratorSet
from tok.tensororbits.oracle.verification import run_verification
