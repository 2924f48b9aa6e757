"""Certify uniqueness of given tensor rank and Waring decompositions."""

__version__ = "0.1.0"

from .certificate import Certificate, Evidence, Verdict, combine
from .hilbert import PointSet, cayley_bacharach, h_vector, hilbert_function, span_intersection_dim
from .kruskal import KruskalReport, glp, kruskal_rank, kruskal_rank_at_least
from .linalg import EXACT, FLOAT, ScalarMode, khatri_rao, rank
from .reshape import (
    Tripartition,
    certify,
    effective_range,
    heuristic_partition,
    reshaped_kruskal_certify,
    sweep_certify,
    tripartitions,
)
from .s4c4 import certify_s4c4
from .symmetric import SymmetricDecomposition, catalecticant_test, sym_factor, symmetric_certify

__all__ = [
    "Certificate", "Evidence", "Verdict", "combine",
    "PointSet", "cayley_bacharach", "h_vector", "hilbert_function", "span_intersection_dim",
    "KruskalReport", "glp", "kruskal_rank", "kruskal_rank_at_least",
    "EXACT", "FLOAT", "ScalarMode", "khatri_rao", "rank",
    "Tripartition", "certify", "effective_range", "heuristic_partition",
    "reshaped_kruskal_certify", "sweep_certify", "tripartitions",
    "certify_s4c4",
    "SymmetricDecomposition", "catalecticant_test", "sym_factor", "symmetric_certify",
]
