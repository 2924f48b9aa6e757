"""
Quartics in four variables at rank 7
====================================

Rank 7 is the one case the reshaped test cannot reach for S^4 F^4. The
decision procedure first checks that the decomposition is minimal and in
general position, then measures the span of the tangent spaces.
"""

from tensorcert.linalg import FLOAT
from tensorcert.s4c4 import certify_s4c4
from tensorcert.samples import S4C4_IDENTIFIABLE, reznick_points
from tensorcert.symmetric import SymmetricDecomposition

report = certify_s4c4(SymmetricDecomposition([1] * 7, S4C4_IDENTIFIABLE, 4))
print("integer example:", report.verdict.value, report.step_reached,
      f"ranks {report.kr4_rank}/{report.kruskal_A}/{report.terracini_rank}")

# Seven points on the twisted cubic admit a one-parameter family of
# decompositions, so the tangent spaces cannot span 28 dimensions.
report = certify_s4c4(SymmetricDecomposition([1.0] * 7, reznick_points(0.0), 4, FLOAT))
sv = report.singular_values
print("Reznick example:", report.verdict.value, report.step_reached, report.message)
print(f"largest {sv[0]:.4f}, 27th {sv[26]:.4g}, 28th {sv[27]:.2e}")
