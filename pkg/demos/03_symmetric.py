"""
Waring decompositions
=====================

For a symmetric decomposition the three blocks become symmetric powers of
the points. A sextic in four variables splits as 2 + 2 + 2, and each block
has 10 monomials.
"""

from tensorcert.kruskal import kruskal_rank
from tensorcert.samples import random_integer_points
from tensorcert.symmetric import (
    SymmetricDecomposition,
    catalecticant_test,
    comon_bound,
    sym_factor,
    symmetric_certify,
    symmetric_effective_range,
)

A = random_integer_points(4, 14, seed=0)
dec = SymmetricDecomposition([1] * 14, A, 6)
print("kappa of the quadratic Veronese images:", kruskal_rank(sym_factor(dec.points, 2)).kappa)
print("range for split (2,2,2):", symmetric_effective_range(3, (2, 2, 2)))
print("r = 14:", symmetric_certify(dec, (2, 2, 2)).verdict.value)

# Quartics stop at r = 6 with this test. The catalecticant conditions
# are only necessary here, so its report never certifies.
for r in (6, 7):
    quartic = SymmetricDecomposition([1] * r, random_integer_points(4, r, seed=r), 4)
    cat = catalecticant_test(quartic)
    print(f"quartic r={r}: reshaped {symmetric_certify(quartic).verdict.value}, "
          f"catalecticant rank {cat.rank}, status {cat.status}")

print("Comon bound for quartics in four variables:", comon_bound(3, 4))
