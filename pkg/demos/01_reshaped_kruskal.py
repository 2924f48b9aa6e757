"""
Reshaping a five-factor decomposition
=====================================

Kruskal's criterion on the five original factors cannot certify a rank-18
decomposition in a 6x5x4x3x2 space. Grouping factors into three blocks can.
"""

from tensorcert.kruskal import kruskal_rank
from tensorcert.reshape import reshaped_kruskal_certify, sidiropoulos_bro
from tensorcert.samples import random_integer_factors

dims = (6, 5, 4, 3, 2)
factors = random_integer_factors(dims, 18, seed=0)

# Kruskal ranks of the original factors are capped by their row counts.
print("per-factor kappa:", [kruskal_rank(F).kappa for F in factors])

# The higher-order Kruskal test needs sum(kappa) >= 2r + d - 1 = 40.
print("higher-order Kruskal:", sidiropoulos_bro(factors).verdict.value)

# Grouping modes 2 and 3 together, and modes 1 and 4, gives two
# 18-column blocks of full Kruskal rank.
for partition in ("{2,3}|{1,4}|{5}", "{1,2}|{3,4}|{5}"):
    cert = reshaped_kruskal_certify(factors, partition)
    ev = cert.evidence[0]
    print(f"{partition:18} kappa={ev.ranks['kappa']}  {ev.threshold}  -> {cert.verdict.value}")
