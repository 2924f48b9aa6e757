"""
Hilbert functions of point sets
===============================

Two seven-point decompositions of the same quartic give fourteen points on
a twisted cubic. Their Hilbert function shows why neither family can be
told apart from the other by quartic forms.
"""

import math
import warnings

from tensorcert.hilbert import PointSet, cayley_bacharach, h_vector, span_intersection_dim
from tensorcert.linalg import FLOAT
from tensorcert.samples import random_integer_points, reznick_points

general = PointSet(random_integer_points(4, 7, seed=1))
print("seven general points:", h_vector(general), "CB(2):", cayley_bacharach(general, 2))

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    A = PointSet(reznick_points(0.0), FLOAT)
    B = PointSet(reznick_points(math.pi / 20), FLOAT)
    Z = A.union(B)

print("fourteen points:", h_vector(Z), "CB(4):", cayley_bacharach(Z, 4))
print("projective dimension of the meeting of the two spans:", span_intersection_dim(A, B, 4))
