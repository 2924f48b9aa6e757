import itertools

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from tensorcert.hilbert import (
    PointSet,
    cayley_bacharach,
    glp_points,
    h_vector,
    hilbert_function,
    hilbert_values,
    span_intersection_dim,
)
from tensorcert.linalg import EXACT, FLOAT
from tensorcert.samples import random_integer_points, reznick_points, twisted_cubic_points

from oracles import hilbert_by_kron

pytestmark = pytest.mark.filterwarnings("ignore:Hilbert function computed in float mode")


def test_seven_general_points_in_p3():
    Z = PointSet(random_integer_points(4, 7, seed=1))
    assert glp_points(Z)
    assert h_vector(Z) == [1, 3, 3]
    assert not cayley_bacharach(Z, 2)


def test_twisted_cubic_points_exact():
    Z = PointSet(twisted_cubic_points(range(-7, 7)))
    assert h_vector(Z) == [1, 3, 3, 3, 3, 1]
    assert hilbert_function(Z, 4) == 13
    assert cayley_bacharach(Z, 4)
    assert not cayley_bacharach(Z, 5)


def test_three_collinear_points_break_cb1():
    Z = PointSet([[1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]])
    assert not cayley_bacharach(Z, 1)


def test_reznick_families_float():
    A = PointSet(reznick_points(0.0), FLOAT)
    B = PointSet(reznick_points(np.pi / 20), FLOAT)
    Z = A.union(B)
    assert h_vector(Z) == [1, 3, 3, 3, 3, 1]
    assert cayley_bacharach(Z, 4)
    assert span_intersection_dim(A, B, 4) == 0


def test_float_pointset_warns():
    with pytest.warns(UserWarning, match="float mode"):
        PointSet(np.eye(3), FLOAT)


def test_degenerate_inputs_rejected():
    with pytest.raises(ValueError, match="zero vector"):
        PointSet([[1, 0], [2, 0]])
    with pytest.raises(ValueError, match="coincide"):
        PointSet([[1, 2, 0], [1, 2, 1]])
    with pytest.raises(ValueError):
        cayley_bacharach(PointSet([[1], [0]]), 1)


def test_span_intersection_requires_disjoint_sets():
    A = PointSet([[1, 0], [0, 1], [0, 0]])
    B = PointSet([[1, 1], [0, 1], [0, 1]])
    with pytest.raises(ValueError, match="not disjoint"):
        span_intersection_dim(A, B, 2)


def test_span_intersection_requires_independent_images():
    A = PointSet([[1, 0, 1], [0, 1, 1]])
    B = PointSet([[1], [2]])
    with pytest.raises(ValueError, match="linearly dependent"):
        span_intersection_dim(A, B, 1)


def test_hilbert_function_small_degrees():
    Z = PointSet(random_integer_points(3, 5, seed=2))
    assert hilbert_function(Z, -1) == 0
    assert hilbert_function(Z, 0) == 1


@st.composite
def point_sets(draw):
    rows = draw(st.integers(2, 4))
    ell = draw(st.integers(1, 9))
    cols = draw(st.lists(
        st.lists(st.integers(-3, 3), min_size=rows, max_size=rows),
        min_size=ell, max_size=ell))
    M = np.array(cols).T
    try:
        return PointSet(M, EXACT)
    except ValueError:
        assume(False)


@settings(max_examples=200, deadline=None)
@given(point_sets())
def test_hilbert_axioms(Z):
    values = hilbert_values(Z)
    ell = len(Z)
    assert values[0] == 1
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert values[-1] == ell
    assert hilbert_function(Z, len(values)) == ell
    h = h_vector(Z)
    assert sum(h) == ell and all(x >= 0 for x in h)
    for d in range(min(len(values), 3)):
        assert values[d] == hilbert_by_kron(Z.M, d)


@settings(max_examples=200, deadline=None)
@given(point_sets(), st.data())
def test_h_vector_grows_with_the_point_set(Z, data):
    ell = len(Z)
    keep = data.draw(st.lists(st.integers(0, ell - 1), min_size=1, max_size=ell, unique=True))
    Y = PointSet(Z.M[:, sorted(keep)])
    hz, hy = h_vector(Z), h_vector(Y)
    for a, b in itertools.zip_longest(hy, hz, fillvalue=0):
        assert a <= b
