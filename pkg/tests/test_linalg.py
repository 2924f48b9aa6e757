from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tensorcert.linalg import (
    EXACT,
    FLOAT,
    ScalarMode,
    as_matrix,
    bareiss_rank,
    khatri_rao,
    khatri_rao_power,
    rank,
    singular_values,
    zero_columns,
)

from oracles import fraction_rank


def test_khatri_rao_columns_are_kronecker_products():
    A = np.arange(6).reshape(2, 3)
    B = np.arange(12).reshape(4, 3) - 5
    K = khatri_rao(A, B)
    assert K.shape == (8, 3)
    for j in range(3):
        assert np.array_equal(K[:, j], np.kron(A[:, j], B[:, j]))


def test_khatri_rao_rejects_mismatched_columns():
    with pytest.raises(ValueError):
        khatri_rao(np.ones((2, 3)), np.ones((2, 4)))


def test_khatri_rao_power_shape():
    A = np.arange(8).reshape(4, 2)
    assert khatri_rao_power(A, 4).shape == (256, 2)


def test_as_matrix_converts_fraction_strings():
    M = as_matrix([["1/2", 3]], EXACT)
    assert M.dtype == object
    assert M[0, 0] == Fraction(1, 2)


def test_rank_of_rational_matrix():
    M = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]
    assert rank(M, EXACT) == 1
    assert rank([[0, 0], [0, 0]], EXACT) == 0


def test_bareiss_on_integer_rows():
    assert bareiss_rank([[2, 4, 6], [1, 2, 3], [0, 1, 1]]) == 2


def test_float_rank_respects_epsilon():
    M = np.diag([1.0, 1e-9, 1e-14])
    assert rank(M, FLOAT) == 2
    assert rank(M, ScalarMode("float", 1e-8)) == 1


def test_singular_values_refuses_exact_arrays():
    with pytest.raises(TypeError):
        singular_values(as_matrix([[1, 2]], EXACT))


def test_zero_columns():
    assert zero_columns([[0, 1, 0], [0, 2, 0]], EXACT) == [0, 2]


def test_mode_validation():
    with pytest.raises(ValueError):
        ScalarMode("float", -1.0)
    with pytest.raises(ValueError):
        ScalarMode("interval")


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(small_fractions, min_size=n, max_size=n), min_size=1, max_size=6)))
def test_exact_rank_matches_oracle(rows):
    assert rank(rows, EXACT) == fraction_rank(rows)


@st.composite
def integer_matrices(draw):
    """Integer matrices in [-99, 99] with up to 40 rows and columns, often rank deficient."""
    m = draw(st.integers(1, 40))
    n = draw(st.integers(1, 40))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    style = draw(st.sampled_from(["dense", "low_rank", "repeated_rows"]))
    if style == "dense":
        return rng.integers(-99, 100, (m, n))
    k = draw(st.integers(0, min(m, n)))
    if style == "low_rank":
        M = rng.integers(-3, 4, (m, k)) @ rng.integers(-3, 4, (k, n)) if k else np.zeros((m, n), int)
        return np.clip(M, -99, 99)
    base = rng.integers(-99, 100, (max(k, 1), n))
    return base[rng.integers(0, max(k, 1), m)]


@settings(max_examples=200, deadline=None, derandomize=True)
@given(integer_matrices())
def test_exact_and_float_rank_agree_on_integer_matrices(M):
    assert rank(M.tolist(), EXACT) == rank(M.astype(float), FLOAT)
