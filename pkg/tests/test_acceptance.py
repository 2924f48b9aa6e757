"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line, visible even under
captured output. Run ``python3 tests/test_acceptance.py`` for just the
summary lines.
"""
import math
import sys
import time
import warnings
from contextlib import contextmanager
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from tensorcert.certificate import Verdict
from tensorcert.hilbert import PointSet, cayley_bacharach, h_vector, span_intersection_dim
from tensorcert.kruskal import kruskal_rank
from tensorcert.linalg import EXACT, FLOAT, ScalarMode
from tensorcert.reshape import (
    Tripartition,
    effective_range,
    expected_typical_rank,
    heuristic_partition,
    reshaped_kruskal_certify,
    reshaped_typical_rank,
    tripartitions,
)
from tensorcert.s4c4 import certify_s4c4
from tensorcert.samples import (
    S4C4_IDENTIFIABLE,
    random_integer_factors,
    random_integer_points,
    reznick_points,
)
from tensorcert.symmetric import SymmetricDecomposition, comon_bound, sym_factor, symmetric_certify

_capture = None


@pytest.fixture(autouse=True)
def _report_channel(capsys):
    global _capture
    _capture = capsys
    yield
    _capture = None


@contextmanager
def criterion(number: int, title: str):
    """Print one PASS/FAIL line for the enclosed checks, then re-raise any failure."""
    start = time.perf_counter()
    failure = None
    try:
        yield
    except Exception as exc:  # report, then let pytest see it
        failure = exc
    elapsed = time.perf_counter() - start
    status = "PASS" if failure is None else "FAIL"
    line = f"[{status}] criterion {number}: {title} ({elapsed:.2f}s)"
    if failure is not None:
        line += f" -- {type(failure).__name__}: {failure}"
    if _capture is not None:
        with _capture.disabled():
            print("\n" + line)
    else:
        print(line)
    if failure is not None:
        raise failure


# 1 --------------------------------------------------------------------------------

def test_criterion_1_five_factor_example():
    with criterion(1, "five-factor example, 5 seeds, exact mode, under 60 s"):
        dims = (6, 5, 4, 3, 2)
        start = time.perf_counter()
        for seed in range(5):
            factors = random_integer_factors(dims, 18, seed=seed)
            assert [kruskal_rank(F).kappa for F in factors] == [6, 5, 4, 3, 2], seed
            good = reshaped_kruskal_certify(factors, "{2,3}|{1,4}|{5}", EXACT)
            assert good.evidence[0].ranks["kappa"] == [18, 18, 2], seed
            assert good.verdict is Verdict.IDENTIFIABLE, seed
            bad = reshaped_kruskal_certify(factors, "{1,2}|{3,4}|{5}", EXACT)
            assert bad.evidence[0].ranks["kappa"] == [18, 12, 2], seed
            assert bad.verdict is Verdict.INCONCLUSIVE, seed
        assert time.perf_counter() - start < 60


# 2 --------------------------------------------------------------------------------

# Columns: partitions {a,b} + the two remaining singletons, in this order.
TABLE_COLUMNS = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
TABLE = {
    (17, 13, 13, 2): ([13, 13, 17, 24, 27, 27], {(2, 4), (3, 4)}),
    (17, 8, 3, 2): ([3, 8, 17, 9, 17, 12], {(2, 3)}),
    (15, 15, 11, 10): ([19, 23, 23, 24, 24, 28], {(3, 4)}),
    (15, 13, 9, 4): ([11, 15, 17, 20, 22, 26], {(3, 4)}),
    (12, 10, 7, 7): ([12, 15, 17, 15, 17, 20], {(3, 4)}),
}


def _pair_partition(dims, pair):
    rest = [(i,) for i in range(1, 5) if i not in pair]
    return Tripartition.from_blocks(dims, [pair, *rest])


def test_criterion_2_effective_range_table():
    with criterion(2, "30 effective-range values and the heuristic choice"):
        matched = 0
        for dims, (ranges, bold) in TABLE.items():
            got = [effective_range(dims, _pair_partition(dims, pair)) for pair in TABLE_COLUMNS]
            assert got == ranges, (dims, got)
            matched += len(got)
            chosen = heuristic_partition(dims)
            assert any(chosen == _pair_partition(dims, pair) for pair in bold), (dims, str(chosen))
            assert effective_range(dims, chosen) == max(ranges)
        assert matched == 30


# 3 --------------------------------------------------------------------------------

def test_criterion_3_sextic_example():
    with criterion(3, "sextic in P^3 at r=14, split (2,2,2), 3 seeds"):
        for seed in range(3):
            A = random_integer_points(4, 14, seed=200 + seed)
            assert kruskal_rank(sym_factor(np.array(A, dtype=object), 2)).kappa == 10, seed
            dec = SymmetricDecomposition([1] * 14, A, 6, EXACT)
            cert = symmetric_certify(dec, (2, 2, 2))
            assert cert.verdict is Verdict.IDENTIFIABLE, seed


# 4 --------------------------------------------------------------------------------

def test_criterion_4_identifiable_quartic():
    with criterion(4, "4x7 integer quartic decomposition: ranks 7/4/28, Identifiable"):
        report = certify_s4c4(SymmetricDecomposition([1] * 7, S4C4_IDENTIFIABLE, 4, EXACT))
        assert report.kr4_rank == 7
        assert report.kruskal_A == 4
        assert report.terracini_rank == 28
        assert report.verdict is Verdict.IDENTIFIABLE


# 5 --------------------------------------------------------------------------------

def test_criterion_5_reznick_float():
    with criterion(5, "Reznick decomposition at phi=0, float mode, eps=1e-12"):
        mode = ScalarMode("float", 1e-12)
        report = certify_s4c4(SymmetricDecomposition([1.0] * 7, reznick_points(0.0), 4, mode))
        assert report.kr4_rank == 7
        assert report.terracini_rank == 27
        assert report.verdict is Verdict.INCONCLUSIVE
        sv = report.singular_values
        assert abs(sv[0] - 27.4692) <= 1e-3 * 27.4692, sv[0]
        assert sv[-1] < 1e-12, sv[-1]
        assert sv[26] / sv[27] > 1e10, (sv[26], sv[27])


# 6 --------------------------------------------------------------------------------

def test_criterion_6_hilbert_suite():
    with criterion(6, "Hilbert functions, h-vectors, Cayley-Bacharach"):
        # (a) seven general points of P^3
        Z = PointSet(random_integer_points(4, 7, seed=300))
        assert h_vector(Z) == [1, 3, 3]
        # (b), (d) the two seven-point Reznick families on the twisted cubic
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            A = PointSet(reznick_points(0.0), FLOAT)
            B = PointSet(reznick_points(math.pi / 20), FLOAT)
            Z14 = A.union(B)
        assert h_vector(Z14) == [1, 3, 3, 3, 3, 1]
        assert cayley_bacharach(Z14, 4) is True
        assert span_intersection_dim(A, B, 4) == 0
        # (c) four points of P^2, three on a line
        W = PointSet([[1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]])
        assert cayley_bacharach(W, 1) is False


# 7 --------------------------------------------------------------------------------

def test_criterion_7_property_suites():
    import test_hilbert
    import test_kruskal
    import test_linalg
    import test_s4c4
    import test_symmetric

    with criterion(7, "property suites, 200 randomized cases each"):
        test_kruskal.test_kruskal_rank_invariant_under_scaling_and_permutation()
        test_symmetric.test_compressed_and_full_powers_have_equal_rank()
        test_hilbert.test_hilbert_axioms()
        test_hilbert.test_h_vector_grows_with_the_point_set()
        test_linalg.test_exact_and_float_rank_agree_on_integer_matrices()
        test_s4c4.test_tangent_basis_matches_finite_differences()


# 8 --------------------------------------------------------------------------------

def test_criterion_8_formulas():
    with criterion(8, "typical-rank inequality on 100 formats, Comon bound spot values"):
        rng = np.random.default_rng(8)
        for _ in range(100):
            d = int(rng.integers(3, 7))
            dims = [int(x) for x in rng.integers(2, 16, d)]
            bound = expected_typical_rank(dims)
            for p in tripartitions(dims):
                assert reshaped_typical_rank(dims, p.blocks) <= bound, (dims, str(p))
        for n in range(1, 7):
            assert comon_bound(n, 3) == Fraction(3 * n, 2) - 1
            for k in range(2, 5):
                assert comon_bound(n, 2 * k) == comb(k + n, n) - n - 1


if __name__ == "__main__":
    sys.path.insert(0, str(__import__("pathlib").Path(__file__).parent))
    failures = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                failures += 1
    sys.exit(1 if failures else 0)
