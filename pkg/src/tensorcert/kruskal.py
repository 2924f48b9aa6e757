"""Kruskal rank and general-linear-position tests for the columns of a matrix."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .linalg import (
    EXACT,
    ScalarMode,
    _mod_array,
    as_matrix,
    bareiss_rank,
    full_column_rank_mod_p,
    integer_columns,
    rank,
    zero_columns,
)

# Upper bound on the number of matrix entries materialised per batch.
_BATCH_ENTRIES = 4_000_000


@dataclass(frozen=True)
class KruskalReport:
    """Outcome of a Kruskal-rank computation.

    ``kappa`` is the Kruskal rank when ``exhaustive`` is true. When a subset
    budget cut the search short, ``certified_lower_bound`` is the largest k
    for which every k-subset was verified and ``kappa`` is the best known
    upper bound.
    """

    kappa: int
    certified_lower_bound: int
    exhaustive: bool
    subsets_tested: int

    def to_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "certified_lower_bound": self.certified_lower_bound,
            "exhaustive": self.exhaustive,
            "subsets_tested": self.subsets_tested,
        }


def colex_combinations(n: int, k: int):
    """Yield the k-subsets of ``range(n)`` as sorted tuples in colex order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, n):
        for rest in colex_combinations(top, k - 1):
            yield rest + (top,)


class _SubsetTester:
    """Checks that column subsets of a fixed matrix have full column rank."""

    def __init__(self, M: np.ndarray, mode: ScalarMode):
        self.mode = mode
        self.M = M
        self.tested = 0
        if mode.is_exact:
            self.ints = integer_columns(M)
            self.residues = _mod_array(self.ints)

    def _confirm_exact(self, subset) -> bool:
        sub = [[row[j] for j in subset] for row in self.ints]
        return bareiss_rank(sub) == len(subset)

    def first_failure(self, k: int, limit: int | None = None):
        """Return the first dependent k-subset in colex order, or None.

        Stops after `limit` subsets; returns the string ``'budget'`` when the
        budget ran out before all subsets were checked.
        """
        n, r = self.M.shape
        if k == 0:
            return None
        chunk = max(1, _BATCH_ENTRIES // max(1, n * k))
        gen = colex_combinations(r, k)
        remaining = limit
        while True:
            take = chunk if remaining is None else min(chunk, remaining)
            subsets = list(itertools.islice(gen, take))
            if not subsets:
                return None
            idx = np.array(subsets, dtype=np.intp)
            if self.mode.is_exact:
                batch = self.residues[:, idx].transpose(1, 0, 2)
                ok = full_column_rank_mod_p(batch)
            else:
                batch = self.M[:, idx].transpose(1, 0, 2)
                sv = np.linalg.svd(batch, compute_uv=False)
                ok = sv[:, k - 1] > self.mode.epsilon if n >= k else np.zeros(len(subsets), bool)
            for pos in np.flatnonzero(~ok):
                if self.mode.is_exact and self._confirm_exact(subsets[pos]):
                    continue
                self.tested += int(pos) + 1
                return subsets[pos]
            self.tested += len(subsets)
            if remaining is not None:
                remaining -= len(subsets)
                if remaining <= 0 and next(gen, None) is not None:
                    return "budget"
                if remaining <= 0:
                    return None


def kruskal_rank_at_least(M, k: int, mode: ScalarMode = EXACT) -> bool:
    """True iff every `k` columns of `M` are linearly independent.

    Subsets are visited in colex order and the search stops at the first
    dependent subset.
    """
    M = as_matrix(M, mode)
    rows, cols = M.shape
    if k < 0 or k > min(rows, cols):
        raise ValueError(f"k={k} outside 0..{min(rows, cols)}")
    return _SubsetTester(M, mode).first_failure(k) is None


def kruskal_rank(M, mode: ScalarMode = EXACT, max_subsets: int | None = None) -> KruskalReport:
    """Kruskal rank of the columns of `M`.

    The rank of `M` bounds the Kruskal rank from above, so that level is
    tried first; a generic matrix is settled by a single sweep. If it
    fails, the search climbs from k = 2 upward until the first level with a
    dependent subset. Passing `max_subsets` caps the total number of subset
    rank tests and switches to a pure upward climb, so that the report
    always carries a certified lower bound.
    """
    M = as_matrix(M, mode)
    rows, cols = M.shape
    if cols == 0 or rows == 0:
        return KruskalReport(0, 0, True, 0)
    if zero_columns(M, mode):
        return KruskalReport(0, 0, True, 0)
    upper = min(rank(M, mode), cols)
    tester = _SubsetTester(M, mode)
    if max_subsets is None and upper >= 2:
        if tester.first_failure(upper) is None:
            return KruskalReport(upper, upper, True, tester.tested)
        upper -= 1
    verified = 1
    for k in range(2, upper + 1):
        budget = None if max_subsets is None else max_subsets - tester.tested
        if budget is not None and budget <= 0:
            return KruskalReport(upper, verified, False, tester.tested)
        outcome = tester.first_failure(k, budget)
        if outcome == "budget":
            return KruskalReport(upper, verified, False, tester.tested)
        if outcome is not None:
            return KruskalReport(verified, verified, True, tester.tested)
        verified = k
    return KruskalReport(verified, verified, True, tester.tested)


def glp(M, mode: ScalarMode = EXACT) -> bool:
    """General linear position: every ``min(rows, cols)`` columns are independent."""
    M = as_matrix(M, mode)
    rows, cols = M.shape
    return kruskal_rank_at_least(M, min(rows, cols), mode)


def pairwise_distinct(M, mode: ScalarMode = EXACT) -> bool:
    """True iff no column vanishes and no two columns are proportional.

    This is ``kappa >= min(2, cols)``; with a single row it can only hold
    for one column.
    """
    M = as_matrix(M, mode)
    rows, cols = M.shape
    if cols == 0:
        return True
    if zero_columns(M, mode):
        return False
    if cols == 1:
        return True
    if rows < 2:
        return False
    return kruskal_rank_at_least(M, 2, mode)
