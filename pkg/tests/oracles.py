"""Slow, direct reference computations the library is checked against.

Nothing here imports the library's rank or Kruskal code.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np


def fraction_rank(M) -> int:
    """Row reduction over the rationals."""
    rows = [[Fraction(x) for x in row] for row in np.asarray(M, dtype=object).tolist()]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def brute_kruskal(M, rank_fn=fraction_rank) -> int:
    """Largest k such that every k columns are independent, checking every subset."""
    M = np.asarray(M, dtype=object)
    r = M.shape[1]
    kappa = 0
    for k in range(1, r + 1):
        if all(rank_fn(M[:, list(s)]) == k for s in itertools.combinations(range(r), k)):
            kappa = k
        else:
            break
    return kappa


def kron_power(a, k: int) -> np.ndarray:
    out = np.array([1], dtype=object)
    for _ in range(k):
        out = np.kron(out, np.asarray(a, dtype=object))
    return out


def kron_factor(A, k: int) -> np.ndarray:
    A = np.asarray(A, dtype=object)
    return np.column_stack([kron_power(A[:, i], k) for i in range(A.shape[1])])


def brute_effective_range(products) -> int:
    """Largest r with ``2r <= sum(min(P, r)) - 2``, the generic Kruskal ranks being ``min(P, r)``."""
    best = 0
    for r in range(1, sum(products) + 1):
        if 2 * r <= sum(min(p, r) for p in products) - 2:
            best = r
    return best


def hilbert_by_kron(points, d: int) -> int:
    """Rank of the full tensor powers ``p^{⊗d}``, which span the same space as the monomials."""
    if d == 0:
        return 1
    return fraction_rank(kron_factor(points, d))
