"""Worked inputs used by the demos and the test suite."""
from __future__ import annotations

import math

import numpy as np

# Random integer Waring decomposition of length 7 in S^4 R^4 that is identifiable.
S4C4_IDENTIFIABLE = [
    [5, -3, 1, 7, 3, 1, -9],
    [0, 9, 1, 2, 8, -2, 6],
    [-8, 5, 5, -3, -4, -6, -8],
    [3, 7, 9, -3, 8, 7, -7],
]


def random_integer_factors(dims, r: int, seed: int, bound: int = 99) -> list[list[list[int]]]:
    """Factor matrices with entries drawn uniformly from ``[-bound, bound]``."""
    rng = np.random.default_rng(seed)
    return [rng.integers(-bound, bound + 1, size=(n, r)).tolist() for n in dims]


def random_integer_points(rows: int, r: int, seed: int, bound: int = 99) -> list[list[int]]:
    return random_integer_factors([rows], r, seed, bound)[0]


def reznick_points(phi: float = 0.0) -> np.ndarray:
    """Seven points ``(c^3, c^2 s, c s^2, s^3)`` at angles ``kπ/7 + φ`` on the twisted cubic.

    Their fourth powers sum to the same quartic for every φ, so the
    decomposition has a one-parameter family of alternatives.
    """
    t = np.arange(7) * math.pi / 7 + phi
    c, s = np.cos(t), np.sin(t)
    return np.vstack([c**3, c**2 * s, c * s**2, s**3])


def twisted_cubic_points(params) -> list[list[int]]:
    """Integer points ``(1, t, t^2, t^3)`` on the twisted cubic."""
    return [[t**i for t in params] for i in range(4)]
