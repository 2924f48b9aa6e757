"""Symmetric powers, the symmetric reshaped Kruskal test and catalecticant ranks.

Symmetric coordinates are plain monomials ``a_{i_1} ⋯ a_{i_k}`` over
nondecreasing index tuples, listed in colex order, without multinomial
weights. Every rank computed here is unchanged by that choice, since the
weights amount to a diagonal change of basis.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .certificate import Certificate, Evidence, Verdict
from .kruskal import kruskal_rank
from .linalg import EXACT, ScalarMode, as_matrix, rank, zero_columns
from .reshape import Tripartition, effective_range


@lru_cache(maxsize=None)
def monomials(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Nondecreasing k-tuples over ``range(m)`` in colex order."""
    tuples = itertools.combinations_with_replacement(range(m), k)
    return tuple(sorted(tuples, key=lambda t: t[::-1]))


@lru_cache(maxsize=None)
def _monomial_index(m: int, k: int) -> np.ndarray:
    return np.array(monomials(m, k), dtype=np.intp).reshape(-1, k)


def sym_power(a, k: int) -> np.ndarray:
    """Degree-`k` Veronese coordinates of the vector `a`, length ``C(m-1+k, k)``."""
    if k < 1:
        raise ValueError("degree must be at least 1")
    a = np.asarray(a)
    if a.ndim != 1:
        raise ValueError("sym_power expects a vector")
    idx = _monomial_index(a.shape[0], k)
    return np.prod(a[idx], axis=1)


def sym_factor(A, k: int) -> np.ndarray:
    """Apply :func:`sym_power` to every column of `A`."""
    if k < 1:
        raise ValueError("degree must be at least 1")
    A = np.asarray(A)
    idx = _monomial_index(A.shape[0], k)
    return np.prod(A[idx, :], axis=1)


def gamma(n: int, k: int) -> int:
    """Dimension ``C(k+n, n)`` of degree-k forms on an (n+1)-dimensional space."""
    return comb(k + n, n)


@dataclass
class SymmetricDecomposition:
    """``Σ λ_i a_i^{⊗d}`` given by weights and an ``(n+1) x r`` point matrix."""

    weights: list
    points: object
    degree: int
    mode: ScalarMode = field(default=EXACT)

    def __post_init__(self):
        self.points = as_matrix(self.points, self.mode)
        w = as_matrix(list(self.weights), self.mode)
        self.weights = list(w[:, 0])
        if len(self.weights) != self.points.shape[1]:
            raise ValueError(
                f"{len(self.weights)} weights for {self.points.shape[1]} points"
            )
        if self.degree < 1:
            raise ValueError("degree must be positive")

    @property
    def n(self) -> int:
        """Projective dimension; the ambient space has dimension n + 1."""
        return self.points.shape[0] - 1

    @property
    def r(self) -> int:
        return self.points.shape[1]

    def zero_weights(self) -> list[int]:
        if self.mode.is_exact:
            return [i for i, w in enumerate(self.weights) if w == 0]
        return [i for i, w in enumerate(self.weights) if not abs(w) > self.mode.epsilon]

    def check_nondegenerate(self):
        """Raise if a weight or a point vanishes."""
        if self.zero_weights():
            raise ValueError(f"zero weights at positions {self.zero_weights()}")
        zc = zero_columns(self.points, self.mode)
        if zc:
            raise ValueError(f"zero points at positions {zc}")


def symmetric_heuristic_split(n: int, d: int) -> tuple[int, int, int]:
    """Split ``d = d_1 + d_2 + d_3`` with two parts ``⌊(d-1)/2⌋``, sorted descending."""
    if d < 3:
        raise ValueError("degree must be at least 3")
    if n < 1:
        raise ValueError("n must be at least 1")
    d1 = (d - 1) // 2
    return tuple(sorted((d1, d1, d - 2 * d1), reverse=True))


def _check_split(split, degree: int) -> tuple[int, int, int]:
    split = tuple(int(x) for x in split)
    if len(split) != 3 or sum(split) != degree or min(split) < 1:
        raise ValueError(f"split {split} is not a partition of {degree} into three parts")
    if not split[0] >= split[1] >= split[2]:
        raise ValueError(f"split {split} must be nonincreasing")
    return split


def symmetric_effective_range(n: int, split) -> int:
    """Effective range of the symmetric test, using ``Γ_{d_i}`` as block sizes."""
    split = tuple(split)
    dims = tuple(gamma(n, k) for k in split)
    return effective_range(dims, Tripartition.from_blocks(dims, ((1,), (2,), (3,))))


def symmetric_certify(dec: SymmetricDecomposition, split=None) -> Certificate:
    """Kruskal's criterion on ``a_i^{⊗d_1} ⊗ a_i^{⊗d_2} ⊗ a_i^{⊗d_3}``.

    Identifiable iff ``2r ≤ κ_1 + κ_2 + κ_3 − 2`` with κ_j the Kruskal rank
    of the degree-d_j symmetric powers of the points. Weights only need to
    be nonzero. A single nonzero term is accepted directly, since the
    inequality cannot hold at r = 1.
    """
    mode = dec.mode
    if dec.zero_weights():
        raise ValueError(f"zero weights at positions {dec.zero_weights()}")
    if split is None:
        split = symmetric_heuristic_split(dec.n, dec.degree)
    split = _check_split(split, dec.degree)
    r = dec.r
    cache: dict[int, int] = {}
    for k in split:
        if k not in cache:
            cache[k] = kruskal_rank(sym_factor(dec.points, k), mode).kappa
    kappas = [cache[k] for k in split]
    passed = 2 * r <= sum(kappas) - 2
    evidence = []
    if r == 1:
        nonzero = not zero_columns(dec.points, mode)
        evidence.append(Evidence(
            test="rank_one",
            parameters={},
            ranks={"nonzero_point": nonzero},
            threshold="the point is nonzero",
            passed=nonzero,
        ))
    evidence.append(Evidence(
        test="symmetric_reshaped_kruskal",
        parameters={
            "split": list(split),
            "gamma": [gamma(dec.n, k) for k in split],
            "effective_range": symmetric_effective_range(dec.n, split),
        },
        ranks={"kappa": kappas},
        threshold=f"need 2r={2 * r} <= k1+k2+k3-2={sum(kappas) - 2}",
        passed=passed,
    ))
    verdict = Verdict.IDENTIFIABLE if any(e.passed for e in evidence) else Verdict.INCONCLUSIVE
    return Certificate(verdict, r, mode, evidence)


def catalecticant_matrix(dec: SymmetricDecomposition) -> np.ndarray:
    """Most square symmetric flattening ``Σ λ_i s_m(a_i) s_m(a_i)^T`` for degree 2m."""
    if dec.degree % 2:
        raise ValueError("the catalecticant needs an even degree")
    m = dec.degree // 2
    S = sym_factor(dec.points, m)
    W = np.array(dec.weights, dtype=S.dtype)
    return (S * W[None, :]) @ S.T


@dataclass(frozen=True)
class CatalecticantReport:
    """Rank conditions of the catalecticant test.

    The final condition of the test, on the degree of the zero set of the
    kernel, is not checked, so the report never certifies identifiability.
    """

    rank: int
    r: int
    side: int
    bound: int
    rank_equals_r: bool
    within_bound: bool
    degree_check: str = "unverified"

    @property
    def status(self) -> str:
        if not self.within_bound:
            return "inapplicable"
        if not self.rank_equals_r:
            return "rank-condition-failed"
        return "necessary-conditions-passed"

    @property
    def verdict(self) -> Verdict:
        return Verdict.INCONCLUSIVE

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "r": self.r,
            "side": self.side,
            "bound": self.bound,
            "rank_equals_r": self.rank_equals_r,
            "within_bound": self.within_bound,
            "degree_check": self.degree_check,
            "status": self.status,
            "verdict": self.verdict.value,
        }


def catalecticant_test(dec: SymmetricDecomposition) -> CatalecticantReport:
    """Check ``rank C = r`` and ``r ≤ C(n+m, m) − (n+1)``."""
    C = catalecticant_matrix(dec)
    m = dec.degree // 2
    rk = rank(C, dec.mode)
    bound = gamma(dec.n, m) - (dec.n + 1)
    return CatalecticantReport(
        rank=rk,
        r=dec.r,
        side=C.shape[0],
        bound=bound,
        rank_equals_r=rk == dec.r,
        within_bound=dec.r <= bound,
    )


def comon_bound(n: int, d: int) -> Fraction:
    """Rank bound under which generic Waring and tensor rank decompositions agree."""
    if d < 3:
        raise ValueError("degree must be at least 3")
    if d == 3:
        return Fraction(3 * n, 2) - 1
    k, odd = divmod(d, 2)
    if odd:
        return comb(k + n, n) + Fraction(comb(2 + n, n), 2) - 1
    return Fraction(comb(k + n, n) - n - 1)
