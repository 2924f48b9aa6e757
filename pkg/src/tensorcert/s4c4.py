"""Decision procedure for Waring decompositions of 4x4x4x4 symmetric tensors.

Steps, for ``𝔄 = Σ λ_i a_i^{∘4}`` with ``a_i ∈ 𝔽^4``:

* S1  r ≥ 8: inconclusive.
* S2  r = 1: identifiable iff the term is nonzero.
* S3  2 ≤ r ≤ 6: identifiable iff ``r ≤ κ(A) + κ(A⊙A)/2 − 1``.
* S4  r = 7: (a) ``rank(A⊙A⊙A⊙A) = 7`` or the decomposition is not minimal
  and hence not 7-identifiable; (b) ``κ(A) = 4``; (c) the tangent spaces at
  the seven points span a 28-dimensional space; (d) identifiable.

Weights enter only through nonzero checks: every test is invariant under
nonzero column scaling, so no fourth roots are taken.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .kruskal import kruskal_rank
from .certificate import Verdict
from .linalg import EXACT, ScalarMode, as_matrix, khatri_rao_power, rank, singular_values
from .symmetric import SymmetricDecomposition, monomials, sym_factor

DEGREE = 4
AMBIENT = 4
# Affine dimension of the 7-secant of v_4(P^3): 7 points x 4 tangent directions.
SECANT_DIM = 28

STEPS = ("S1", "S2", "S3a", "S3b", "S4a", "S4b", "S4c", "S4d")


def tangent_basis(a) -> np.ndarray:
    """Jacobian of ``sym_power(·, 4)`` at `a`, a 35 x 4 matrix.

    Column j holds the partial derivatives with respect to ``a_j``; its
    columns span the affine tangent space of the Veronese cone at
    ``a^{∘4}``.
    """
    a = np.asarray(a)
    if a.shape != (AMBIENT,):
        raise ValueError(f"expected a vector of length {AMBIENT}, got shape {a.shape}")
    if a.dtype == object:
        zero = all(x == 0 for x in a)
    else:
        zero = not np.any(a)
    if zero:
        raise ValueError("the tangent space at the zero vector is undefined")
    rows = []
    for t in monomials(AMBIENT, DEGREE):
        row = []
        for j in range(AMBIENT):
            c = t.count(j)
            if c == 0:
                row.append(0 * a[0])
                continue
            rest = list(t)
            rest.remove(j)
            row.append(c * math.prod((a[i] for i in rest), start=1))
        rows.append(row)
    return np.array(rows, dtype=a.dtype)


def terracini_matrix(A) -> np.ndarray:
    """``T = [T_1 ⋯ T_r]`` with ``T_i`` spanning the tangent space at ``a_i^{∘4}``.

    Each block is the symmetrisation ``Σ_σ σ(a⊗a⊗a⊗e_j)`` read in the
    monomial coordinates, which is ``3!`` times :func:`tangent_basis`.
    The constant leaves the rank unchanged and fixes the scale of the
    reported singular values.
    """
    A = np.asarray(A)
    scale = math.factorial(DEGREE - 1)
    return np.hstack([scale * tangent_basis(A[:, i]) for i in range(A.shape[1])])


def terracini_rank(A, mode: ScalarMode = EXACT) -> int:
    """Rank of the concatenated tangent bases of the columns of `A`."""
    A = as_matrix(A, mode)
    if A.shape[0] != AMBIENT:
        raise ValueError(f"expected {AMBIENT} rows, got {A.shape[0]}")
    return rank(terracini_matrix(A), mode)


@dataclass
class S4C4Report:
    """Trace of one run; fields past ``step_reached`` stay ``None``."""

    verdict: Verdict
    step_reached: str
    r: int
    mode: ScalarMode
    kappa1: int | None = None
    kappa2: int | None = None
    kr4_rank: int | None = None
    kruskal_A: int | None = None
    terracini_rank: int | None = None
    kr4_singular_values: list[float] | None = None
    singular_values: list[float] | None = None
    message: str = ""
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "verdict": self.verdict.value,
            "step_reached": self.step_reached,
            "r": self.r,
            "mode": self.mode.to_dict(),
            "message": self.message,
        }
        for key in ("kappa1", "kappa2", "kr4_rank", "kruskal_A", "terracini_rank",
                    "kr4_singular_values", "singular_values"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


def _term_is_zero(dec: SymmetricDecomposition, i: int) -> bool:
    col = dec.points[:, i]
    if dec.mode.is_exact:
        return dec.weights[i] == 0 or all(x == 0 for x in col)
    eps = dec.mode.epsilon
    return not abs(dec.weights[i]) > eps or not float(np.linalg.norm(col)) > eps


def certify_s4c4(dec: SymmetricDecomposition) -> S4C4Report:
    """Run steps S1-S4 on a decomposition in ``S^4 𝔽^4``."""
    if dec.degree != DEGREE or dec.points.shape[0] != AMBIENT:
        raise ValueError(
            f"expected degree {DEGREE} and {AMBIENT} rows, got degree {dec.degree} "
            f"and {dec.points.shape[0]} rows"
        )
    r = dec.r
    mode = dec.mode
    if r < 1:
        raise ValueError("the decomposition has no terms")
    if r >= 8:
        return S4C4Report(Verdict.INCONCLUSIVE, "S1", r, mode,
                          message="r >= 8: identifiability cannot be proved")
    if r == 1:
        if _term_is_zero(dec, 0):
            return S4C4Report(Verdict.NOT_IDENTIFIABLE, "S2", r, mode,
                              message="the only term is zero")
        return S4C4Report(Verdict.IDENTIFIABLE, "S2", r, mode,
                          message="a single nonzero term is unique")
    zero_terms = [i for i in range(r) if _term_is_zero(dec, i)]
    A = dec.points
    if r <= 6:
        k1 = kruskal_rank(A, mode).kappa
        k2 = kruskal_rank(sym_factor(A, 2), mode).kappa
        ok = 2 * r <= 2 * k1 + k2 - 2 and not zero_terms
        return S4C4Report(
            Verdict.IDENTIFIABLE if ok else Verdict.INCONCLUSIVE, "S3b", r, mode,
            kappa1=k1, kappa2=k2,
            message=f"r={r} {'<=' if ok else '>'} k1 + k2/2 - 1 = {k1 + k2 / 2 - 1:g}"
            + (f"; zero terms at {zero_terms}" if zero_terms else ""),
        )
    # r == 7
    report = S4C4Report(Verdict.INCONCLUSIVE, "S4a", r, mode)
    K4 = khatri_rao_power(A, DEGREE)
    report.kr4_rank = rank(K4, mode)
    if not mode.is_exact:
        report.kr4_singular_values = [float(s) for s in singular_values(K4)]
    if report.kr4_rank != 7 or zero_terms:
        report.verdict = Verdict.NOT_IDENTIFIABLE
        report.message = f"rank(A⊙A⊙A⊙A) = {report.kr4_rank} != 7: the decomposition is not minimal"
        return report
    report.step_reached = "S4b"
    report.kruskal_A = kruskal_rank(A, mode).kappa
    if report.kruskal_A != AMBIENT:
        report.message = f"Kruskal rank of A is {report.kruskal_A}, not {AMBIENT}"
        return report
    report.step_reached = "S4c"
    T = terracini_matrix(A)
    report.terracini_rank = rank(T, mode)
    if not mode.is_exact:
        report.singular_values = [float(s) for s in singular_values(T)]
    if report.terracini_rank != SECANT_DIM:
        report.message = (
            f"tangent spaces span dimension {report.terracini_rank} < {SECANT_DIM}"
        )
        return report
    report.step_reached = "S4d"
    report.verdict = Verdict.IDENTIFIABLE
    report.message = "7-identifiable"
    return report
