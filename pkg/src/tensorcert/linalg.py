"""Scalar modes and the matrix kernels shared by every identifiability test.

Two scalar fields are supported:

* ``exact`` -- entries are :class:`fractions.Fraction`; ranks are computed by
  fraction-free (Bareiss) elimination on an integer rescaling of the matrix,
  with a modular full-rank shortcut.
* ``float`` -- entries are ``float64``; the rank is the number of singular
  values strictly larger than ``epsilon``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Literal

import numpy as np

DEFAULT_EPSILON = 1e-12

# Largest prime below 2**31, so products of two residues fit in int64.
MODULUS = 2_147_483_647


@dataclass(frozen=True)
class ScalarMode:
    """Scalar field used by a computation.

    Parameters
    ----------
    kind : {'exact', 'float'}
    epsilon : float
        Singular-value threshold for the float rank. Ignored in exact mode.
    """

    kind: Literal["exact", "float"] = "exact"
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        if self.kind not in ("exact", "float"):
            raise ValueError(f"unknown scalar mode {self.kind!r}")
        if self.kind == "float" and not self.epsilon > 0:
            raise ValueError("float mode needs a positive epsilon")

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def to_dict(self) -> dict:
        if self.is_exact:
            return {"kind": "exact"}
        return {"kind": "float", "epsilon": self.epsilon}


EXACT = ScalarMode("exact")
FLOAT = ScalarMode("float", DEFAULT_EPSILON)


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, (float, np.floating)):
        if not math.isfinite(x):
            raise ValueError(f"non-finite entry {x!r}")
        return Fraction(float(x))
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def as_matrix(M, mode: ScalarMode = EXACT) -> np.ndarray:
    """Return `M` as a 2-D array over the field of `mode`.

    Exact mode yields an ``object`` array of ``Fraction``; float mode a
    ``float64`` array. One-dimensional input is read as a single column.
    """
    if mode.is_exact:
        arr = np.array(M, dtype=object)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        if arr.ndim != 2:
            raise ValueError(f"expected a matrix, got an array with {arr.ndim} dimensions")
        out = np.empty(arr.shape, dtype=object)
        for idx, x in np.ndenumerate(arr):
            out[idx] = _to_fraction(x)
        return out
    if isinstance(M, np.ndarray) and M.dtype != object:
        arr = np.asarray(M, dtype=float)
    else:
        arr = np.array(M, dtype=object)
        arr = np.vectorize(_as_float, otypes=[float])(arr) if arr.size else arr.astype(float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ValueError(f"expected a matrix, got an array with {arr.ndim} dimensions")
    return arr


def _as_float(x) -> float:
    if isinstance(x, str):
        return float(Fraction(x.strip()))
    return float(x)


def khatri_rao(A, B) -> np.ndarray:
    """Columnwise Kronecker product of `A` (m x r) and `B` (n x r).

    Row ``i*n + j`` of the result holds ``A[i] * B[j]``, i.e. the row index of
    `A` varies slowest.
    """
    A = np.asarray(A)
    B = np.asarray(B)
    if A.ndim != 2 or B.ndim != 2:
        raise ValueError("khatri_rao expects two matrices")
    if A.shape[1] != B.shape[1]:
        raise ValueError(
            f"column counts differ: {A.shape[1]} and {B.shape[1]}"
        )
    m, r = A.shape
    n = B.shape[0]
    return (A[:, None, :] * B[None, :, :]).reshape(m * n, r)


def khatri_rao_chain(matrices) -> np.ndarray:
    """Khatri-Rao product of a nonempty sequence of matrices, left to right."""
    matrices = list(matrices)
    if not matrices:
        raise ValueError("need at least one matrix")
    return reduce(khatri_rao, matrices[1:], np.asarray(matrices[0]))


def khatri_rao_power(A, k: int) -> np.ndarray:
    """``A ⊙ A ⊙ ... ⊙ A`` with `k` factors."""
    if k < 1:
        raise ValueError("power must be at least 1")
    return khatri_rao_chain([A] * k)


# -- exact kernels -----------------------------------------------------------

def integer_columns(M) -> list[list[int]]:
    """Scale every column of a rational matrix to integers.

    Column scaling by a nonzero constant preserves the rank of every column
    subset, so the result can stand in for `M` in all rank tests.
    Returned as a list of rows.
    """
    M = np.asarray(M, dtype=object)
    rows, cols = M.shape
    out = [[0] * cols for _ in range(rows)]
    for j in range(cols):
        col = [_to_fraction(x) for x in M[:, j]]
        lcm = reduce(math.lcm, (x.denominator for x in col), 1)
        for i, x in enumerate(col):
            out[i][j] = x.numerator * (lcm // x.denominator)
    return out


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    a = [list(r) for r in rows]
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    prev = 1
    for c in range(n):
        if rank == m:
            break
        pivot = next((i for i in range(rank, m) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, m):
            f = a[i][c]
            row_i = a[i]
            row_r = a[rank]
            for j in range(c + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        rank += 1
    return rank


def _mod_array(int_rows: list[list[int]]) -> np.ndarray:
    return np.array([[x % MODULUS for x in row] for row in int_rows], dtype=np.int64).reshape(
        len(int_rows), len(int_rows[0]) if int_rows else 0
    )


def _modinv(v: np.ndarray) -> np.ndarray:
    """Elementwise inverse modulo MODULUS (zero maps to zero)."""
    result = np.ones_like(v)
    base = v % MODULUS
    e = MODULUS - 2
    while e:
        if e & 1:
            result = (result * base) % MODULUS
        base = (base * base) % MODULUS
        e >>= 1
    return result


def full_column_rank_mod_p(batch: np.ndarray) -> np.ndarray:
    """For a stack of ``(s, n, k)`` residue matrices, test rank ``k`` mod p.

    A ``True`` entry certifies full column rank over the rationals as well,
    since a nonzero k x k minor modulo p is nonzero over the integers.
    ``False`` is inconclusive over the rationals and must be confirmed.
    """
    B = np.array(batch, dtype=np.int64) % MODULUS
    s, n, k = B.shape
    ok = np.ones(s, dtype=bool)
    if k > n:
        ok[:] = False
        return ok
    idx = np.arange(s)
    for j in range(k):
        nz = B[:, j:, j] != 0
        has = nz.any(axis=1)
        ok &= has
        piv = j + nz.argmax(axis=1)
        top = B[idx, j, j:].copy()
        B[idx, j, j:] = B[idx, piv, j:]
        B[idx, piv, j:] = top
        inv = _modinv(B[:, j, j])
        B[:, j, j:] = (B[:, j, j:] * inv[:, None]) % MODULUS
        if j + 1 < n:
            f = B[:, j + 1:, j]
            B[:, j + 1:, j:] = (B[:, j + 1:, j:] - f[:, :, None] * B[:, None, j, j:]) % MODULUS
    return ok


def _exact_rank(M: np.ndarray) -> int:
    rows, cols = M.shape
    if rows == 0 or cols == 0:
        return 0
    ints = integer_columns(M)
    full = min(rows, cols)
    residues = _mod_array(ints)
    if rows >= cols:
        if full_column_rank_mod_p(residues[None, :, :])[0]:
            return full
    elif full_column_rank_mod_p(residues.T[None, :, :])[0]:
        return full
    return bareiss_rank(ints)


# -- public kernels -----------------------------------------------------------

def singular_values(M) -> np.ndarray:
    """Full singular spectrum of `M` in descending order."""
    M = np.asarray(M)
    if M.dtype == object:
        raise TypeError("singular values are only available in float mode")
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return np.zeros(0)
    return np.linalg.svd(M, compute_uv=False)


def rank(M, mode: ScalarMode = EXACT) -> int:
    """Rank of `M` over the field selected by `mode`.

    Exact mode is error-free. Float mode counts singular values strictly
    larger than ``mode.epsilon``.
    """
    M = as_matrix(M, mode)
    if M.size == 0:
        return 0
    if mode.is_exact:
        return _exact_rank(M)
    return int(np.count_nonzero(singular_values(M) > mode.epsilon))


def is_zero_column(M: np.ndarray, j: int, mode: ScalarMode) -> bool:
    col = M[:, j]
    if mode.is_exact:
        return all(x == 0 for x in col)
    return not float(np.linalg.norm(col.astype(float))) > mode.epsilon


def zero_columns(M, mode: ScalarMode = EXACT) -> list[int]:
    """Indices of columns that vanish (numerically, in float mode)."""
    M = as_matrix(M, mode)
    return [j for j in range(M.shape[1]) if is_zero_column(M, j, mode)]
