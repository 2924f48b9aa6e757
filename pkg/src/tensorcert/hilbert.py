"""Hilbert functions, h-vectors and Cayley-Bacharach tests for finite point sets.

Everything reduces to ranks of evaluation matrices: ``H_Z(d)`` is the rank
of the matrix whose columns are the degree-d Veronese images of the points.
"""
from __future__ import annotations

import warnings

import numpy as np

from .kruskal import glp, pairwise_distinct
from .linalg import EXACT, ScalarMode, as_matrix, rank
from .symmetric import sym_factor


class PointSet:
    """Distinct points of projective n-space, one per column of an ``(n+1) x ℓ`` matrix.

    Raises ``ValueError`` on a zero column or two proportional columns.
    """

    def __init__(self, M, mode: ScalarMode = EXACT):
        self.mode = mode
        self.M = as_matrix(M, mode)
        if not mode.is_exact:
            warnings.warn(
                f"Hilbert function computed in float mode (epsilon={mode.epsilon})",
                stacklevel=2,
            )
        self._check_distinct()

    def _check_distinct(self):
        M, mode = self.M, self.mode
        if pairwise_distinct(M, mode):
            return
        for j in range(M.shape[1]):
            if rank(M[:, [j]], mode) == 0:
                raise ValueError(f"point {j} is the zero vector")
        for i in range(M.shape[1]):
            for j in range(i + 1, M.shape[1]):
                if rank(M[:, [i, j]], mode) < 2:
                    raise ValueError(f"points {i} and {j} coincide projectively")

    @property
    def n(self) -> int:
        return self.M.shape[0] - 1

    def __len__(self) -> int:
        return self.M.shape[1]

    def without(self, j: int) -> "PointSet":
        keep = [i for i in range(len(self)) if i != j]
        return _unchecked(self.M[:, keep], self.mode)

    def union(self, other: "PointSet") -> "PointSet":
        if self.M.shape[0] != other.M.shape[0]:
            raise ValueError("point sets live in different spaces")
        return PointSet._from_matrix(np.hstack([self.M, other.M]), self.mode)

    @classmethod
    def _from_matrix(cls, M, mode):
        obj = _unchecked(M, mode)
        obj._check_distinct()
        return obj


def _unchecked(M, mode) -> PointSet:
    obj = PointSet.__new__(PointSet)
    obj.M = M
    obj.mode = mode
    return obj


def hilbert_function(Z: PointSet, d: int) -> int:
    """``H_Z(d)``: rank of the degree-d Veronese images of the points."""
    if d < 0:
        return 0
    if len(Z) == 0:
        return 0
    if d == 0:
        return 1
    return rank(sym_factor(Z.M, d), Z.mode)


def hilbert_values(Z: PointSet) -> list[int]:
    """``H_Z(0), H_Z(1), …`` up to the first degree where the value reaches ℓ."""
    ell = len(Z)
    values = [hilbert_function(Z, 0)]
    while values[-1] < ell:
        values.append(hilbert_function(Z, len(values)))
        # H is stuck below ℓ only if the rank threshold misbehaves
        if len(values) > 1 and values[-1] == values[-2]:
            raise ArithmeticError(
                f"Hilbert function stalled at {values[-1]} < {ell}; "
                "the numerical rank threshold is unreliable here"
            )
    return values


def h_vector(Z: PointSet) -> list[int]:
    """First differences of the Hilbert function until it reaches ℓ."""
    values = hilbert_values(Z)
    return [values[0]] + [b - a for a, b in zip(values, values[1:])]


def cayley_bacharach(Z: PointSet, d: int) -> bool:
    """CB(d): no degree-d form separates a point of Z from the others.

    A point P is separated exactly when dropping it lowers ``H(d)``.
    """
    if len(Z) < 2:
        raise ValueError("Cayley-Bacharach needs at least two points")
    full = hilbert_function(Z, d)
    return all(hilbert_function(Z.without(j), d) == full for j in range(len(Z)))


def span_intersection_dim(A: PointSet, B: PointSet, d: int) -> int:
    """Projective dimension of ``⟨v_d(A)⟩ ∩ ⟨v_d(B)⟩`` (−1 when empty).

    Requires A and B disjoint and each with linearly independent
    degree-d images.
    """
    try:
        Z = A.union(B)
    except ValueError as exc:
        raise ValueError(f"A and B are not disjoint: {exc}") from None
    if hilbert_function(A, d) != len(A):
        raise ValueError(f"the degree-{d} images of A are linearly dependent")
    if hilbert_function(B, d) != len(B):
        raise ValueError(f"the degree-{d} images of B are linearly dependent")
    return len(A) + len(B) - hilbert_function(Z, d) - 1


def glp_points(Z: PointSet) -> bool:
    """General linear position of the points."""
    return glp(Z.M, Z.mode)
