"""Perron eigenvalues of nonnegative matrices, and exact characteristic polynomials."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .polynomial import IntPolynomial


def strongly_connected_components(matrix: np.ndarray) -> list[np.ndarray]:
    """Vertex index arrays of each strongly connected component."""
    n = matrix.shape[0]
    if n == 0:
        return []
    ncomp, labels = connected_components(csr_matrix(matrix != 0), directed=True, connection="strong")
    return [np.flatnonzero(labels == c) for c in range(ncomp)]


def _dominates(matrix: np.ndarray, lam: float) -> bool:
    """True when ``lam`` exceeds the spectral radius of the irreducible ``matrix``.

    ``lam*I - A`` is a Z-matrix, and it is a nonsingular M-matrix exactly
    when every leading principal minor is positive, i.e. when Gaussian
    elimination without pivoting produces only positive pivots.
    """
    m = lam * np.eye(matrix.shape[0]) - matrix
    n = m.shape[0]
    for i in range(n):
        piv = m[i, i]
        if piv <= 0:
            return False
        if i + 1 < n:
            m[i + 1 :, i:] -= np.outer(m[i + 1 :, i] / piv, m[i, i:])
    return True


def _bisect(matrix: np.ndarray, lo: float, hi: float, tol: float) -> float:
    while not _dominates(matrix, hi):
        lo, hi = hi, 2 * hi + 1
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _dominates(matrix, mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _perron_irreducible(matrix: np.ndarray, tol: float, max_iter: int) -> float:
    n = matrix.shape[0]
    if n == 1:
        return float(matrix[0, 0])
    # A + I is primitive for irreducible A, so power iteration converges;
    # the Collatz-Wielandt quotients bracket the Perron value at every step
    shifted = matrix + np.eye(n)
    x = np.ones(n) / n
    lo, hi = 0.0, float(matrix.sum(axis=1).max())
    for it in range(max_iter):
        y = shifted @ x
        ratios = y / x
        lo = max(lo, float(ratios.min()) - 1.0)
        hi = min(hi, float(ratios.max()) - 1.0)
        if hi - lo <= tol:
            return 0.5 * (lo + hi)
        x = y / y.sum()
        if not np.all(x > 0):
            break
    return _bisect(matrix, max(lo, 0.0), hi, tol)


def spectral_radius(matrix: Sequence[Sequence[float]] | np.ndarray, tol: float = 1e-12, max_iter: int = 5000) -> float:
    """Perron eigenvalue of a square nonnegative matrix.

    Computed per strongly connected component and maximized. Each
    component uses power iteration on ``A + I`` with Collatz-Wielandt
    bounds, falling back to bisection on the M-matrix (leading-minor sign)
    test when the iteration stalls. The empty matrix has radius 0.
    """
    a = np.asarray(matrix, dtype=float)
    if a.size == 0:
        return 0.0
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if np.any(a < 0):
        raise ValueError("matrix must be nonnegative")
    best = 0.0
    for comp in strongly_connected_components(a):
        sub = a[np.ix_(comp, comp)]
        if len(comp) == 1 and sub[0, 0] == 0:
            continue
        best = max(best, _perron_irreducible(sub, tol, max_iter))
    return best


def characteristic_polynomial(matrix: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(xI - A)`` of an integer matrix, exactly (Faddeev-LeVerrier)."""
    a = [[int(v) for v in row] for row in matrix]
    n = len(a)
    if n == 0:
        return IntPolynomial((1,))
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prev = m
        m = [[sum(a[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            m[i][i] += coeffs[n - k + 1]
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        trace = sum(am[i][i] for i in range(n))
        assert trace % k == 0
        coeffs[n - k] = -trace // k
    return IntPolynomial(tuple(coeffs))
