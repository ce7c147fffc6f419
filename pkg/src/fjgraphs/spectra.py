"""
Spectral analysis of the permutahedron family FJ(n, 1).

Under the stacked insertion ordering, the n! x n! adjacency matrix of
FJ(n, 1) splits into (n-1)!-sized blocks that are all regular; recording
each block's regularity gives an n x n symmetric tridiagonal integer matrix
(corners n-2, interior diagonal n-3, ones beside the diagonal).  Expanding a
length-n vector into block indicators commutes with the two matrices --
checked exactly in integers by ``verify_intertwining`` -- so every
eigenvalue of the small matrix is an eigenvalue of the graph.  That turns an
n!-sized eigenproblem into an n-sized one for part of the spectrum,
including the largest eigenvalue n-1 (constant row sums on both sides).

Eigenvalues are computed by two deliberately different routes that check
each other: a cyclic Jacobi sweep for dense symmetric matrices, and
Sturm-count bisection for symmetric tridiagonal ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import factorial
from typing import Sequence

import numpy as np

from .config import EIG_TOL, EIGEN_CAP, MATCH_TOL, MATRIX_CAP, MERGE_TOL, CapExceeded, TheoremViolation
from .blocks import adjacency_matrix, block, block_regularity, concatenated_ordering
from .graphs import check_ordering
from .perms import Perm, enumerate_permutations


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues in descending order, with multiplicities."""

    values: tuple[float, ...]
    multiplicities: tuple[int, ...]

    @property
    def order(self) -> int:
        """Order of the matrix the spectrum came from."""
        return sum(self.multiplicities)

    @classmethod
    def from_eigenvalues(cls, raw, merge_tol: float = MERGE_TOL) -> "Spectrum":
        """Sort descending and collapse values closer than ``merge_tol``."""
        vals = sorted((float(x) for x in raw), reverse=True)
        out_v: list[float] = []
        out_m: list[int] = []
        for x in vals:
            if out_v and out_v[-1] - x <= merge_tol:
                out_m[-1] += 1
            else:
                out_v.append(x)
                out_m.append(1)
        return cls(tuple(out_v), tuple(out_m))


def regularity_matrix(n: int) -> np.ndarray:
    """
    The n x n symmetric tridiagonal matrix of block regularities of
    FJ(n, 1) under the stacked ordering: corners n-2, interior diagonal
    n-3, ones on the sub/super diagonal.  Every row sums to n-1, so n-1 is
    always an eigenvalue (all-ones eigenvector).

    >>> regularity_matrix(4).tolist()
    [[2, 1, 0, 0], [1, 1, 1, 0], [0, 1, 1, 1], [0, 0, 1, 2]]
    """
    if n < 2:
        raise ValueError("need n >= 2")
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        M[i, i] = n - 2 if i in (0, n - 1) else n - 3
        if i + 1 < n:
            M[i, i + 1] = M[i + 1, i] = 1
    return M


def regularity_matrix_from_blocks(n: int, ordering: Sequence[Perm] | None = None, cap: int = MATRIX_CAP) -> np.ndarray:
    """
    The same matrix read off empirically: build the adjacency matrix of
    FJ(n, 1) under the stacked ordering (from an ordering of the
    permutations of [n-1], lexicographic by default) and record each
    block's regularity.  A block with unequal row or column sums would
    break the whole construction, so that raises TheoremViolation.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    S = enumerate_permutations(n - 1) if ordering is None else check_ordering(ordering, n - 1)
    A = adjacency_matrix(n, 1, concatenated_ordering(S), cap=cap)
    b = factorial(n - 1)
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            r = block_regularity(block(A, i, j, b))
            if r is None:
                raise TheoremViolation(f"block ({i},{j}) of the FJ({n},1) decomposition is not regular")
            M[i - 1, j - 1] = r
    return M


def eig_symmetric(matrix, tol: float = EIG_TOL, merge_tol: float = MERGE_TOL, cap: int = EIGEN_CAP) -> Spectrum:
    """
    Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.

    Sweeps rotate away each off-diagonal element in turn (rows and columns
    updated with vectorized operations) until the off-diagonal Frobenius
    norm falls below ``tol``.  Small elements are zeroed outright once they
    can no longer affect the diagonal at working precision.  The trace and
    the Frobenius norm are invariant under the rotations, which the tests
    use as built-in sanity identities.
    """
    A = np.array(matrix, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("a square matrix is required")
    m = A.shape[0]
    if m > cap:
        raise CapExceeded(f"order {m} exceeds the eigensolver cap {cap}")
    if m == 0:
        return Spectrum((), ())
    scale = float(np.abs(A).max())
    if float(np.abs(A - A.T).max()) > max(tol, 1e-12) * max(1.0, scale):
        raise ValueError("matrix is not symmetric")
    A = (A + A.T) / 2.0
    if m == 1:
        return Spectrum.from_eigenvalues([A[0, 0]], merge_tol)

    for sweep in range(100):
        # Frobenius norm of the off-diagonal part, summed directly: the
        # difference trace-based shortcut cancels catastrophically near
        # convergence and would hide it.
        saved_diag = np.diag(A).copy()
        np.fill_diagonal(A, 0.0)
        off = float(np.linalg.norm(A))
        np.fill_diagonal(A, saved_diag)
        if off <= tol:
            break
        thresh = 0.2 * off / (m * m) if sweep < 3 else 0.0
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = float(A[p, q])
                if apq == 0.0:
                    continue
                g = 100.0 * abs(apq)
                app = float(A[p, p])
                aqq = float(A[q, q])
                if sweep > 3 and abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                    A[p, q] = A[q, p] = 0.0
                    continue
                if abs(apq) <= thresh:
                    continue
                h = aqq - app
                if abs(h) + g == abs(h):
                    t = apq / h
                else:
                    theta = 0.5 * h / apq
                    t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rp = A[p, :].copy()
                rq = A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                cp = A[:, p].copy()
                cq = A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                A[p, q] = A[q, p] = 0.0
    else:
        raise ArithmeticError("Jacobi iteration did not converge in 100 sweeps")
    return Spectrum.from_eigenvalues(np.diag(A), merge_tol)


def eig_tridiagonal(matrix, tol: float = EIG_TOL, merge_tol: float = MERGE_TOL) -> Spectrum:
    """
    Eigenvalues of a symmetric tridiagonal matrix by Sturm-count bisection.

    The number of eigenvalues below x follows from the signs in the ratio
    recurrence of leading principal minors of (T - xI); each eigenvalue is
    then bisected inside the Gershgorin interval until the bracket is
    narrower than ``tol``.  No similarity transforms, so this route is
    independent of the Jacobi solver and the two can check each other.
    """
    T = np.asarray(matrix, dtype=np.float64)
    if T.ndim != 2 or T.shape[0] != T.shape[1]:
        raise ValueError("a square matrix is required")
    n = T.shape[0]
    if n == 0:
        return Spectrum((), ())
    if n > 2 and float(np.abs(np.triu(T, 2)).max()) > 0.0:
        raise ValueError("matrix is not tridiagonal")
    if float(np.abs(T - T.T).max()) > max(tol, 1e-12) * max(1.0, float(np.abs(T).max())):
        raise ValueError("matrix is not symmetric")
    d = np.diag(T).astype(np.float64)
    if n == 1:
        return Spectrum.from_eigenvalues([d[0]], merge_tol)
    e = np.diag(T, 1).astype(np.float64)
    e2 = e * e

    radius = np.zeros(n)
    radius[:-1] += np.abs(e)
    radius[1:] += np.abs(e)
    lo = float((d - radius).min())
    hi = float((d + radius).max())

    def count_below(x: float) -> int:
        count = 0
        q = d[0] - x
        if q < 0.0:
            count += 1
        for i in range(1, n):
            if q == 0.0:
                q = 1e-300
            q = d[i] - x - e2[i - 1] / q
            if q < 0.0:
                count += 1
        return count

    width = max(tol, 8.0 * np.finfo(np.float64).eps * max(abs(lo), abs(hi), 1.0))
    found = []
    for target in range(1, n + 1):
        a, b = lo, hi
        while b - a > width:
            mid = 0.5 * (a + b)
            if count_below(mid) >= target:
                b = mid
            else:
                a = mid
        found.append(0.5 * (a + b))
    return Spectrum.from_eigenvalues(found, merge_tol)


def adjacency_spectrum(
    n: int,
    k: int = 1,
    ordering: Sequence[Perm] | None = None,
    tol: float = EIG_TOL,
    merge_tol: float = MERGE_TOL,
    matrix_cap: int = MATRIX_CAP,
    eigen_cap: int = EIGEN_CAP,
) -> Spectrum:
    """Full spectrum of FJ(n, k): build the adjacency matrix, run Jacobi."""
    A = adjacency_matrix(n, k, ordering, cap=matrix_cap)
    return eig_symmetric(A, tol=tol, merge_tol=merge_tol, cap=eigen_cap)


def lift_vector(vec, n: int) -> np.ndarray:
    """
    Expand a length-n vector to length n! by giving every one of the
    (n-1)! coordinates of block i the value vec[i]: the linear map that
    sends basis vector i to the indicator of ordering block i.  The dtype
    of the input is preserved, so integer vectors lift exactly.

    >>> lift_vector([1, 0, 0], 3).tolist()
    [1, 1, 0, 0, 0, 0]
    """
    v = np.asarray(vec)
    if v.ndim != 1 or v.shape[0] != n:
        raise ValueError(f"expected a vector of length {n}")
    return np.repeat(v, factorial(n - 1))


def verify_intertwining(n: int, ordering: Sequence[Perm] | None = None, cap: int = MATRIX_CAP) -> bool:
    """
    Exact integer check that block-indicator lifting commutes with the two
    matrices: A @ lift(e_i) == lift(M @ e_i) for every basis vector e_i,
    where A is the FJ(n, 1) adjacency matrix under the stacked ordering and
    M is the regularity matrix.  No tolerances are involved -- both sides
    are integer vectors.  When this holds, every eigenpair of M lifts to an
    eigenpair of A.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    S = enumerate_permutations(n - 1) if ordering is None else check_ordering(ordering, n - 1)
    A = adjacency_matrix(n, 1, concatenated_ordering(S), cap=cap).astype(np.int64)
    M = regularity_matrix(n)
    for i in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[i] = 1
        if not np.array_equal(A @ lift_vector(e, n), lift_vector(M @ e, n)):
            return False
    return True


@dataclass(frozen=True)
class SubsetMatch:
    """Outcome of matching one spectrum inside another."""

    ok: bool
    matching: tuple[int, ...]  # index into the big spectrum per small value
    unmatched: float | None = None  # first small value without a partner


def spectrum_subset_check(small: Spectrum, big: Spectrum, tol: float = MATCH_TOL) -> SubsetMatch:
    """
    Does every distinct value of ``small`` occur in ``big`` within ``tol``
    (multiplicities ignored)?  Returns the per-value matching on success,
    or the first unmatched value.
    """
    matching: list[int] = []
    for x in small.values:
        hit = None
        for j, y in enumerate(big.values):
            if abs(x - y) <= tol:
                hit = j
                break
        if hit is None:
            return SubsetMatch(False, tuple(matching), float(x))
        matching.append(hit)
    return SubsetMatch(True, tuple(matching), None)


def conjecture_second_largest(
    n: int,
    tol: float = MATCH_TOL,
    graph_spectrum: Spectrum | None = None,
    matrix_cap: int = MATRIX_CAP,
    eigen_cap: int = EIGEN_CAP,
    eig_tol: float = EIG_TOL,
    merge_tol: float = MERGE_TOL,
) -> bool:
    """
    Evidence check, never asserted as a theorem: is the second-largest
    distinct eigenvalue of FJ(n, 1) among the eigenvalues of the regularity
    matrix?  (The largest always is: both equal the degree n-1.)  Passing a
    precomputed ``graph_spectrum`` skips the expensive full eigensolve.
    """
    if graph_spectrum is None:
        graph_spectrum = adjacency_spectrum(
            n, 1, tol=eig_tol, merge_tol=merge_tol, matrix_cap=matrix_cap, eigen_cap=eigen_cap
        )
    m_spectrum = eig_tridiagonal(regularity_matrix(n), tol=eig_tol, merge_tol=merge_tol)
    if len(graph_spectrum.values) < 2:
        return True
    second = graph_spectrum.values[1]
    return any(abs(second - y) <= tol for y in m_spectrum.values)
