"""Dense real linear algebra used throughout the package.

Matrices are plain 2-D ``numpy.ndarray`` objects of dtype float64.  The
eigen- and singular-value routines are Jacobi methods written on top of
numpy array arithmetic, using the round-robin (parallel) ordering so that
every sweep rotates disjoint index pairs in a single vectorised step.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import InputError

DEFAULT_RANK_TOL = 1e-8
_OFF_TOL = 1e-14
_MAX_SWEEPS = 60


def as_matrix(A, name="matrix") -> np.ndarray:
    """Coerce ``A`` to a finite float64 2-D array or raise :class:`InputError`."""
    try:
        M = np.array(A, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{name}: not a numeric array ({exc})") from None
    if M.ndim != 2:
        raise InputError(f"{name}: expected a 2-D array, got ndim={M.ndim}")
    if not np.all(np.isfinite(M)):
        raise InputError(f"{name}: entries must be finite")
    return M


def _require_square(M, name):
    if M.shape[0] != M.shape[1]:
        raise InputError(f"{name}: expected a square matrix, got {M.shape}")


@lru_cache(maxsize=None)
def _round_robin(n):
    """Pair schedule: n-1 (or n) rounds of disjoint pairs covering all i<j."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if p < n and q < n]
        if pairs:
            P = np.array([p for p, _ in pairs], dtype=np.intp)
            Q = np.array([q for _, q in pairs], dtype=np.intp)
            rounds.append((P, Q))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _rotation(app, aqq, apq):
    """Jacobi rotation (c, s) annihilating apq for each pair."""
    active = apq != 0.0
    safe = np.where(active, apq, 1.0)
    # a tiny apq overflows tau to inf, which gives t = 0 (no rotation)
    with np.errstate(over="ignore"):
        tau = (aqq - app) / (2.0 * safe)
        t = np.where(tau >= 0.0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    c = np.where(active, c, 1.0)
    s = np.where(active, s, 0.0)
    return c, s, active


def _rotate_columns(X, P, Q, c, s):
    XP = X[:, P]
    XQ = X[:, Q]
    X[:, P] = c * XP - s * XQ
    X[:, Q] = s * XP + c * XQ


def _fix_signs(vectors):
    """Make the first non-negligible coordinate of each column positive."""
    for j in range(vectors.shape[1]):
        col = vectors[:, j]
        big = np.abs(col) > 1e-12 * max(np.max(np.abs(col)), 1e-300)
        if np.any(big) and col[np.argmax(big)] < 0:
            vectors[:, j] = -col
    return vectors


def sym_eig(M, tol=1e-10):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi.

    Parameters
    ----------
    M : array_like
        Square matrix with ``||M - M^T||_HS <= tol * ||M||_HS``.
    tol : float
        Symmetry tolerance.

    Returns
    -------
    eigenvalues : ndarray
        Non-increasing eigenvalues.
    eigenvectors : ndarray
        Orthogonal matrix whose columns are the matching eigenvectors, with
        the first non-negligible coordinate of each column positive.
    """
    M = as_matrix(M)
    _require_square(M, "sym_eig")
    scale = np.linalg.norm(M)
    if np.linalg.norm(M - M.T) > tol * scale:
        raise InputError("sym_eig: matrix is not symmetric within tolerance")
    n = M.shape[0]
    A = 0.5 * (M + M.T)
    V = np.eye(n)
    if scale == 0.0 or n == 1:
        return np.diag(A).copy(), V
    schedule = _round_robin(n)
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(_MAX_SWEEPS):
        if math.sqrt(np.sum(A[off_mask] ** 2)) <= _OFF_TOL * scale:
            break
        for P, Q in schedule:
            c, s, active = _rotation(A[P, P], A[Q, Q], A[P, Q])
            if not np.any(active):
                continue
            _rotate_columns(A, P, Q, c, s)
            A = A.T.copy()
            _rotate_columns(A, P, Q, c, s)
            A[P, Q] = 0.0
            A[Q, P] = 0.0
            _rotate_columns(V, P, Q, c, s)
    w = np.diag(A).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], _fix_signs(V[:, order])


def svd_jacobi(A):
    """Thin SVD by one-sided (Hestenes) Jacobi.

    Returns ``U, s, Vt`` with ``A = U @ diag(s) @ Vt`` and ``s``
    non-increasing, of length ``min(A.shape)``.  When ``cols <= rows``,
    ``Vt`` is a full orthogonal matrix; columns of ``U`` belonging to zero
    singular values are zero.
    """
    A = as_matrix(A)
    m, n = A.shape
    if n > m:
        U, s, Vt = svd_jacobi(A.T)
        return Vt.T, s, U.T
    G = A.copy()
    V = np.eye(n)
    if n == 0:
        return G, np.zeros(0), V
    schedule = _round_robin(n)
    for _ in range(_MAX_SWEEPS):
        rotated = False
        for P, Q in schedule:
            GP = G[:, P]
            GQ = G[:, Q]
            alpha = np.einsum("ij,ij->j", GP, GP)
            beta = np.einsum("ij,ij->j", GQ, GQ)
            gamma = np.einsum("ij,ij->j", GP, GQ)
            gamma = np.where(np.abs(gamma) > 1e-15 * np.sqrt(alpha * beta), gamma, 0.0)
            c, s, active = _rotation(alpha, beta, gamma)
            if not np.any(active):
                continue
            rotated = True
            _rotate_columns(G, P, Q, c, s)
            _rotate_columns(V, P, Q, c, s)
        if not rotated:
            break
    sv = np.sqrt(np.einsum("ij,ij->j", G, G))
    order = np.argsort(-sv, kind="stable")
    sv = sv[order]
    G = G[:, order]
    V = V[:, order]
    U = np.zeros_like(G)
    nz = sv > 0
    U[:, nz] = G[:, nz] / sv[nz]
    return U, sv, V.T


def singular_values(A):
    """Singular values s_0 >= s_1 >= ... of ``A``, one per column (zeros padded)."""
    A = as_matrix(A)
    _, s, _ = svd_jacobi(A)
    out = np.zeros(A.shape[1])
    out[: s.size] = s
    return out


def hs_norm(A) -> float:
    """Hilbert-Schmidt (Frobenius) norm."""
    A = as_matrix(A)
    return float(math.sqrt(np.sum(A * A)))


def spectral_norm(A) -> float:
    s = singular_values(A)
    return float(s[0]) if s.size else 0.0


def numerical_rank(A, tol=DEFAULT_RANK_TOL) -> int:
    """Number of singular values exceeding ``tol * s_0`` (0 for the zero matrix)."""
    if tol <= 0:
        raise InputError("numerical_rank: tol must be positive")
    s = singular_values(A)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def spectrum_report(A, tol=DEFAULT_RANK_TOL) -> dict:
    s = singular_values(A)
    s0 = float(s[0]) if s.size else 0.0
    rank = 0 if s0 == 0.0 else int(np.sum(s > tol * s0))
    return {
        "singular_values": s.tolist(),
        "numerical_rank": rank,
        "hs_norm": hs_norm(A),
        "spectral_norm": s0,
    }


def orthonormalize(rows, tol=DEFAULT_RANK_TOL):
    """Gram-Schmidt on the rows of ``rows``, dropping dependent rows.

    A row is dropped when its residual after projection is at most
    ``tol`` times the largest input row norm.  Each projection is done
    twice, which keeps the output orthonormal to working precision.
    """
    X = as_matrix(rows)
    ncols = X.shape[1]
    norms = np.linalg.norm(X, axis=1)
    ref = float(norms.max()) if norms.size else 0.0
    basis = []
    if ref == 0.0:
        return np.zeros((0, ncols))
    for row in X:
        r = row.copy()
        for _ in range(2):
            for b in basis:
                r -= (b @ r) * b
        nr = np.linalg.norm(r)
        if nr > tol * ref:
            basis.append(r / nr)
    return np.array(basis).reshape(len(basis), ncols)


def solve_right_factor(V, W, tol=DEFAULT_RANK_TOL):
    """Find square ``S`` with ``W = S V``.

    ``S`` equals ``W V^+`` on the column space of ``V`` and the identity on
    its orthogonal complement.  Requires ``ker V`` to lie in ``ker W``.

    Raises
    ------
    InputError
        Shapes differ.
    ConsistencyError
        ``W`` does not vanish on the kernel of ``V`` within ``tol``.
    """
    from .errors import ConsistencyError

    V = as_matrix(V, "V")
    W = as_matrix(W, "W")
    if V.shape != W.shape:
        raise InputError(f"solve_right_factor: shape mismatch {V.shape} vs {W.shape}")
    p = V.shape[0]
    U, s, Yt = svd_jacobi(V)
    r = 0 if s.size == 0 or s[0] == 0.0 else int(np.sum(s > tol * s[0]))
    Ur, sr, Yr = U[:, :r], s[:r], Yt[:r].T
    wscale = 1.0 + hs_norm(W)
    leak = hs_norm(W - (W @ Yr) @ Yr.T)
    if leak > tol * wscale:
        raise ConsistencyError(
            f"solve_right_factor: W does not vanish on ker V (residual {leak:.3e})"
        )
    S = (W @ Yr) @ (Ur / sr).T + (np.eye(p) - Ur @ Ur.T)
    resid = hs_norm(W - S @ V)
    if resid > tol * wscale:
        raise ConsistencyError(f"solve_right_factor: residual {resid:.3e} exceeds tolerance")
    return S


def hadamard_bound_check(P, Q):
    """Generalised Hadamard inequality det(P^T Q) <= prod|p_i| * prod|q_i|.

    Returns ``(lhs, rhs, holds)``.
    """
    P = as_matrix(P, "P")
    Q = as_matrix(Q, "Q")
    if P.shape != Q.shape:
        raise InputError(f"hadamard_bound_check: shape mismatch {P.shape} vs {Q.shape}")
    k, l = P.shape
    if l > k:
        raise InputError("hadamard_bound_check: need at most as many columns as rows")
    lhs = float(np.linalg.det(P.T @ Q))
    rhs = float(np.prod(np.linalg.norm(P, axis=0)) * np.prod(np.linalg.norm(Q, axis=0)))
    return lhs, rhs, lhs <= rhs + 1e-10


def matrix_exp(X):
    """Matrix exponential by scaling and squaring of the Taylor series."""
    X = as_matrix(X)
    _require_square(X, "matrix_exp")
    n = X.shape[0]
    norm1 = float(np.max(np.sum(np.abs(X), axis=0))) if n else 0.0
    squarings = max(0, int(math.ceil(math.log2(norm1 / 0.25)))) if norm1 > 0.25 else 0
    Y = X / 2.0**squarings
    result = np.eye(n)
    term = np.eye(n)
    for k in range(1, 30):
        term = term @ Y / k
        result = result + term
        if np.max(np.abs(term)) <= 1e-17 * np.max(np.abs(result)):
            break
    for _ in range(squarings):
        result = result @ result
    return result
