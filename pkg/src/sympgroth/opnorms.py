"""The l_inf -> l_1 operator norm and the absolute entry sum.

``||A||_{inf->1} = max_{|s_j|<=1} ||A s||_1 = max_{t,s in {-1,1}} t^T A s``.
Exact evaluation enumerates the sign vectors of the smaller side; for
larger matrices :func:`infty_one_bounds` brackets the norm between a
rounded feasible point and a dual certificate of the Grothendieck
relaxation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, InputError
from .linalg import as_matrix
from .rng import trial_rng

ENUMERATION_LIMIT = 25
_CHUNK = 1 << 15


@dataclass(frozen=True)
class InftyOneResult:
    value: float
    witness_t: np.ndarray
    witness_s: np.ndarray
    exact: bool


def abs_sum(A) -> float:
    return float(np.sum(np.abs(as_matrix(A))))


def _signs_from_index(idx, width):
    """Sign vectors for enumeration indices; first coordinate fixed to +1.

    Coordinate ``j >= 1`` is +1 iff bit ``width-1-j`` of the index is set, so
    increasing index is lexicographic order with -1 < +1.
    """
    shifts = np.arange(width - 2, -1, -1, dtype=np.int64)
    bits = (idx[:, None] >> shifts[None, :]) & 1
    signs = np.ones((idx.size, width))
    signs[:, 1:] = 2.0 * bits - 1.0
    return signs


def _sign(x):
    return np.where(x >= 0.0, 1.0, -1.0)


def infty_one_exact(A, limit=ENUMERATION_LIMIT) -> InftyOneResult:
    """Exact l_inf -> l_1 norm by enumerating sign vectors.

    Enumerates the ``2**(k-1)`` sign vectors of the smaller side ``k`` (the
    global sign symmetry fixes the first coordinate).  Among maximisers the
    first one in lexicographic order (-1 < +1) is returned.  All-zero rows
    and columns are dropped first (their witness entries are +1).

    Raises
    ------
    CapacityError
        If ``min(A.shape) > limit``; use :func:`infty_one_bounds` instead.
    """
    A = as_matrix(A)
    m, n = A.shape
    # zero rows and columns do not change the norm; enumerate the rest
    live_r = np.flatnonzero(np.any(A != 0, axis=1))
    live_c = np.flatnonzero(np.any(A != 0, axis=0))
    if live_r.size < m or live_c.size < n:
        sub = infty_one_exact(A[np.ix_(live_r, live_c)], limit)
        t, s = np.ones(m), np.ones(n)
        t[live_r] = sub.witness_t
        s[live_c] = sub.witness_s
        return InftyOneResult(sub.value, t, s, True)
    if m == 0 or n == 0:
        return InftyOneResult(0.0, np.ones(m), np.ones(n), True)
    transposed = n > m
    B = A.T if transposed else A
    width = B.shape[1]
    if width > limit:
        raise CapacityError(
            f"infty_one_exact: smaller side {width} exceeds enumeration limit {limit}; "
            "use infty_one_bounds"
        )
    total = 1 << (width - 1)
    best_val = -1.0
    best_idx = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        S = _signs_from_index(idx, width)
        vals = np.sum(np.abs(S @ B.T), axis=1)
        j = int(np.argmax(vals))
        if vals[j] > best_val:
            best_val = float(vals[j])
            best_idx = start + j
    s = _signs_from_index(np.array([best_idx], dtype=np.int64), width)[0]
    t = _sign(B @ s)
    value = float(t @ B @ s)
    if transposed:
        t, s = s, t
    return InftyOneResult(value, t, s, True)


def _local_sign_search(A, t, s):
    """Alternate t = sign(A s), s = sign(A^T t) until the value stops rising."""
    val = float(t @ A @ s)
    for _ in range(100):
        s = _sign(A.T @ t)
        t = _sign(A @ s)
        new = float(t @ A @ s)
        if new <= val:
            break
        val = new
    return val, t, s


def _dual_bound(A, X, Y):
    """Certified upper bound on the Grothendieck relaxation value.

    For the symmetric form M = [[0, A/2], [A^T/2, 0]], any d with
    Diag(d) - M >= 0 bounds the relaxation (and hence the norm) by sum(d).
    ``d`` is read off the unit-vector solution and shifted to feasibility.
    """
    m, n = A.shape
    Z = np.vstack([X, Y])
    M = np.zeros((m + n, m + n))
    M[:m, m:] = 0.5 * A
    M[m:, :m] = 0.5 * A.T
    d = np.einsum("ij,ij->i", M @ Z, Z)
    lam_min = float(np.linalg.eigvalsh(np.diag(d) - M)[0])
    shift = max(0.0, -lam_min)
    # round-off margin on the eigenvalue
    shift += 1e-12 * (np.abs(d).max() + np.abs(A).max())
    return float(np.sum(d) + (m + n) * shift)


def infty_one_bounds(A, rank_param=None, iters=200, seed=0, restarts=20):
    """Bracket ``||A||_{inf->1}`` without enumeration.

    Runs block-coordinate ascent on the unit-vector (Grothendieck)
    relaxation ``max sum a_ij <x_i, y_j>`` with vectors of dimension
    ``rank_param`` (default ``ceil(sqrt(2 max(m, n)))``).  The lower bound
    is the best sign vector obtained by hyperplane rounding plus local
    search; the upper bound is a dual certificate of the relaxation,
    capped by ``sum|a_ij|`` and ``sqrt(m n) * ||A||_2``.

    Returns
    -------
    (lower, upper) : tuple of float
    """
    A = as_matrix(A)
    m, n = A.shape
    if m == 0 or n == 0 or not np.any(A):
        return 0.0, 0.0
    if rank_param is None:
        rank_param = int(math.ceil(math.sqrt(2 * max(m, n))))
    if rank_param < 1:
        raise InputError("infty_one_bounds: rank_param must be >= 1")
    trivial = min(abs_sum(A), math.sqrt(m * n) * float(np.linalg.norm(A, 2)))

    def normalize(Z):
        nz = np.linalg.norm(Z, axis=1, keepdims=True)
        out = np.where(nz > 0, Z / np.where(nz > 0, nz, 1.0), 0.0)
        dead = nz[:, 0] == 0
        out[dead, 0] = 1.0
        return out

    lower = -np.inf
    best_relax, best_XY = -np.inf, None
    for r in range(restarts):
        rng = trial_rng(seed, r)
        Y = normalize(rng.standard_normal((n, rank_param)))
        X = normalize(A @ Y)
        val = float(np.sum((X @ Y.T) * A))
        for _ in range(iters):
            Y = normalize(A.T @ X)
            X = normalize(A @ Y)
            new = float(np.sum((X @ Y.T) * A))
            if new - val <= 1e-13 * max(1.0, abs(new)):
                val = max(val, new)
                break
            val = new
        if val > best_relax:
            best_relax, best_XY = val, (X, Y)
        for _ in range(4):
            g = rng.standard_normal(rank_param)
            v, _, _ = _local_sign_search(A, _sign(X @ g), _sign(Y @ g))
            lower = max(lower, v)
    upper = min(trivial, _dual_bound(A, *best_XY))
    return float(lower), float(max(upper, lower))
