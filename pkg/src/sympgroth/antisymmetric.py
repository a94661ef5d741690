"""Real canonical form of antisymmetric matrices.

Any antisymmetric ``B`` factors as ``B = Q^T R Q`` where ``Q`` has
orthonormal rows ``x_1, y_1, ..., x_k, y_k`` and ``R`` is block diagonal
with blocks ``[[0, -mu_j], [mu_j, 0]]``.  With this convention
``B x_j = mu_j y_j`` and ``B y_j = -mu_j x_j``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .linalg import DEFAULT_RANK_TOL, as_matrix, numerical_rank, orthonormalize, sym_eig


@dataclass(frozen=True)
class AntisymCanonicalForm:
    mus: np.ndarray        # (k,) positive block frequencies
    q_rows: np.ndarray     # (2k, N) orthonormal rows, pairs (x_j, y_j)
    n_ambient: int

    @property
    def k(self):
        return self.mus.size

    def r_matrix(self):
        return block_rotation_generator(self.mus)

    def m_vector(self):
        """``(sqrt mu_1, sqrt mu_1, ..., sqrt mu_k, sqrt mu_k)``."""
        return np.repeat(np.sqrt(self.mus), 2)


def block_rotation_generator(mus):
    """Block-diagonal matrix of ``[[0, -mu], [mu, 0]]`` blocks."""
    mus = np.asarray(mus, dtype=float).reshape(-1)
    k = mus.size
    R = np.zeros((2 * k, 2 * k))
    idx = np.arange(k)
    R[2 * idx + 1, 2 * idx] = mus
    R[2 * idx, 2 * idx + 1] = -mus
    return R


def antisym_canonical(B, tol=DEFAULT_RANK_TOL, group_tol=1e-8) -> AntisymCanonicalForm:
    """Canonical form of an antisymmetric matrix.

    Works on the positive semidefinite ``-B^2 = B^T B``: eigenvalues
    ``mu^2`` are grouped within relative ``group_tol``; inside a group the
    leading eigenvector gives ``x``, ``y = B x / |B x|`` and the span of
    ``x, y`` is deflated before the next pair is taken.  Only the top
    ``numerical_rank(B, tol)`` eigenpairs are used, so ``2k`` equals the
    numerical rank.
    """
    B = as_matrix(B, "B")
    if B.shape[0] != B.shape[1]:
        raise InputError("antisym_canonical: matrix must be square")
    N = B.shape[0]
    scale = np.linalg.norm(B)
    if np.linalg.norm(B + B.T) > tol * scale:
        raise InputError("antisym_canonical: matrix is not antisymmetric within tolerance")
    if scale == 0.0:
        return AntisymCanonicalForm(np.zeros(0), np.zeros((0, N)), N)
    B = 0.5 * (B - B.T)
    w, E = sym_eig(B.T @ B)
    mu = np.sqrt(np.maximum(w, 0.0))
    # eigenvalues of B^T B carry sqrt(eps)-sized noise in mu; take the
    # cutoff from the singular values of B itself
    npos = numerical_rank(B, tol)
    # singular values pair up; an odd count means the cutoff split a pair
    npos += npos % 2
    mus, rows = [], []
    start = 0
    while start < npos:
        stop = start + 1
        while stop < npos and mu[start] - mu[stop] <= group_tol * mu[start]:
            stop += 1
        if (stop - start) % 2:
            stop = min(stop + 1, npos)
        basis = E[:, start:stop].T
        for remaining in range(stop - start - 2, -1, -2):
            x = basis[0]
            if rows:
                # eigenvectors of close groups overlap by eps / gap; earlier
                # planes are B-invariant, so clearing x also clears B x
                prev = np.array(rows)
                x = x - prev.T @ (prev @ x)
            x = x / np.linalg.norm(x)
            bx = B @ x
            m = np.linalg.norm(bx)
            y = bx / m
            mus.append(m)
            rows.extend([x, y])
            if remaining == 0:
                break
            rest = basis[1:]
            rest = rest - np.outer(rest @ x, x) - np.outer(rest @ y, y)
            basis = orthonormalize(rest, tol=1e-6)[:remaining]
        start = stop
    mus = np.array(mus)
    Q = np.array(rows).reshape(-1, N)
    return AntisymCanonicalForm(mus, Q, N)


def reconstruct(form: AntisymCanonicalForm) -> np.ndarray:
    """``Q^T R Q`` for a canonical form."""
    Q = form.q_rows
    if form.k == 0:
        return np.zeros((form.n_ambient, form.n_ambient))
    return Q.T @ form.r_matrix() @ Q


def interleave_permutation(k: int) -> np.ndarray:
    """Permutation ``P`` with ``P^T J_{2k} P`` block diagonal in ``[[0,-1],[1,0]]``.

    Column ``2j`` of ``P`` is ``e_j`` and column ``2j+1`` is ``e_{k+j}``
    (0-based), i.e. it sends the interleaved order x1 y1 x2 y2 ... to the
    split order x1 ... xk y1 ... yk.
    """
    if int(k) != k or k < 1:
        raise InputError("interleave_permutation: k must be a positive integer")
    k = int(k)
    P = np.zeros((2 * k, 2 * k))
    j = np.arange(k)
    P[j, 2 * j] = 1.0
    P[k + j, 2 * j + 1] = 1.0
    return P
