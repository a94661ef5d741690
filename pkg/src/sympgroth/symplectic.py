"""Symplectic forms, symplectic matrices and symplectic bases.

The standard form on R^{2n} is ``omega(u, v) = <u, J v>`` with
``J = [[0, -I], [I, 0]]``, so ``J e_i = e_{n+i}`` and ``J e_{n+i} = -e_i``.
A symplectic basis here is a list ``p_1..p_n, q_1..q_n`` with
``omega(p_i, q_j) = -delta_ij`` and all other pairings zero; these are
exactly the columns of a matrix ``M`` with ``M^T J M = J``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, InputError
from .linalg import (
    DEFAULT_RANK_TOL,
    as_matrix,
    hs_norm,
    matrix_exp,
    orthonormalize,
    svd_jacobi,
)
from .rng import trial_rng


@dataclass(frozen=True)
class SymplecticSpace:
    half_dim: int
    j_matrix: np.ndarray

    @property
    def dim(self):
        return 2 * self.half_dim

    def omega(self, u, v):
        return float(u @ self.j_matrix @ v)


def standard_J(n: int) -> SymplecticSpace:
    if int(n) != n or n < 1:
        raise InputError("standard_J: n must be a positive integer")
    n = int(n)
    J = np.zeros((2 * n, 2 * n))
    J[n:, :n] = np.eye(n)
    J[:n, n:] = -np.eye(n)
    return SymplecticSpace(n, J)


def j_matrix(n: int) -> np.ndarray:
    return standard_J(n).j_matrix


@dataclass(frozen=True)
class VectorFamily:
    """Vectors ``v_1..v_N`` in R^{2n}, stored as the columns of a 2n x N matrix."""

    ambient: SymplecticSpace
    columns: np.ndarray

    def __post_init__(self):
        V = as_matrix(self.columns, "columns")
        if V.shape[0] != self.ambient.dim:
            raise InputError(
                f"VectorFamily: vectors have length {V.shape[0]}, expected {self.ambient.dim}"
            )
        if V.shape[1] < 1:
            raise InputError("VectorFamily: need at least one vector")
        object.__setattr__(self, "columns", V)

    @classmethod
    def from_columns(cls, V):
        V = as_matrix(V, "columns")
        if V.shape[0] % 2 or V.shape[0] == 0:
            raise InputError("VectorFamily: ambient dimension must be even and positive")
        return cls(standard_J(V.shape[0] // 2), V)

    @property
    def size(self):
        return self.columns.shape[1]

    def norm_sum(self):
        return float(np.sum(np.linalg.norm(self.columns, axis=0)))


def is_symplectic(S, space: SymplecticSpace, tol=1e-8):
    """Return ``(||S^T J S - J||_HS, residual <= tol)``."""
    S = as_matrix(S, "S")
    J = space.j_matrix
    if S.shape != J.shape:
        raise InputError(f"is_symplectic: expected shape {J.shape}, got {S.shape}")
    residual = hs_norm(S.T @ J @ S - J)
    return residual, residual <= tol


def pairing_matrix_of(V) -> np.ndarray:
    """``V^T J V`` for the standard J, antisymmetric to the last bit."""
    V = as_matrix(V, "V")
    n = V.shape[0] // 2
    JV = np.vstack([-V[n:], V[:n]])
    C = V.T @ JV
    return 0.5 * (C - C.T)


def pairing_matrix(fam: VectorFamily) -> np.ndarray:
    """The N x N matrix ``a_ij = <v_i, J v_j>``."""
    return pairing_matrix_of(fam.columns)


def symplectic_transform(fam: VectorFamily, S, tol=1e-8) -> VectorFamily:
    """Apply ``S`` to every vector of the family.

    ``S`` must be symplectic: the residual ``||S^T J S - J||`` is compared
    with ``tol * max(1, ||S||_HS^2)`` since it scales quadratically in ``S``.
    """
    S = as_matrix(S, "S")
    residual, _ = is_symplectic(S, fam.ambient)
    if residual > tol * max(1.0, hs_norm(S) ** 2):
        raise InputError(f"symplectic_transform: S is not symplectic (residual {residual:.3e})")
    return VectorFamily(fam.ambient, S @ fam.columns)


@dataclass(frozen=True)
class IsotropicSplit:
    """Normalising symplectic map for the span E of a family.

    ``T`` maps E onto span{e_1..e_k, e_{n+1}..e_{n+k+l}} (1-based); the
    projections are the coordinate projections onto

    * E0 = span{e_1..e_k, e_{n+1}..e_{n+k}}   (symplectic part of E)
    * E1 = span{e_{n+k+1}..e_{n+k+l}}         (isotropic kernel of E)
    * E2 = span{e_{k+1}..e_{k+l}}             (partners of E1)
    * E3 = everything else.
    """

    k: int
    l: int
    T: np.ndarray
    projections: tuple
    half_dim: int

    def indices(self, which):
        n, k, l = self.half_dim, self.k, self.l
        ranges = {
            0: list(range(k)) + list(range(n, n + k)),
            1: list(range(n + k, n + k + l)),
            2: list(range(k, k + l)),
            3: list(range(k + l, n)) + list(range(n + k + l, 2 * n)),
        }
        return np.array(ranges[which], dtype=np.intp)


def _coordinate_projection(dim, idx):
    P = np.zeros((dim, dim))
    P[idx, idx] = 1.0
    return P


def _split_off(rows, p, q, J):
    """Make each row omega-orthogonal to the pair (p, q) with omega(p, q) = -1."""
    wq = rows @ J @ q
    wp = rows @ J @ p
    return rows + np.outer(wq, p) - np.outer(wp, q)


def _symplectic_gram_schmidt(U, J, tol):
    """Greedy pairing of an orthonormal row basis ``U``.

    At each step the two rows with the largest |omega| are turned into a
    pair ``(p, q)`` with ``omega(p, q) = -1`` and balanced norms; the rest
    is split off symplectically and re-orthonormalised.  Pairings of unit
    vectors are at most 1, so the stopping rule ``max |omega| <= tol`` is
    relative to the largest possible pairing.  Returns ``(pairs, leftover)``.
    """
    pairs = []
    while U.shape[0] >= 2:
        G = U @ J @ U.T
        i, j = np.unravel_index(np.argmax(np.abs(G)), G.shape)
        g = G[i, j]
        if abs(g) <= tol:
            break
        p = U[i] / math.sqrt(abs(g))
        q = -math.copysign(1.0, g) * U[j] / math.sqrt(abs(g))
        pairs.append((p, q))
        rest = np.delete(U, [i, j], axis=0)
        if rest.shape[0] == 0:
            U = rest
            break
        U = orthonormalize(_split_off(rest, p, q, J), tol)
    return pairs, U


def _canonical_pairs(F, J):
    """Symplectic pairs spanning the non-degenerate subspace with orthonormal rows ``F``."""
    from .antisymmetric import antisym_canonical

    form = antisym_canonical(F @ J @ F.T)
    pairs = []
    for j, mu in enumerate(form.mus):
        x, y = form.q_rows[2 * j] @ F, form.q_rows[2 * j + 1] @ F
        # omega(x, y) = -mu
        pairs.append((x / math.sqrt(mu), y / math.sqrt(mu)))
    return pairs


def _split_radical(E, J, tol):
    """Split orthonormal rows ``E`` into ``(F, R)``: the radical ``R`` of the
    restricted form and its orthogonal complement ``F`` inside span E.

    Pairings of unit vectors are at most 1, so singular values of the
    restricted form below ``tol`` count as zero.
    """
    _, s, Vt = svd_jacobi(E @ J @ E.T)
    live = s > tol
    return Vt[live] @ E, Vt[~live] @ E


def symplectic_basis_extension(fam: VectorFamily, tol=DEFAULT_RANK_TOL) -> IsotropicSplit:
    """Symplectic ``T`` normalising the span E of the family.

    The radical of the form restricted to E (its isotropic kernel, ``l``
    orthonormal vectors ``r_j``) is split off orthogonally; the rest of E
    is turned into ``k`` symplectic pairs by greedy symplectic Gram-Schmidt.
    Each ``r_j`` gets a partner built from ``-J r_j``, and the symplectic
    complement is filled with pairs read off the canonical form of the
    restricted form.  The basis matrix ``M`` is symplectic and ``T = M^{-1}``.
    Since the paired part is orthogonal to the radical, the E1 coordinates
    of ``T v`` have norm at most ``|v|`` for ``v`` in E.
    """
    space = fam.ambient
    n, J = space.half_dim, space.j_matrix
    dim = 2 * n
    E = orthonormalize(fam.columns.T, tol)
    if E.shape[0] == 0:
        zero = np.zeros((dim, dim))
        return IsotropicSplit(0, 0, np.eye(dim), (zero, zero, zero, np.eye(dim)), n)

    F, radical = _split_radical(E, J, tol)
    pairs, leftover = _symplectic_gram_schmidt(F, J, tol) if F.shape[0] else ([], F)
    if leftover.shape[0]:
        raise ConsistencyError("symplectic_basis_extension: non-radical part is degenerate")
    k, l = len(pairs), radical.shape[0]

    partners = []
    if l:
        C = -(radical @ J.T)          # rows -J r_j
        for p, q in pairs:
            C = _split_off(C, p, q, J)
        Om = C @ J @ C.T
        C = C - 0.5 * Om @ radical
        partners = list(C)

    chosen = [p for p, _ in pairs] + [q for _, q in pairs] + partners + list(radical)
    # symplectic complement of everything chosen = orthogonal complement of J * chosen
    Jchosen = orthonormalize(np.array(chosen) @ J.T, tol)
    comp = np.eye(dim) - Jchosen.T @ Jchosen
    comp = orthonormalize(comp, 1e-6)[: dim - 2 * (k + l)]
    extra = _canonical_pairs(comp, J) if comp.shape[0] else []
    if len(extra) != n - k - l:
        raise ConsistencyError("symplectic_basis_extension: complement is degenerate")

    P_cols = [p for p, _ in pairs] + partners + [p for p, _ in extra]
    Q_cols = [q for _, q in pairs] + list(radical) + [q for _, q in extra]
    M = np.array(P_cols + Q_cols).T
    T = np.linalg.solve(M, np.eye(dim))
    split = IsotropicSplit(k, l, T, (), n)
    projections = tuple(_coordinate_projection(dim, split.indices(i)) for i in range(4))
    return IsotropicSplit(k, l, T, projections, n)


def symplectic_exp(H) -> np.ndarray:
    """``exp(J H)`` for symmetric ``H``; always symplectic."""
    H = as_matrix(H, "H")
    if H.shape[0] != H.shape[1] or H.shape[0] % 2:
        raise InputError("symplectic_exp: H must be square of even size")
    J = j_matrix(H.shape[0] // 2)
    return matrix_exp(J @ (0.5 * (H + H.T)))


def random_symplectic(n: int, scale=0.5, seed=0) -> np.ndarray:
    """``exp(J H)`` with ``H`` a seeded random symmetric matrix of entry size ``scale``."""
    if int(n) != n or n < 1:
        raise InputError("random_symplectic: n must be a positive integer")
    X = trial_rng(seed, int(n)).standard_normal((2 * n, 2 * n))
    return symplectic_exp(scale * 0.5 * (X + X.T))


def random_orthosymplectic(n: int, seed=0) -> np.ndarray:
    """Random orthogonal symplectic matrix ``[[X, -Y], [Y, X]]``.

    ``X + iY`` is a Haar-random unitary (QR of a complex Gaussian matrix
    with phase correction).  These maps commute with ``J`` and are exact to
    round-off, and they act transitively on isotropic subspaces.
    """
    if int(n) != n or n < 1:
        raise InputError("random_orthosymplectic: n must be a positive integer")
    n = int(n)
    Z = trial_rng(seed, n, 2).standard_normal((2, n, n))
    Qc, Rc = np.linalg.qr(Z[0] + 1j * Z[1])
    d = np.diag(Rc)
    Qc = Qc * (d / np.abs(d))
    X, Y = Qc.real, Qc.imag
    return np.block([[X, -Y], [Y, X]])


def fourier_orthogonal(m: int) -> np.ndarray:
    """2m x 2m orthogonal matrix of scaled rotation blocks.

    Block (j, l), j, l = 1..m, is ``Rot(2 pi j l / m) / sqrt(m)``; every
    entry is at most ``sqrt(2) / sqrt(2m)`` in absolute value.
    """
    if int(m) != m or m < 1:
        raise InputError("fourier_orthogonal: m must be a positive integer")
    m = int(m)
    j = np.arange(1, m + 1)
    ang = 2.0 * np.pi * np.outer(j, j) / m
    c, s = np.cos(ang), np.sin(ang)
    U = np.empty((2 * m, 2 * m))
    U[0::2, 0::2] = c
    U[0::2, 1::2] = -s
    U[1::2, 0::2] = s
    U[1::2, 1::2] = c
    return U / math.sqrt(m)


def example2_vectors(n: int, m: int, N: int) -> VectorFamily:
    """Family e_1..e_m, e_{n+1}..e_{n+m} followed by ``N - 2m`` zero vectors."""
    if m < 1 or n < 1:
        raise InputError("example2_vectors: n and m must be positive")
    if m > n:
        raise InputError("example2_vectors: need m <= n")
    if N < 2 * m:
        raise InputError("example2_vectors: need N >= 2m")
    V = np.zeros((2 * n, N))
    i = np.arange(m)
    V[i, i] = 1.0
    V[n + i, m + i] = 1.0
    return VectorFamily(standard_J(n), V)
