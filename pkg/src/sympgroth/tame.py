"""Symplectic maps that shrink the total length of a vector family.

Given ``v_1..v_N`` in R^{2n} with pairing matrix ``A = V^T J V``, build
``S`` in Sp(2n) with

    (sum_i |S v_i|)^2  <=  3 kg * rank(A) * ||A||_{inf->1}

(or an epsilon-family ``S_eps`` approaching that bound when the span of
the vectors is degenerate for the symplectic form).

Pipeline:

1. rescale the vectors so that ``||A||_{inf->1} = 1``;
2. normalise the span E with a symplectic ``T``; its symplectic part E0
   carries the whole pairing, the isotropic kernel sits in E1;
3. on E0: scale ``B = D^-1 A D^-1``, take the canonical form
   ``B = Q^T R Q``, set ``W = P D_M Q D_lam`` (so ``W^T J W = A``) and solve
   ``W = S0 V0``;
4. ``S_eps = (S0 pi0 + eps pi1 + pi2 / eps + pi3) T``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .antisymmetric import antisym_canonical, interleave_permutation
from .errors import ConsistencyError
from .grothendieck import KG_UPPER, ScalingCertificate, scaling_search
from .linalg import DEFAULT_RANK_TOL, singular_values, solve_right_factor, spectral_norm
from .opnorms import infty_one_exact
from .symplectic import (
    IsotropicSplit,
    VectorFamily,
    is_symplectic,
    pairing_matrix,
    symplectic_basis_extension,
)


@dataclass
class TameResult:
    s_matrix: np.ndarray
    s_family: Callable[[float], np.ndarray]
    eps: float
    achieved_sum: float
    limit_sum: float
    certified_bound: float
    certified: bool
    empirical_bound: float
    case_tag: str
    w_matrix: np.ndarray
    rank: int
    infty_one: float
    k: int
    l: int
    symplectic_residual: float
    isotropic_sum: float = 0.0
    leak: float = 0.0
    certificate: Optional[ScalingCertificate] = None

    def to_dict(self):
        return {
            "s_matrix": self.s_matrix.tolist(),
            "eps": self.eps,
            "achieved_sum": self.achieved_sum,
            "limit_sum": self.limit_sum,
            "certified_bound": self.certified_bound,
            "certified": self.certified,
            "empirical_bound": self.empirical_bound,
            "case": self.case_tag,
            "rank": self.rank,
            "infty_one": self.infty_one,
            "k": self.k,
            "l": self.l,
            "symplectic_residual": self.symplectic_residual,
            "isotropic_sum": self.isotropic_sum,
            "leak": self.leak,
            "scaling": None if self.certificate is None else self.certificate.to_dict(),
        }


def pairing_rank(fam: VectorFamily, tol=DEFAULT_RANK_TOL) -> int:
    """Rank of ``V^T J V`` with singular values measured against ``||V||_2^2``.

    Every pairing is bounded by a product of vector norms, so a pairing
    matrix made of round-off (an isotropic family) has rank 0 here even
    though its own largest singular value is tiny but non-zero.
    """
    A = pairing_matrix(fam)
    ref = max(spectral_norm(fam.columns) ** 2, spectral_norm(A))
    if ref == 0.0:
        return 0
    return int(np.sum(singular_values(A) > tol * ref))


def _assemble(S0, split: IsotropicSplit, eps):
    dim = 2 * split.half_dim
    St = np.zeros((dim, dim))
    i0 = split.indices(0)
    if i0.size:
        St[np.ix_(i0, i0)] = S0
    i1, i2, i3 = split.indices(1), split.indices(2), split.indices(3)
    St[i1, i1] = eps
    St[i2, i2] = 1.0 / eps
    St[i3, i3] = 1.0
    return St @ split.T


def _column_norm_sum(X):
    return float(np.sum(np.linalg.norm(X, axis=0)))


def tame(fam: VectorFamily, kg=KG_UPPER, eps=1e-6, iters=200, seed=0, restarts=10,
         tol=DEFAULT_RANK_TOL) -> TameResult:
    """Construct a symplectic map reducing ``sum |v_i|`` toward the certified bound.

    Raises
    ------
    ValueError
        If ``eps <= 0``.
    ConsistencyError
        If the symplectic rank of the span disagrees with ``rank A`` or the
        constructed ``W`` does not share the kernel of the reduced vectors.
    """
    if not eps > 0:
        raise ValueError("tame: eps must be positive")
    V = fam.columns
    n = fam.ambient.half_dim
    dim = 2 * n
    A = pairing_matrix(fam)
    rank = pairing_rank(fam, tol)
    if rank == 0:
        A = np.zeros_like(A)
    norm = infty_one_exact(A).value
    bound = math.sqrt(3.0 * kg * rank * norm)

    if not np.any(V):
        I = np.eye(dim)
        return TameResult(I, lambda e: np.eye(dim), eps, 0.0, 0.0, bound, True, bound,
                          "degenerate", np.zeros((0, V.shape[1])), 0, 0.0, 0, 0, 0.0)

    # homogeneity: work with ||A||_{inf->1} = 1
    scale = 1.0 / math.sqrt(norm) if norm > 0 else 1.0
    Vs = V * scale
    split = symplectic_basis_extension(VectorFamily(fam.ambient, Vs), tol)
    k = split.k
    if 2 * k != rank:
        raise ConsistencyError(
            f"tame: symplectic rank of the span ({2 * k}) differs from rank A ({rank})"
        )

    cert = None
    certified, empirical = True, bound
    if k:
        V0 = (split.T @ Vs)[split.indices(0)]
        As = A * scale**2
        cert = scaling_search(As, iters=iters, seed=seed, restarts=restarts, kg=kg,
                              infty_one=norm * scale**2)
        lam = cert.lam.lambdas
        form = antisym_canonical(As / np.outer(lam, lam), tol)
        if form.k != k:
            raise ConsistencyError(f"tame: scaled pairing has rank {2 * form.k}, expected {2 * k}")
        W = interleave_permutation(k) @ (form.m_vector()[:, None] * form.q_rows) * lam
        S0 = solve_right_factor(V0, W, tol)
        certified = cert.certified
        empirical = math.sqrt(cert.scaled_norm * rank * norm)
        limit = _column_norm_sum(W) / scale
    else:
        W = np.zeros((0, V.shape[1]))
        S0 = np.zeros((0, 0))
        limit = 0.0

    def s_family(e):
        return _assemble(S0, split, e)

    S = s_family(eps)
    residual, _ = is_symplectic(S, fam.ambient)
    achieved = _column_norm_sum(S @ V)
    # triangle estimate: achieved <= limit + eps * iso + leak / eps, where
    # leak (the part of T V outside E0 + E1) is zero in exact arithmetic
    TV = split.T @ V
    iso = _column_norm_sum(TV[split.indices(1)])
    leak = _column_norm_sum(TV[np.concatenate([split.indices(2), split.indices(3)])])
    case = "full_rank" if rank == dim else "degenerate"
    return TameResult(S, s_family, eps, achieved, limit, bound, certified, empirical, case,
                      W, rank, norm, k, split.l, residual, iso, leak, cert)


def limit_check(res: TameResult, fam: VectorFamily, rel=1e-6, max_leak=1e-13):
    """Check the epsilon-family estimate ``achieved - limit <= eps * sum|v_i|``.

    Used when the pairing has rank 0, where the infimum 0 is not attained.
    The round-off term ``leak / eps`` is added to the right side; the leak
    itself must stay below ``max_leak * sum|v_i|``.
    Returns ``(lhs, rhs, holds)``.
    """
    total = fam.norm_sum()
    lhs = res.achieved_sum - res.limit_sum
    rhs = res.eps * total * (1 + rel) + res.leak / res.eps
    holds = lhs <= rhs and res.leak <= max_leak * total and res.isotropic_sum <= total * (1 + 1e-12)
    return lhs, rhs, bool(holds)
