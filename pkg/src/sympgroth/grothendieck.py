"""Diagonal scalings that tame the spectral norm, and the absolute-sum bounds.

For a square ``A`` one looks for a positive unit vector ``lam`` such that

    ||D_lam^{-1} A D_lam^{-1}||_2  <=  3 K_G ||A||_{inf->1},

which exists by Grothendieck's factorisation theorem.  Combined with
``||B||_HS <= sqrt(rank B) ||B||_2`` and Cauchy-Schwarz this yields

    sum |a_ij|  <=  3 K_G sqrt(rank A) ||A||_{inf->1}.

The exact value of K_G is unknown, so every check takes ``kg`` as an
argument and defaults to the classical upper bound ``sinh(pi/2)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError
from .linalg import DEFAULT_RANK_TOL, as_matrix, numerical_rank, spectral_norm
from .opnorms import abs_sum, infty_one_exact
from .rng import trial_rng

KG_UPPER = math.sinh(math.pi / 2)
KG_LOWER = math.pi / 2


@dataclass(frozen=True)
class ScalingVector:
    """Strictly positive vector with Euclidean norm at most one."""

    lambdas: np.ndarray

    def __post_init__(self):
        lam = np.asarray(self.lambdas, dtype=float).reshape(-1)
        if lam.size == 0 or not np.all(np.isfinite(lam)) or np.any(lam <= 0):
            raise InputError("ScalingVector: entries must be finite and strictly positive")
        if np.linalg.norm(lam) > 1.0 + 1e-12:
            raise InputError("ScalingVector: Euclidean norm exceeds 1")
        object.__setattr__(self, "lambdas", lam)

    def __len__(self):
        return self.lambdas.size

    def diag(self):
        return np.diag(self.lambdas)


@dataclass(frozen=True)
class ScalingCertificate:
    lam: ScalingVector
    scaled_norm: float
    infty_one: float
    kg_used: float
    certified: bool
    floored: int = 0
    restart: int = 0

    @property
    def bound(self):
        return 3.0 * self.kg_used * self.infty_one

    def to_dict(self):
        return {
            "lambda": self.lam.lambdas.tolist(),
            "scaled_norm": self.scaled_norm,
            "infty_one": self.infty_one,
            "kg_used": self.kg_used,
            "bound": self.bound,
            "certified": self.certified,
            "floored": self.floored,
            "restart": self.restart,
        }


@dataclass
class InequalityReport:
    lhs: float
    rhs: float
    ratio: float
    holds: bool
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {"lhs": self.lhs, "rhs": self.rhs, "ratio": self.ratio,
                "holds": self.holds, **self.details}


def combine_scalings(lambda0, lambda1) -> ScalingVector:
    """Merge the two one-sided scalings of a Grothendieck factorisation.

    ``lam_i = ((sqrt3 - sqrt2)/sqrt(n) + max(lam0_i, lam1_i)) / sqrt3``.
    The result is strictly positive, has norm at most one, and dominates
    each input up to the factor ``sqrt3``, so ``||D_lam^{-1} D_lam_j|| <= sqrt3``.
    Inputs only need to be non-negative with norm at most one.
    """
    l0 = np.asarray(getattr(lambda0, "lambdas", lambda0), dtype=float).reshape(-1)
    l1 = np.asarray(getattr(lambda1, "lambdas", lambda1), dtype=float).reshape(-1)
    if l0.size != l1.size or l0.size == 0:
        raise InputError("combine_scalings: inputs must be non-empty and of equal length")
    if np.any(l0 < 0) or np.any(l1 < 0):
        raise InputError("combine_scalings: entries must be non-negative")
    if np.linalg.norm(l0) > 1 + 1e-12 or np.linalg.norm(l1) > 1 + 1e-12:
        raise InputError("combine_scalings: inputs must have norm at most 1")
    n = l0.size
    s2, s3 = math.sqrt(2.0), math.sqrt(3.0)
    lam = ((s3 - s2) / math.sqrt(n) + np.maximum(l0, l1)) / s3
    return ScalingVector(lam)


def scaled_matrix(A, lam):
    """``D_lam^{-1} A D_lam^{-1}``."""
    lam = np.asarray(getattr(lam, "lambdas", lam), dtype=float)
    return as_matrix(A) / np.outer(lam, lam)


def _lambdas(theta, floor):
    w = np.exp(theta - theta.max())
    lam = np.maximum(w / np.linalg.norm(w), floor)
    return lam / np.linalg.norm(lam)


def _evaluate(A, theta, floor):
    lam = _lambdas(theta, floor)
    U, s, Vt = np.linalg.svd(A / np.outer(lam, lam))
    u, v = U[:, 0], Vt[0]
    # gradient of log ||D^-1 A D^-1||_2 with respect to theta
    grad = 2.0 * lam**2 - (u**2 + v**2)
    return float(s[0]), grad


def _descend(A, theta, iters, step, floor):
    f, g = _evaluate(A, theta, floor)
    for _ in range(iters):
        gmax = float(np.max(np.abs(g)))
        if gmax == 0.0 or step < 1e-9:
            break
        cand = theta - step * g / gmax
        fc, gc = _evaluate(A, cand, floor)
        if fc < f:
            theta, f, g = cand, fc, gc
        else:
            step *= 0.5
    return theta, f


def scaling_search(A, iters=200, seed=0, restarts=10, step=0.1, kg=KG_UPPER, infty_one=None):
    """Search for a positive unit ``lam`` minimising ``||D^-1 A D^-1||_2``.

    Parametrises ``lam = exp(theta) / ||exp(theta)||`` and descends the
    spectral-norm gradient (built from the top singular pair) with step
    halving on non-improvement.  Restart 0 starts from the uniform vector,
    the others from seeded random ``theta``.  Entries are floored at
    ``1e-8 / sqrt(N)`` so zero rows do not drive ``lam`` to zero.

    Returns
    -------
    ScalingCertificate
        ``certified`` is True when the scaled norm is at most
        ``3 * kg * infty_one`` (+1e-9).  ``infty_one`` is computed exactly
        unless supplied.
    """
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise InputError("scaling_search: matrix must be square")
    if not np.any(A):
        raise InputError("scaling_search: zero matrix has no meaningful scaling")
    N = A.shape[0]
    floor = 1e-8 / math.sqrt(N)
    if infty_one is None:
        infty_one = infty_one_exact(A).value
    best = None
    for r in range(restarts):
        theta0 = np.zeros(N) if r == 0 else trial_rng(seed, r).standard_normal(N)
        theta, f = _descend(A, theta0, iters, step, floor)
        if best is None or f < best[0]:
            best = (f, r, theta)
    _, r_best, theta = best
    w = np.exp(theta - theta.max())
    floored = int(np.sum(w / np.linalg.norm(w) < floor))
    lam = ScalingVector(_lambdas(theta, floor))
    scaled = spectral_norm(scaled_matrix(A, lam))
    certified = scaled <= 3.0 * kg * infty_one + 1e-9
    return ScalingCertificate(lam, scaled, float(infty_one), float(kg), bool(certified),
                              floored, r_best)


def theorem1_check(A, kg=KG_UPPER, tol=1e-9, rank_tol=DEFAULT_RANK_TOL) -> InequalityReport:
    """Check ``sum|a_ij| <= 3 kg sqrt(rank A) ||A||_{inf->1}``."""
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise InputError("theorem1_check: matrix must be square")
    norm = infty_one_exact(A).value
    rank = numerical_rank(A, rank_tol)
    lhs = abs_sum(A)
    rhs = 3.0 * kg * math.sqrt(rank) * norm
    ratio = lhs / rhs if rhs > 0 else 0.0
    return InequalityReport(lhs, rhs, ratio, lhs <= rhs * (1.0 + tol),
                            {"rank": rank, "infty_one": norm, "kg": kg})


def corollary_check(vectors, kg=KG_UPPER, tol=1e-9) -> InequalityReport:
    """Check ``sum|<v_i, J v_j>| <= 3 kg sqrt(2n) ||A||_{inf->1}`` for columns ``v_i``."""
    from .symplectic import pairing_matrix_of

    V = as_matrix(vectors, "vectors")
    if V.shape[0] % 2:
        raise InputError("corollary_check: ambient dimension must be even")
    A = pairing_matrix_of(V)
    norm = infty_one_exact(A).value
    lhs = abs_sum(A)
    rhs = 3.0 * kg * math.sqrt(V.shape[0]) * norm
    ratio = lhs / rhs if rhs > 0 else 0.0
    return InequalityReport(lhs, rhs, ratio, lhs <= rhs * (1.0 + tol),
                            {"infty_one": norm, "half_dim": V.shape[0] // 2, "kg": kg})
