"""Parameter sweeps over the inequalities, at desk scale.

* :func:`sharpness_sweep` -- the Fourier-block matrices attain the
  ``sqrt(rank)`` growth in the absolute-sum inequality up to ``sqrt 2``.
* :func:`blt_sweep` -- the best constant ``c(n)`` in
  ``sum |<v_i, J v_j>| <= c(n) ||A||_{inf->1}`` stays below ``3 kg sqrt(2n)``.
* :func:`tame_bench` -- achieved vs certified sums for the taming maps,
  plus the lower bound ``2m`` on the standard-basis family.

Every sweep is deterministic given its arguments; random families come
from :func:`sympgroth.rng.trial_rng` keyed by ``(seed, n, trial)``.
"""
from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .grothendieck import KG_UPPER
from .linalg import numerical_rank
from .opnorms import ENUMERATION_LIMIT, abs_sum, infty_one_bounds, infty_one_exact
from .rng import trial_rng
from .symplectic import (
    VectorFamily,
    example2_vectors,
    fourier_orthogonal,
    pairing_matrix,
    random_orthosymplectic,
    random_symplectic,
    standard_J,
)
from .tame import limit_check, tame

SHARPNESS_FLOOR = 1.0 / math.sqrt(2.0)


@dataclass
class SweepRow:
    parameter: object
    lhs: float
    rhs: float
    ratio: float
    holds: bool
    runtime_ms: float
    note: str = ""


@dataclass
class SweepReport:
    kind: str
    kg: float
    params: dict
    rows: list = field(default_factory=list)
    empirical_cn: Optional[dict] = None

    @property
    def all_hold(self):
        return all(r.holds for r in self.rows)

    @property
    def max_ratio(self):
        return max((r.ratio for r in self.rows), default=0.0)

    @property
    def min_ratio(self):
        return min((r.ratio for r in self.rows), default=0.0)

    def to_dict(self):
        return {
            "kind": self.kind,
            "kg": self.kg,
            "params": self.params,
            "rows": [asdict(r) for r in self.rows],
            "aggregate": {"max_ratio": self.max_ratio, "min_ratio": self.min_ratio,
                          "all_hold": self.all_hold},
            "empirical_cn": None if self.empirical_cn is None
            else {str(k): v for k, v in self.empirical_cn.items()},
        }

    @classmethod
    def from_dict(cls, d):
        cn = d.get("empirical_cn")
        if cn is not None:
            cn = {int(k): float(v) for k, v in cn.items()}
        return cls(d["kind"], d["kg"], d["params"], [SweepRow(**r) for r in d["rows"]], cn)

    def csv_lines(self):
        yield "parameter,lhs,rhs,ratio,holds,runtime_ms,note"
        for r in self.rows:
            yield (f"{r.parameter},{r.lhs!r},{r.rhs!r},{r.ratio!r},{str(r.holds).lower()},"
                   f"{r.runtime_ms:.3f},{r.note}")


def _ms_since(t0):
    return 1000.0 * (time.perf_counter() - t0)


def fourier_block_matrix(m, N_pad):
    if N_pad < 2 * m:
        raise ValueError(f"N_pad={N_pad} is smaller than the block size {2 * m}")
    A = np.zeros((N_pad, N_pad))
    A[: 2 * m, : 2 * m] = fourier_orthogonal(m)
    return A


def sharpness_sweep(ms, N_pad=None, kg=KG_UPPER, limit=ENUMERATION_LIMIT) -> SweepReport:
    """Ratio ``sum|a| / (sqrt(rank) ||A||_{inf->1})`` for padded Fourier blocks.

    When the block exceeds the enumeration limit, the norm is replaced by a
    certified upper bound, which can only lower the recorded ratio; the row
    is then marked ``note="upper-bound norm"``.  A row holds when the ratio
    is at least ``1/sqrt 2`` (minus 1e-9) and the absolute-sum inequality
    holds against the best lower bound of the norm.
    """
    ms = [int(m) for m in ms]
    if N_pad is None:
        N_pad = 2 * max(ms) + 2
    report = SweepReport("sharpness", kg, {"ms": ms, "N_pad": N_pad})
    for m in ms:
        t0 = time.perf_counter()
        A = fourier_block_matrix(m, N_pad)
        rank = numerical_rank(A)
        total = abs_sum(A)
        if 2 * m <= limit:
            norm_hi = norm_lo = infty_one_exact(A, limit).value
            note = "exact"
        else:
            norm_lo, norm_hi = infty_one_bounds(A[: 2 * m, : 2 * m])
            note = "upper-bound norm"
        rhs = math.sqrt(rank) * norm_hi
        ratio = total / rhs
        holds = (ratio >= SHARPNESS_FLOOR - 1e-9
                 and total <= 3.0 * kg * math.sqrt(rank) * norm_lo * (1 + 1e-9))
        report.rows.append(SweepRow(m, total, rhs, ratio, bool(holds), _ms_since(t0), note))
    return report


def gaussian_family(n, N, seed, trial):
    V = trial_rng(seed, n, trial).standard_normal((2 * n, N))
    return VectorFamily(standard_J(n), V)


def blt_sweep(ns, N=10, trials=50, seed=0, kg=KG_UPPER) -> SweepReport:
    """Empirical best constant ``c(n)`` over Gaussian families of ``N`` vectors.

    One row per ``n``: ``lhs`` is ``max_trials sum|a_ij| / ||A||_{inf->1}``,
    ``rhs`` is ``3 kg sqrt(2n)``.  Families with an all-zero pairing
    matrix are skipped.
    """
    ns = [int(n) for n in ns]
    report = SweepReport("blt", kg, {"ns": ns, "N": N, "trials": trials, "seed": seed})
    report.empirical_cn = {}
    for n in ns:
        t0 = time.perf_counter()
        best, skipped = 0.0, 0
        for t in range(trials):
            A = pairing_matrix(gaussian_family(n, N, seed, t))
            norm = infty_one_exact(A).value
            if norm == 0.0:
                skipped += 1
                continue
            best = max(best, abs_sum(A) / norm)
        rhs = 3.0 * kg * math.sqrt(2 * n)
        report.empirical_cn[n] = best
        note = f"skipped={skipped}" if skipped else ""
        report.rows.append(SweepRow(n, best, rhs, best / rhs, best <= rhs, _ms_since(t0), note))
    return report


def isotropic_family(n, N, seed, trial, dim=None):
    """Random vectors in a random isotropic subspace of dimension ``dim`` (default n)."""
    rng = trial_rng(seed, n, trial, 1)
    dim = n if dim is None else dim
    V = np.zeros((2 * n, N))
    V[:dim] = rng.standard_normal((dim, N))
    U = random_orthosymplectic(n, seed=int(rng.integers(2**31)))
    return VectorFamily(standard_J(n), U @ V)


def tame_bench(ns, N=8, trials=5, seed=0, eps=1e-6, kg=KG_UPPER) -> SweepReport:
    """Achieved vs certified sums of the taming maps.

    Per ``n``: the standard-basis family ``basis`` (``m = n``; its sum
    must also stay at least ``2m``), ``trials`` Gaussian families, and one isotropic family
    (checked with :func:`sympgroth.tame.limit_check`, since its infimum 0
    is not attained).
    Uncertified scalings are reported in ``note`` and do not abort the sweep.
    """
    ns = [int(n) for n in ns]
    report = SweepReport("tame", kg, {"ns": ns, "N": N, "trials": trials, "seed": seed,
                                      "eps": eps})
    for n in ns:
        cases = [("basis", example2_vectors(n, n, max(N, 2 * n)))]
        cases += [(f"random{t}", gaussian_family(n, N, seed, t)) for t in range(trials)]
        cases.append(("isotropic", isotropic_family(n, N, seed, 0)))
        for label, fam in cases:
            t0 = time.perf_counter()
            res = tame(fam, kg=kg, eps=eps, seed=seed)
            note = "" if res.certified else "uncertified scaling"
            if res.rank == 0:
                lhs, rhs, holds = limit_check(res, fam)
                holds = holds and res.limit_sum == 0.0
            else:
                lhs = res.achieved_sum ** 2
                rhs = res.certified_bound ** 2
                holds = lhs <= rhs * (1 + 1e-6)
            if label == "basis":
                holds = holds and res.achieved_sum >= 2 * n - 1e-8
            ratio = lhs / rhs if rhs > 0 else 0.0
            report.rows.append(SweepRow(f"n={n}:{label}", lhs, rhs, ratio, bool(holds),
                                        _ms_since(t0), note))
    return report
