"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -v tests/test_acceptance.py``; the summary lines are
written straight to the terminal.
"""
import math
import time

import numpy as np
import pytest

from oracles import brute_infty_one, j_oracle, random_antisymmetric
from sympgroth.antisymmetric import antisym_canonical, reconstruct
from sympgroth.experiments import (
    SHARPNESS_FLOOR,
    blt_sweep,
    gaussian_family,
    isotropic_family,
    sharpness_sweep,
)
from sympgroth.grothendieck import KG_UPPER, scaling_search, theorem1_check
from sympgroth.linalg import hs_norm
from sympgroth.opnorms import infty_one_exact
from sympgroth.symplectic import (
    VectorFamily,
    example2_vectors,
    random_orthosymplectic,
    random_symplectic,
    standard_J,
)
from sympgroth.tame import limit_check, tame

KG = KG_UPPER


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}")
    return emit


def _matrix_corpus(count=500, seed=2024):
    """Gaussian, +-1 Bernoulli, sparse and rank-deficient square matrices, N <= 12."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        N = int(rng.integers(2, 13))
        kind = ("gaussian", "bernoulli", "sparse", "rank_deficient")[i % 4]
        if kind == "gaussian":
            A = rng.standard_normal((N, N))
        elif kind == "bernoulli":
            A = rng.choice([-1.0, 1.0], size=(N, N))
        elif kind == "sparse":
            A = rng.standard_normal((N, N)) * (rng.random((N, N)) < 0.2)
            if not np.any(A):
                A[rng.integers(N), rng.integers(N)] = 1.0
        else:
            r = int(rng.integers(1, N))
            A = rng.standard_normal((N, r)) @ rng.standard_normal((r, N))
        out.append((kind, A))
    return out


@pytest.fixture(scope="module")
def matrix_corpus():
    return _matrix_corpus()


def test_criterion1_abs_sum_inequality(matrix_corpus, report):
    t0 = time.perf_counter()
    violations, worst = [], 0.0
    for i, (kind, A) in enumerate(matrix_corpus):
        rep = theorem1_check(A, KG, tol=1e-9)
        worst = max(worst, rep.ratio)
        if not rep.holds:
            violations.append((i, kind, rep.ratio))
    elapsed = time.perf_counter() - t0
    ok = not violations and elapsed < 60
    report(1, "sum|a| <= 3 kg sqrt(rank) ||A||_inf->1 on 500 matrices", ok,
           f"violations={len(violations)} max_ratio={worst:.4f} time={elapsed:.1f}s")
    assert not violations, violations[:5]
    assert elapsed < 60


def test_criterion2_scaling_certified(matrix_corpus, report):
    t0 = time.perf_counter()
    failures = []
    for i, (kind, A) in enumerate(matrix_corpus):
        cert = scaling_search(A, seed=i, kg=KG)
        if not cert.certified:
            failures.append((i, kind, cert.scaled_norm / (3 * KG * cert.infty_one)))
    elapsed = time.perf_counter() - t0
    rate = 1 - len(failures) / len(matrix_corpus)
    ok = rate >= 0.99 and elapsed < 120
    report(2, "scaling search certifies on >= 99% of the corpus", ok,
           f"certified={rate:.1%} uncertified={failures} time={elapsed:.1f}s")
    assert rate >= 0.99, failures
    assert elapsed < 120


def test_criterion3_sharpness(report):
    t0 = time.perf_counter()
    rep = sharpness_sweep([1, 2, 4, 8, 16], kg=KG)
    elapsed = time.perf_counter() - t0
    ratios = {r.parameter: r.ratio for r in rep.rows}
    ok = all(v >= SHARPNESS_FLOOR - 1e-9 for v in ratios.values()) and elapsed < 30
    notes = ",".join(f"m={r.parameter}:{r.note}" for r in rep.rows if r.note != "exact")
    report(3, "Fourier-block ratio >= 1/sqrt2 for m in {1,2,4,8,16}", ok,
           f"ratios={ {m: round(v, 4) for m, v in ratios.items()} } ({notes}) "
           f"time={elapsed:.1f}s")
    assert all(v >= SHARPNESS_FLOOR - 1e-9 for v in ratios.values()), ratios
    assert elapsed < 30


def _antisym_corpus(count=200, seed=77):
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        N = int(rng.integers(2, 21))
        kind = ("full", "rank_deficient", "repeated", "near_repeated", "zero_padded")[i % 5]
        if kind == "full":
            X = rng.standard_normal((N, N))
            B = X - X.T
        elif kind == "rank_deficient":
            B, _ = random_antisymmetric(rng, N, rank=2 * int(rng.integers(0, N // 2 + 1)))
        elif kind == "repeated":
            B, _ = random_antisymmetric(rng, N, repeated=True)
        elif kind == "near_repeated":
            # close block values, as produced by the scaling search
            k = N // 2
            mus = np.repeat(rng.uniform(0.5, 2.0, size=(k + 1) // 2), 2)[:k]
            mus = mus * (1 + 1e-7 * rng.standard_normal(k))
            Q, _ = np.linalg.qr(rng.standard_normal((N, N)))
            R = np.zeros((N, N))
            for j, mu in enumerate(mus):
                R[2 * j + 1, 2 * j], R[2 * j, 2 * j + 1] = mu, -mu
            B = Q @ R @ Q.T
        else:
            B = np.zeros((N, N))
            m = N - N % 2 - 2 if N > 3 else N - N % 2
            X = rng.standard_normal((m, m))
            B[:m, :m] = X - X.T
        out.append((kind, 0.5 * (B - B.T)))
    return out


def test_criterion4_canonical_form(report):
    worst = {"recon": 0.0, "orth": 0.0, "mu": 0.0}
    bad = []
    for i, (kind, B) in enumerate(_antisym_corpus()):
        form = antisym_canonical(B)
        scale = max(1.0, hs_norm(B))
        recon = hs_norm(reconstruct(form) - B) / scale
        Q = form.q_rows
        orth = float(np.abs(Q @ Q.T - np.eye(Q.shape[0])).max()) if Q.size else 0.0
        # LAPACK spectral norm as the independent reference
        top = np.linalg.norm(B, 2)
        mu = abs((form.mus.max() if form.k else 0.0) - top)
        worst = {"recon": max(worst["recon"], recon), "orth": max(worst["orth"], orth),
                 "mu": max(worst["mu"], mu)}
        if recon > 1e-8 or orth > 1e-10 or mu > 1e-9:
            bad.append((i, kind, recon, orth, mu))
    report(4, "antisymmetric canonical form on 200 matrices", not bad,
           f"failures={len(bad)} max_recon={worst['recon']:.1e} max_orth={worst['orth']:.1e} "
           f"max_mu_err={worst['mu']:.1e}")
    assert not bad, bad[:5]


def _family_corpus(count=200, seed=5):
    """Full-rank, isotropic and mixed families, n <= 4, N <= 10."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = 1 + i % 4
        kind = ("full_rank", "isotropic", "mixed", "low_count")[(i // 4) % 4]
        if kind == "full_rank":
            N = int(rng.integers(2 * n, 11))
            fam = gaussian_family(n, N, seed, i)
        elif kind == "isotropic":
            N = int(rng.integers(1, 11))
            fam = isotropic_family(n, N, seed, i, dim=int(rng.integers(1, n + 1)))
        elif kind == "mixed":
            # p symplectic pairs plus d isotropic directions
            N = int(rng.integers(3, 11))
            p = int(rng.integers(1, n + 1))
            d = int(rng.integers(1, n - p + 1)) if p < n else 0
            V = np.zeros((2 * n, N))
            V[: p + d] = rng.standard_normal((p + d, N))
            V[n: n + p] = rng.standard_normal((p, N))
            S = random_symplectic(n, 0.5, seed=i) if i % 2 else random_orthosymplectic(n, i)
            fam = VectorFamily(standard_J(n), S @ V)
        else:
            N = int(rng.integers(1, 2 * n + 1))
            fam = gaussian_family(n, N, seed, i)
        out.append((kind, fam))
    return out


def test_criterion5_taming(report):
    t0 = time.perf_counter()
    eps = 1e-6
    bad, uncertified, worst_ratio, worst_res, rank0 = [], [], 0.0, 0.0, 0
    for i, (kind, fam) in enumerate(_family_corpus()):
        res = tame(fam, kg=KG, eps=eps, seed=i)
        S = res.s_family(eps)
        J = j_oracle(fam.ambient.half_dim)
        residual = hs_norm(S.T @ J @ S - J)
        worst_res = max(worst_res, residual)
        if not res.certified:
            uncertified.append(i)
        if res.rank:
            rhs = 3 * KG * res.rank * res.infty_one
            ratio = res.achieved_sum ** 2 / rhs
            worst_ratio = max(worst_ratio, ratio)
            holds = res.achieved_sum ** 2 <= rhs * (1 + 1e-6)
        else:
            # the right side is 0 and the infimum is not attained; check the
            # epsilon estimate achieved - limit <= eps * sum|v| with limit 0
            rank0 += 1
            holds = res.limit_sum == 0.0 and limit_check(res, fam)[2]
        if residual > 1e-8 or not holds:
            bad.append((i, kind, residual, res.rank))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 180
    report(5, "symplectic taming on 200 families", ok,
           f"failures={len(bad)} max_residual={worst_res:.1e} max_sq_ratio={worst_ratio:.4f} "
           f"rank0_families={rank0} (epsilon-limit form) uncertified={uncertified} "
           f"time={elapsed:.1f}s")
    assert not bad, bad[:5]
    assert elapsed < 180


def test_criterion6_lower_bound(report):
    worst = {}
    for m in (1, 2, 3):
        fam = example2_vectors(m, m, 2 * m)
        lows = []
        for t in range(100):
            S = random_symplectic(m, 0.2 + 0.02 * t, seed=1000 * m + t)
            lows.append(np.linalg.norm(S @ fam.columns, axis=0).sum())
        worst[m] = min(lows)
    ok = all(worst[m] >= 2 * m - 1e-8 for m in worst)
    report(6, "sum|S v| >= 2m for the standard-basis family", ok,
           "min sums " + ", ".join(f"m={m}: {v:.6f}" for m, v in worst.items()))
    assert ok, worst


def test_criterion7_blt_sweep(report):
    rep = blt_sweep([1, 2, 3], N=10, trials=50, seed=0, kg=KG)
    cn = rep.empirical_cn
    bounds = {n: 3 * KG * math.sqrt(2 * n) for n in cn}
    within = all(cn[n] <= bounds[n] for n in cn)
    monotone = cn[1] < cn[2] < cn[3]
    report(7, "empirical c(n) <= 3 kg sqrt(2n) and increasing", within and monotone,
           "c(n)=" + ", ".join(f"{n}:{cn[n]:.4f}(<= {bounds[n]:.2f})" for n in cn))
    assert within and rep.all_hold
    assert monotone, cn


def test_criterion8_exact_norm_oracle(report):
    rng = np.random.default_rng(8)
    worst, bad = 0.0, []
    for i in range(100):
        m, n = (int(x) for x in rng.integers(1, 9, size=2))
        A = rng.standard_normal((m, n)) if i % 2 else rng.integers(-3, 4, (m, n)).astype(float)
        value = infty_one_exact(A).value
        ref = brute_infty_one(A)
        err = abs(value - ref) / max(1.0, abs(ref))
        worst = max(worst, err)
        if err > 1e-12:
            bad.append((i, value, ref))
    report(8, "exact inf->1 norm equals brute force on 100 matrices", not bad,
           f"mismatches={len(bad)} max_rel_err={worst:.1e}")
    assert not bad, bad
