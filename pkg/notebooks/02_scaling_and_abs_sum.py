# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Diagonal scalings and the sqrt(rank) inequality
#
# For a square `A` there is a positive unit vector `lam` with
# `||D^-1 A D^-1||_2 <= 3 kg ||A||_{inf->1}`.  The search below finds one
# and reports whether the bound is certified.

# %%
import math

import numpy as np

from sympgroth import KG_UPPER, scaling_search, theorem1_check

J2 = np.array([[0.0, -1.0], [1.0, 0.0]])
cert = scaling_search(J2)
cert.lam.lambdas, cert.scaled_norm, cert.certified  # (1/sqrt2, 1/sqrt2), 2, True

# %%
rng = np.random.default_rng(1)
A = rng.choice([-1.0, 1.0], size=(10, 10))
cert = scaling_search(A)
cert.scaled_norm, cert.bound, cert.certified

# %% [markdown]
# ## sum |a_ij| <= 3 kg sqrt(rank A) ||A||_{inf->1}
#
# Low-rank matrices profit from the sqrt(rank) factor.

# %%
for r in (1, 3, 10):
    M = rng.standard_normal((10, r)) @ rng.standard_normal((r, 10))
    rep = theorem1_check(M, KG_UPPER)
    print(r, rep.details["rank"], round(rep.ratio, 4), rep.holds)

# %% [markdown]
# ## Sharpness
#
# Padded Fourier blocks keep `sum|a| / (sqrt(rank) ||A||)` above
# `1/sqrt2`, so the sqrt(rank) growth cannot be improved.

# %%
from sympgroth import sharpness_sweep

rep = sharpness_sweep([1, 2, 4, 8, 16])
[(r.parameter, round(r.ratio, 4), r.note) for r in rep.rows], 1 / math.sqrt(2)
