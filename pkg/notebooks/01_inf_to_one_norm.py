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
# # The inf -> 1 norm
#
# `||A||_{inf->1}` is the largest value of `t^T A s` over sign vectors.
# Exact evaluation enumerates the smaller side; larger matrices get a
# certified bracket.

# %%
import numpy as np

from sympgroth import abs_sum, infty_one_bounds, infty_one_exact

A = np.array([[1.0, 2.0], [3.0, 4.0]])
res = infty_one_exact(A)
res.value, res.witness_t, res.witness_s  # 10, both all-ones

# %% [markdown]
# The absolute entry sum always dominates the norm.

# %%
rng = np.random.default_rng(0)
B = rng.standard_normal((9, 9))
abs_sum(B), infty_one_exact(B).value

# %% [markdown]
# ## Beyond enumeration
#
# For a 40 x 40 matrix the exact routine refuses; the bounds come from a
# low-rank ascent (lower) and a dual certificate (upper).

# %%
C = rng.standard_normal((40, 40))
lo, hi = infty_one_bounds(C)
lo, hi, hi / lo
