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
# # Canonical form of antisymmetric matrices
#
# `B = Q^T R Q` with orthonormal rows `x_j, y_j` and `R` made of
# `[[0, -mu], [mu, 0]]` blocks, so that `B x_j = mu_j y_j`.

# %%
import numpy as np

from sympgroth import antisym_canonical, interleave_permutation, reconstruct
from sympgroth.symplectic import j_matrix

rng = np.random.default_rng(2)
X = rng.standard_normal((7, 7))
B = X - X.T
form = antisym_canonical(B)
form.mus, np.linalg.norm(reconstruct(form) - B)

# %% [markdown]
# Odd size forces a kernel: 7 x 7 gives three blocks.

# %%
form.k, form.q_rows.shape

# %% [markdown]
# The interleaving permutation turns the standard `J` into blocks.

# %%
P = interleave_permutation(3)
P.T @ j_matrix(3) @ P
