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
# # Shrinking a vector family with a symplectic map
#
# The pairing matrix `A = V^T J V` does not change under symplectic maps,
# but the total length `sum |v_i|` does.  `tame` builds `S` with
# `(sum |S v_i|)^2 <= 3 kg rank(A) ||A||_{inf->1}`.

# %%
import numpy as np

from sympgroth import VectorFamily, example2_vectors, random_symplectic, tame
from sympgroth.experiments import isotropic_family

V = random_symplectic(2, 1.5, seed=3) @ np.random.default_rng(3).standard_normal((4, 6))
fam = VectorFamily.from_columns(V)
res = tame(fam)
fam.norm_sum(), res.achieved_sum, res.certified_bound

# %% [markdown]
# ## The standard basis cannot be shrunk below 2m

# %%
fam = example2_vectors(2, 2, 4)
sums = [np.linalg.norm(random_symplectic(2, 0.5, seed=s) @ fam.columns, axis=0).sum()
        for s in range(20)]
min(sums), tame(fam).achieved_sum

# %% [markdown]
# ## Isotropic families
#
# With zero pairing the infimum is 0 but not attained; the map family
# `S_eps` shrinks the vectors by the factor eps.

# %%
fam = isotropic_family(3, 5, seed=0, trial=0)
res = tame(fam)
[(eps, np.linalg.norm(res.s_family(eps) @ fam.columns, axis=0).sum() / fam.norm_sum())
 for eps in (1e-1, 1e-3, 1e-6)]
