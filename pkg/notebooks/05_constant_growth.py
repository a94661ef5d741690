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
# # Growth of the best constant c(n)
#
# For Gaussian families in R^{2n}, the ratio
# `sum |<v_i, J v_j>| / ||A||_{inf->1}` stays far below `3 kg sqrt(2n)`
# and grows with n.

# %%
from sympgroth import blt_sweep

rep = blt_sweep([1, 2, 3, 4], N=10, trials=30, seed=0)
[(r.parameter, round(r.lhs, 4), round(r.rhs, 2)) for r in rep.rows]

# %%
print("\n".join(rep.csv_lines()))
