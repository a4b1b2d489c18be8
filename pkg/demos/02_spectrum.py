# %% [markdown]
# # Eigenvalues and eigenfunctions of a unitary canonical operator
#
# Take ``s = i sqrt(2)``, ``t = 1``.  Here ``kappa = i`` and the spectrum
# cycles with period 4.

# %%
import cmath
import math

import numpy as np

from fockcanon import GroupElement, spectral_data, eigenvalue
from fockcanon.spectral import eigen_residual, q_polynomial

g = GroupElement(1j * math.sqrt(2), 1)
d = spectral_data(g)
print("gamma", d.gamma, " kappa", d.kappa, " rho^2", d.rho**2, " period", d.degenerate_order)

# %%
for n in range(9):
    lam = eigenvalue(g, n, d)
    ref = cmath.exp(-0.25j * math.pi - 0.5j * math.pi * n)
    print(n, np.round(lam, 12), abs(lam - ref), f"residual {eigen_residual(g, n, data=d):.1e}")

# %% [markdown]
# The polynomial parts ``Q_n`` are rescaled Hermite polynomials.

# %%
for n in range(5):
    print(n, np.round(q_polynomial(g, n, d).coef, 10))

# %% [markdown]
# ## Rotations
# With ``t = 0`` the operator is diagonal: ``e^(-i alpha (n + 1/2))``.

# %%
alpha = 0.7
rot = GroupElement(cmath.exp(1j * alpha), 0)
print(np.round([eigenvalue(rot, n) / cmath.exp(-1j * alpha * (n + 0.5)) for n in range(5)], 14))
