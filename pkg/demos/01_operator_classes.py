# %% [markdown]
# # Three kinds of canonical operators
#
# Each pair ``(s, t)`` with ``|t| < 2|s|`` gives an integral operator on the
# Fock space.  The sign of ``|s|^2 - |t|^2 - 1`` decides its type.

# %%
import numpy as np

from fockcanon import GroupElement, classify, hs_norm_sq, matrix
from fockcanon.operators import hs_norm_sq_quadrature, unboundedness_ratios

for s, t in [(2, 0), (2, 1), (3, 2j), (np.sqrt(2) * 1j, 1), (1, 0.5)]:
    g = GroupElement(s, t)
    print(f"{str(g):40s} {classify(g).value}")

# %% [markdown]
# ## Hilbert-Schmidt norm three ways
# The closed form, a double quadrature of ``|K|^2`` and the sum of squared
# matrix entries should agree.  The matrix sum converges slowly once
# ``|t|/|s|`` is close to 1.

# %%
for s, t in [(2, 0), (2, 1), (3, 2j)]:
    g = GroupElement(s, t)
    exact = hs_norm_sq(g)
    quad = hs_norm_sq_quadrature(g)
    mat = {N: np.sum(np.abs(matrix(g, N)) ** 2) for N in (20, 60, 200)}
    print(f"{s!s:>3} {t!s:>3}  exact {exact:.12f}  quad {quad:.12f}  "
          + "  ".join(f"N={N}: {v:.8f}" for N, v in mat.items()))

# %% [markdown]
# ## A unitary operator and the cost of truncation
# For ``|s|^2 - |t|^2 = 1`` the matrix is unitary, but an ``N x N`` block only
# sees the first ``N`` rows.  Column ``n`` keeps a tail of size roughly
# ``(|t|/|s|)^(N-n)``, so ``M*M`` on a fixed corner converges slowly
# when ``|t|`` is large.

# %%
for t in (0.25, 0.5, 1.0, 2.0):
    g = GroupElement.sl_from(t, 0.4)
    errs = []
    for N in (64, 128, 256):
        M = matrix(g, N)
        errs.append(np.max(np.abs(M.conj().T @ M - np.eye(N))[:16, :16]))
    print(f"|t| = {t:4}:  " + "  ".join(f"N={N}: {e:.1e}" for N, e in zip((64, 128, 256), errs)))

# %% [markdown]
# ## Unbounded case
# For ``(1, 0.5)`` the reproducing kernels are mapped to vectors whose norm
# outgrows theirs along one ray.

# %%
print(unboundedness_ratios(GroupElement(1, 0.5)))
