# %% [markdown]
# # Linear canonical transforms seen through the Bargmann transform
#
# Conjugating a linear canonical transform ``F^A`` by the Bargmann transform
# gives a canonical operator on the Fock space, up to a sign ``C_A``.

# %%
import math

import numpy as np
from numpy.polynomial import Polynomial

from fockcanon import RealSymplecticMatrix as R
from fockcanon import bargmann, bargmann_sign, frft, lct_apply, phi
from fockcanon.lct import hermite_gaussian, lct_norm_ratio, verify_conjugation
from fockcanon.spectral import sample_disk

x = np.linspace(-2, 2, 5)
gauss = lambda x: np.exp(-x**2)
print("quarter turn of a Gaussian:", np.round(lct_apply(R.rotation(math.pi / 2), gauss, x), 12))
print("frft(pi/2) of a Gaussian: ", np.round(frft(math.pi / 2, gauss, x), 12))

# %% [markdown]
# Hermite-Gaussians go to normalized monomials.

# %%
z = np.array([0.5, 1j, -0.3 + 0.8j])
for n in range(4):
    print(n, np.round(bargmann(hermite_gaussian(n), z) * math.sqrt(math.factorial(n)) / z**n, 12))

# %% [markdown]
# The bridge, for a few families and a random polynomial.

# %%
rng = np.random.default_rng(0)
f = Polynomial(rng.normal(size=5) + 1j * rng.normal(size=5))
for name, A in [("rotation", R.rotation(math.pi / 3)), ("dilation", R.dilation(1.5)),
                ("fresnel", R.fresnel(0.7)), ("chirp", R.chirp(0.6)),
                ("minus identity", R(-1, 0, 0, -1))]:
    print(f"{name:15s} phi(A) = {str(phi(A)):45s} C_A = {bargmann_sign(A):+d}"
          f"  residual {verify_conjugation(A, f, sample_disk()):.1e}")

# %% [markdown]
# ``F^A`` keeps the L^2 norm.

# %%
print([round(lct_norm_ratio(R.fresnel(0.5), hermite_gaussian(n)), 8) for n in range(4)])
