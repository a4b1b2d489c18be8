# %% [markdown]
# # Hermite polynomials as solutions of a Gaussian integral equation
#
# ``P`` solves ``int P(x) e^{-mu (x - a z)^2} dx = C int P(x) e^{-nu (x - b z)^2} dx``
# exactly when it is (a multiple of) the delta-Hermite polynomial.

# %%
import numpy as np

from fockcanon import IntegralEqParams, generalized_hermite, verify_integral_equation
from fockcanon.hermite import generalized_hermite_exact, solve_nu

for n in range(5):
    print(n, [str(c) for c in generalized_hermite_exact(n, 1)])

# %%
mu, a, b = 1.3 + 0.2j, 0.8, 1.1 - 0.3j
for delta in (1, 1.5, 2 + 1j):
    nu = solve_nu(mu, a, b, delta)
    for n in (2, 5):
        p = IntegralEqParams(mu, nu, a, b, n)
        P = generalized_hermite(n, p.delta)
        bumped = P + np.polynomial.Polynomial([0, 1])
        print(f"delta={delta!s:6} n={n}  residual {verify_integral_equation(p, P):.1e}"
              f"   perturbed {verify_integral_equation(p, bumped):.1e}")

# %% [markdown]
# Both sides can also be evaluated by Gauss-Hermite quadrature on the line.

# %%
p = IntegralEqParams(mu, solve_nu(mu, a, b, 1), a, b, 4)
print(verify_integral_equation(p, generalized_hermite(4, 1), method="quadrature"))
