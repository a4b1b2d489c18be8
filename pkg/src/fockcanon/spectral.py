"""Eigenpairs of the unitary operators T^(s,t) with |Re s| < 1.

With ``gamma`` the root inside the unit disk of

    s conj(t) gamma^2 + (s^2 - 1 - |t|^2) gamma - s t = 0,

and ``kappa = s + conj(t) gamma`` (unimodular), the numbers
``lambda_n = s^(-1/2) sqrt(s / kappa) kappa^(-n)`` are eigenvalues with
eigenfunctions ``Q_n(z) exp(gamma z^2 / 2)``, where ``Q_n`` is a Gaussian
transform of ``H_n(x / rho)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial import Polynomial

from .errors import DegenerateKappa, NoDiskSolution, NotUnitary
from .fock import QuadratureRule, principal_sqrt
from .group import GroupElement
from .hermite import hermite, hermite_gaussian_integral
from .operators import apply

SPECTRAL_TOL = 1e-10
DEGENERACY_SEARCH = 64


def solve_gamma(g: GroupElement) -> complex:
    """The unique root of the gamma-quadratic in the open unit disk."""
    if not g.in_sl():
        raise NotUnitary(f"{g} is not in SL(C x C)")
    s, t = g.s, g.t
    x, y = s.real, s.imag
    if abs(x) >= 1:
        raise NoDiskSolution(f"|Re s| = {abs(x)} >= 1: both roots are unimodular")
    if t == 0:
        return 0j
    # |s|^2 = 1 + |t|^2 > 1 with |x| < 1 forces y != 0
    assert y != 0
    return 1j * (-y + math.copysign(1.0, y) * math.sqrt(1 - x * x)) / np.conj(t)


def gamma_residual(g: GroupElement, gamma: complex) -> float:
    s, t = g.s, g.t
    return abs(s * np.conj(t) * gamma**2 + (s * s - 1 - abs(t) ** 2) * gamma - s * t)


@dataclass(frozen=True)
class SpectralData:
    g: GroupElement
    gamma: complex
    kappa: complex
    rho: float
    degenerate_order: int | None = None  # smallest k with kappa^k = 1, if any

    @property
    def delta(self) -> float:
        """``1 / rho^2``: the Hermite family index with ``H_n(x/rho) = rho^-n P_n``."""
        return 1.0 / self.rho**2


def _rho_sq(g: GroupElement, gamma: complex, kappa: complex) -> complex:
    s, t = g.s, g.t
    den = 2 * (kappa**2 - 1)
    if abs(den) <= SPECTRAL_TOL:
        raise DegenerateKappa("(s + conj(t) gamma)^2 = 1")
    return (1 + gamma) * ((s - np.conj(t)) * kappa - 1) / den


def spectral_data(g: GroupElement) -> SpectralData:
    gamma = solve_gamma(g)
    kappa = g.s + np.conj(g.t) * gamma
    r2 = _rho_sq(g, gamma, kappa)
    if r2.real <= 0 or abs(r2.imag) > SPECTRAL_TOL * max(1.0, abs(r2)):
        raise DegenerateKappa(f"rho^2 = {r2} is not a positive real")
    degenerate = None
    for k in range(1, DEGENERACY_SEARCH + 1):
        if abs(kappa**k - 1) <= SPECTRAL_TOL:
            degenerate = k
            break
    return SpectralData(g, complex(gamma), complex(kappa), math.sqrt(r2.real), degenerate)


def rho(g: GroupElement) -> float:
    return spectral_data(g).rho


def eigenvalue(g: GroupElement, n: int, data: SpectralData | None = None) -> complex:
    """``lambda_n = lambda_0 kappa^(-n)``."""
    d = spectral_data(g) if data is None else data
    s = g.s
    lam0 = principal_sqrt(s / d.kappa) / principal_sqrt(s)
    return complex(lam0 * d.kappa ** (-n))


def q_polynomial(g: GroupElement, n: int, data: SpectralData | None = None) -> Polynomial:
    """Monic ``Q_n``: ``int H_n(x/rho) exp(-2/(1+gamma) (x - (1+gamma) z/2)^2) dx`` rescaled."""
    d = spectral_data(g) if data is None else data
    mu = 2 / (1 + d.gamma)
    a = (1 + d.gamma) / 2
    # sample the closed form at n+1 points and fit; exact for degree n
    nodes = np.exp(2j * np.pi * np.arange(n + 1) / (n + 1))
    vals = d.rho ** (-n) * np.atleast_1d(hermite_gaussian_integral(n, d.delta, mu, a, nodes))
    Q = Polynomial(np.fft.fft(vals) / (n + 1))
    return Q / Q.coef[-1]


def eigenfunction(g: GroupElement, n: int, data: SpectralData | None = None) -> Callable:
    d = spectral_data(g) if data is None else data
    Q = q_polynomial(g, n, d)
    gamma = d.gamma
    return lambda z: Q(np.asarray(z, dtype=complex)) * np.exp(gamma * np.asarray(z, dtype=complex) ** 2 / 2)


def eigenfunction_coefficients(g: GroupElement, n: int, N: int | None = None,
                               data: SpectralData | None = None) -> np.ndarray:
    """Coefficients of ``Q_n exp(gamma z^2/2)`` in the basis ``e_m``, ``m < N``.

    By default ``N`` is large enough for the geometric tail ``|gamma|^(m/2)``
    to drop below 1e-17.
    """
    d = spectral_data(g) if data is None else data
    Q = q_polynomial(g, n, d)
    if N is None:
        r = abs(d.gamma)
        N = n + 2 + (0 if r == 0 else int(math.ceil(2 * 40 / -math.log(r))))
    # e^{gamma z^2/2} = sum_k a_k e_{2k}
    half = np.zeros(N // 2 + 1, dtype=complex)
    a = 1.0 + 0j
    for k in range(half.size):
        half[k] = a
        a *= d.gamma * math.sqrt((2 * k + 1) * (2 * k + 2)) / (2 * (k + 1))
    out = np.zeros(N, dtype=complex)
    lg = [math.lgamma(m + 1) for m in range(N)]
    for j, q in enumerate(Q.coef):
        # z^j e_m = sqrt((m+j)!/m!) e_{m+j}
        for m in range(0, N - j, 2):
            out[m + j] += q * half[m // 2] * math.exp(0.5 * (lg[m + j] - lg[m]))
    return out


def inverse_bargmann_eigenfunction(g: GroupElement, n: int,
                                   data: SpectralData | None = None) -> Callable:
    """``H_n(x/rho) exp(-(1-gamma)/(1+gamma) x^2)`` times ``(2/pi)^(1/4)``."""
    d = spectral_data(g) if data is None else data
    H = hermite(n)
    beta = (1 - d.gamma) / (1 + d.gamma)
    c = (2 / math.pi) ** 0.25

    def h(x):
        x = np.asarray(x)
        return c * H(x / d.rho) * np.exp(-beta * x**2)

    return h


def sample_disk(count: int = 20, radius: float = 1.5) -> np.ndarray:
    """Deterministic points filling the disk (sunflower pattern)."""
    k = np.arange(count)
    r = radius * np.sqrt((k + 0.5) / count)
    return r * np.exp(2j * np.pi * k * (3 - math.sqrt(5)) / 2)


def eigen_residual(g: GroupElement, n: int, zs=None, rule: QuadratureRule | None = None,
                   data: SpectralData | None = None) -> float:
    """``max |T f_n(z) - lambda_n f_n(z)| / ||f_n||`` over the sample points."""
    d = spectral_data(g) if data is None else data
    zs = sample_disk() if zs is None else np.asarray(zs, dtype=complex)
    f = eigenfunction(g, n, d)
    lam = eigenvalue(g, n, d)
    Tf = apply(g, f, zs, rule)
    norm = np.linalg.norm(eigenfunction_coefficients(g, n, data=d))
    return float(np.max(np.abs(Tf - lam * f(zs))) / norm)
