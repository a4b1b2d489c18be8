"""Hermite polynomials, their delta-rescaled family, and Gaussian integrals.

The family ``P_n`` is generated by ``P_k = 2x P_{k-1} - P'_{k-1} / delta``
(``delta = 1`` gives the physicists' Hermite polynomials).  Its members are
exactly the polynomial solutions of the integral equation

    int P(x) exp(-mu (x - a z)^2) dx = C_n int P(x) exp(-nu (x - b z)^2) dx,

with ``delta = (b^2 - a^2) mu nu / (nu b^2 - mu a^2)`` and
``C_n = sqrt(nu)/sqrt(mu) (a/b)^n``.  Both sides reduce to the Gaussian
moments computed by :func:`gaussian_moment`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.polynomial import Polynomial

from .errors import (HypothesisViolation, NonPositiveRealPart, OverflowGuard,
                     ZeroDelta)
from .fock import integrate_gaussian_line, principal_sqrt

MAX_DEGREE = 64
SQRT_PI = math.sqrt(math.pi)


def _check_degree(n: int):
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n > MAX_DEGREE:
        raise OverflowGuard(f"degree {n} exceeds {MAX_DEGREE}")


def hermite_int_coeffs(n: int) -> list[int]:
    """Exact integer coefficients (ascending) of ``H_n`` from the recursion."""
    _check_degree(n)
    p = [1]
    for _ in range(n):
        q = [0] * (len(p) + 1)
        for j, c in enumerate(p):
            q[j + 1] += 2 * c
            if j:
                q[j - 1] -= j * c
        p = q
    return p


def hermite(n: int) -> Polynomial:
    """Physicists' Hermite polynomial ``H_n`` built by ``H_n = 2x H_{n-1} - H'_{n-1}``."""
    return Polynomial(np.array(hermite_int_coeffs(n), dtype=float))


def generalized_hermite_exact(n: int, delta) -> list[Fraction]:
    """Closed-form coefficients of ``P_n`` in rational arithmetic (C = 1)."""
    _check_degree(n)
    delta = Fraction(delta)
    if delta == 0:
        raise ZeroDelta("delta must be non-zero")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        num = (-1) ** k * 2**n * math.factorial(n)
        den = 4**k * math.factorial(k) * math.factorial(n - 2 * k)
        coeffs[n - 2 * k] = Fraction(num, den) / delta**k
    return coeffs


def generalized_hermite_recursive_exact(n: int, delta) -> list[Fraction]:
    """Same polynomial from ``P_k = 2x P_{k-1} - P'_{k-1}/delta``, ``P_0 = 1``."""
    _check_degree(n)
    delta = Fraction(delta)
    if delta == 0:
        raise ZeroDelta("delta must be non-zero")
    p = [Fraction(1)]
    for _ in range(n):
        q = [Fraction(0)] * (len(p) + 1)
        for j, c in enumerate(p):
            q[j + 1] += 2 * c
            if j:
                q[j - 1] -= j * c / delta
        p = q
    return p


def generalized_hermite(n: int, delta: complex) -> Polynomial:
    """``P_n(x) = sum_k (-1)^k 2^n n! / (4^k k! (n-2k)! delta^k) x^(n-2k)``."""
    _check_degree(n)
    delta = complex(delta)
    if delta == 0:
        raise ZeroDelta("delta must be non-zero")
    coeffs = np.zeros(n + 1, dtype=complex)
    for k in range(n // 2 + 1):
        num = (-1) ** k * 2**n * math.factorial(n)
        den = 4**k * math.factorial(k) * math.factorial(n - 2 * k)
        coeffs[n - 2 * k] = (num / den) / delta**k
    return Polynomial(coeffs)


def generalized_hermite_recursive(n: int, delta: complex) -> Polynomial:
    _check_degree(n)
    delta = complex(delta)
    if delta == 0:
        raise ZeroDelta("delta must be non-zero")
    x2 = Polynomial([0, 2])
    p = Polynomial([1.0 + 0j])
    for _ in range(n):
        p = x2 * p - p.deriv() / delta
    return p


def _half_gamma_even(k: int) -> float:
    """``Gamma((k+1)/2)`` for even ``k``: ``(k-1)!! sqrt(pi) / 2^(k/2)``."""
    dfact = 1
    for j in range(k - 1, 0, -2):
        dfact *= j
    return dfact * SQRT_PI / 2 ** (k // 2)


def _check_mu(mu: complex):
    if complex(mu).real <= 0:
        raise NonPositiveRealPart(f"Re mu = {complex(mu).real} must be positive")


def gaussian_moment_poly(n: int, mu: complex) -> Polynomial:
    """Polynomial ``I(z) = int x^n exp(-mu (x + z)^2) dx`` in ``z``."""
    _check_degree(n)
    _check_mu(mu)
    root = principal_sqrt(mu)
    coeffs = np.zeros(n + 1, dtype=complex)
    for k in range(0, n + 1, 2):
        c = ((-1) ** (n - k) * math.comb(n, k) * _half_gamma_even(k)) / root ** (k + 1)
        coeffs[n - k] = c
    return Polynomial(coeffs)


def gaussian_moment(n: int, mu: complex, z):
    """``int_R x^n exp(-mu (x + z)^2) dx`` for ``Re mu > 0``."""
    out = gaussian_moment_poly(n, mu)(np.asarray(z, dtype=complex))
    return complex(out) if np.ndim(out) == 0 else out


def gaussian_integral_of(P: Polynomial, mu: complex, a: complex, z):
    """``int_R P(x) exp(-mu (x - a z)^2) dx`` through the moment formula."""
    z = np.asarray(z, dtype=complex)
    shift = -complex(a) * z
    total = np.zeros_like(z)
    for j, c in enumerate(np.asarray(P.coef, dtype=complex)):
        if c != 0:
            total = total + c * gaussian_moment_poly(j, mu)(shift)
    return complex(total) if total.ndim == 0 else total


def hermite_gaussian_integral(n: int, delta: complex, mu: complex, a: complex, z,
                              C: complex = 1.0):
    """Closed form of ``int P_n(x) exp(-mu (x - a z)^2) dx`` for ``P_n`` of the delta family."""
    _check_degree(n)
    _check_mu(mu)
    delta, mu, a = complex(delta), complex(mu), complex(a)
    if delta == 0:
        raise ZeroDelta("delta must be non-zero")
    root = principal_sqrt(mu)
    ratio = 1.0 - delta / mu
    coeffs = np.zeros(n + 1, dtype=complex)
    for k in range(n // 2 + 1):
        num = (-1) ** k * 2**n * math.factorial(n)
        den = 4**k * math.factorial(k) * math.factorial(n - 2 * k)
        coeffs[n - 2 * k] = (num / den) * a ** (n - 2 * k) * SQRT_PI / (delta**k * root) * ratio**k
    out = C * Polynomial(coeffs)(np.asarray(z, dtype=complex))
    return complex(out) if np.ndim(out) == 0 else out


def solve_nu(mu: complex, a: complex, b: complex, delta: complex = 1.0) -> complex:
    """The ``nu`` making ``(b^2 - a^2) mu nu / (nu b^2 - mu a^2)`` equal ``delta``."""
    mu, a, b, delta = complex(mu), complex(a), complex(b), complex(delta)
    den = delta * b**2 - (b**2 - a**2) * mu
    if den == 0:
        raise HypothesisViolation("no finite nu for these parameters")
    return delta * mu * a**2 / den


@dataclass(frozen=True)
class IntegralEqParams:
    mu: complex
    nu: complex
    a: complex
    b: complex
    n: int

    def __post_init__(self):
        for name in ("mu", "nu", "a", "b"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @property
    def delta(self) -> complex:
        return (self.b**2 - self.a**2) * self.mu * self.nu / (self.nu * self.b**2 - self.mu * self.a**2)

    @property
    def constant(self) -> complex:
        """``C_n = sqrt(nu)/sqrt(mu) (a/b)^n``."""
        return principal_sqrt(self.nu) / principal_sqrt(self.mu) * (self.a / self.b) ** self.n

    def violations(self, tol: float = 1e-12) -> list[str]:
        bad = []
        if self.mu.real <= 0:
            bad.append("Re mu > 0")
        if self.nu.real <= 0:
            bad.append("Re nu > 0")
        if self.a == 0:
            bad.append("a != 0")
        if self.b == 0:
            bad.append("b != 0")
        if abs(self.nu * self.b**2 - self.mu * self.a**2) <= tol:
            bad.append("nu b^2 != mu a^2")
        for k in range(1, self.n + 1):
            if abs(self.a**k - self.b**k) <= tol * max(1.0, abs(self.b) ** k):
                bad.append(f"a^{k} != b^{k}")
                break
        return bad

    def validate(self):
        bad = self.violations()
        if bad:
            raise HypothesisViolation("violated: " + ", ".join(bad))


def default_z_samples(count: int = 10) -> np.ndarray:
    """Fixed sample points spread over the disk of radius 2."""
    k = np.arange(count)
    return (0.3 + 1.7 * (k + 1) / count) * np.exp(2j * np.pi * 0.381966 * k + 0.2j)


def integral_equation_sides(p: IntegralEqParams, P: Polynomial, zs=None,
                            method: str = "moments") -> tuple[np.ndarray, np.ndarray]:
    """Left side and ``C_n`` times right side at the sample points."""
    zs = default_z_samples() if zs is None else np.asarray(zs, dtype=complex)
    if method == "moments":
        lhs = gaussian_integral_of(P, p.mu, p.a, zs)
        rhs = gaussian_integral_of(P, p.nu, p.b, zs)
    elif method == "quadrature":
        lhs = np.array([integrate_gaussian_line(P, p.mu, p.a * z) for z in zs])
        rhs = np.array([integrate_gaussian_line(P, p.nu, p.b * z) for z in zs])
    else:
        raise ValueError(f"unknown method {method!r}")
    return np.asarray(lhs), p.constant * np.asarray(rhs)


def verify_integral_equation(p: IntegralEqParams, P: Polynomial, zs=None,
                             method: str = "moments") -> float:
    """Largest symmetric relative mismatch of the two sides over ``zs``."""
    p.validate()
    if P.degree() != p.n:
        raise HypothesisViolation(f"deg P = {P.degree()} but n = {p.n}")
    lhs, rhs = integral_equation_sides(p, P, zs, method)
    return float(np.max(np.abs(lhs - rhs) / (np.abs(lhs) + np.abs(rhs))))


def satisfies_coefficient_condition(P: Polynomial, delta: complex, tol: float = 1e-12) -> bool:
    """Parity plus ``(n-2k)! c_{2k} = -2 delta (2k+2) (n-2k-2)! c_{2k+2}``.

    ``c_j`` is the coefficient of ``x^(n-j)``.
    """
    n = P.degree()
    desc = np.asarray(P.coef, dtype=complex)[::-1]
    scale = max(1.0, float(np.max(np.abs(desc))))
    for j in range(1, n + 1, 2):
        if abs(desc[j]) > tol * scale:
            return False
    for k in range(0, (n - 2) // 2 + 1):
        if 2 * k + 2 > n:
            break
        lhs = math.factorial(n - 2 * k) * desc[2 * k]
        rhs = -2 * delta * (2 * k + 2) * math.factorial(n - 2 * k - 2) * desc[2 * k + 2]
        if abs(lhs - rhs) > tol * max(abs(lhs), abs(rhs), 1.0):
            return False
    return True
