"""Fock space plumbing: branch convention, Gaussian quadrature, inner products.

The Fock space F^2 consists of entire functions square integrable against the
Gaussian probability measure ``dlambda(z) = exp(-|z|^2) dA(z) / pi``.  All
integrals over the plane are done with a tensor Gauss-Hermite rule in
``(Re z, Im z)``; integrals over the real line use the same 1-D rule.
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numpy.polynomial.hermite import hermgauss
from scipy.special import roots_hermite

from .errors import NonFiniteIntegrand

DEFAULT_NODES = 64
NODES_ENV = "FOCKCANON_NODES"


def principal_sqrt(z):
    """Square root with argument in (-pi/2, pi/2].

    Negative reals map to ``+i sqrt(|z|)`` regardless of the sign of a zero
    imaginary part (numpy sends ``-1-0j`` to ``-1j``).  Accepts scalars or
    arrays; scalars come back as Python ``complex``.
    """
    arr = np.asarray(z, dtype=complex)
    root = np.sqrt(arr)
    cut = (arr.imag == 0) & (arr.real < 0)
    if np.any(cut):
        root = np.where(cut, 1j * np.sqrt(np.abs(arr.real)), root)
    if root.ndim == 0:
        return complex(root)
    return root


def default_nodes() -> int:
    """Node count per axis, overridable through ``FOCKCANON_NODES``."""
    raw = os.environ.get(NODES_ENV)
    if raw:
        return int(raw)
    return DEFAULT_NODES


def compensated_sum(values) -> complex:
    """Exactly rounded sum of a complex array in ascending index order."""
    flat = np.ravel(np.asarray(values, dtype=complex))
    return complex(math.fsum(flat.real), math.fsum(flat.imag))


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """1-D Gauss-Hermite rule, optionally stretched, used on each axis.

    ``weights_1d`` are arranged so that ``sum(w * h(x))`` approximates
    ``int exp(-x^2) h(x) dx`` for the stretched nodes ``x``.  Stretching
    (``scale > 1``) spreads the nodes for integrands that grow like
    ``exp(c |w|^2)``.  Nodes with ``|z| > truncation_radius`` are dropped in
    the planar rule.
    """

    nodes_1d: np.ndarray
    weights_1d: np.ndarray
    truncation_radius: float = math.inf
    scale: float = 1.0

    @classmethod
    def gauss_hermite(cls, n: int | None = None, scale: float = 1.0,
                      radius: float | None = None) -> "QuadratureRule":
        if n is None:
            n = default_nodes()
        if n < 2:
            raise ValueError("need at least two quadrature nodes")
        xi, w = hermgauss(n)
        nodes = scale * xi
        weights = scale * w * np.exp(-(scale**2 - 1.0) * xi**2)
        return cls(nodes, weights, math.inf if radius is None else float(radius), float(scale))

    @property
    def size(self) -> int:
        return len(self.nodes_1d)

    def doubled(self) -> "QuadratureRule":
        return QuadratureRule.gauss_hermite(2 * self.size, self.scale,
                                            None if math.isinf(self.truncation_radius)
                                            else self.truncation_radius)

    def planar(self) -> tuple[np.ndarray, np.ndarray]:
        """Nodes ``z`` and weights for ``int g dlambda``, flattened row-major."""
        x = self.nodes_1d
        z = (x[:, None] + 1j * x[None, :]).ravel()
        w = (np.outer(self.weights_1d, self.weights_1d) / np.pi).ravel()
        if not math.isinf(self.truncation_radius):
            keep = np.abs(z) <= self.truncation_radius
            z, w = z[keep], w[keep]
        return z, w


def line_rule(n: int = 120, scale: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Nodes/weights approximating ``int h(x) dx`` for Gaussian-decaying ``h``.

    scipy's asymptotic Hermite roots keep large ``n`` (thousands) cheap.
    """
    xi, w = roots_hermite(n)
    # exp(log w + xi^2) keeps the outer weights from underflowing
    with np.errstate(divide="ignore"):
        return scale * xi, scale * np.exp(np.log(w) + xi**2)


def _evaluate(g: Callable, z: np.ndarray) -> np.ndarray:
    vals = np.asarray(g(z), dtype=complex)
    if vals.shape != z.shape:
        vals = np.broadcast_to(vals, z.shape)
    if not np.all(np.isfinite(vals)):
        raise NonFiniteIntegrand("integrand is not finite at some quadrature node")
    return vals


def integrate_gaussian_C(g: Callable, rule: QuadratureRule | None = None) -> complex:
    """Approximate ``int_C g(z) dlambda(z)``.

    ``g`` must accept an array of complex points.
    """
    if rule is None:
        rule = QuadratureRule.gauss_hermite()
    z, w = rule.planar()
    return compensated_sum(w * _evaluate(g, z))


def integrate_gaussian_C_many(g: Callable, params: np.ndarray,
                              rule: QuadratureRule | None = None) -> np.ndarray:
    """Integrate a family ``g(p, w)`` over ``w`` for each ``p`` in ``params``.

    ``g`` receives ``p`` with shape ``(k, 1)`` and nodes with shape ``(1, m)``.
    """
    if rule is None:
        rule = QuadratureRule.gauss_hermite()
    z, w = rule.planar()
    params = np.atleast_1d(np.asarray(params, dtype=complex))
    vals = np.asarray(g(params.reshape(-1, 1), z.reshape(1, -1)), dtype=complex)
    vals = np.broadcast_to(vals, (params.size, z.size))
    if not np.all(np.isfinite(vals)):
        raise NonFiniteIntegrand("integrand is not finite at some quadrature node")
    terms = vals * w
    out = np.array([compensated_sum(row) for row in terms])
    return out.reshape(np.shape(params))


def fock_inner(f: Callable, g: Callable, rule: QuadratureRule | None = None) -> complex:
    """``<f, g> = int f conj(g) dlambda`` (linear in ``f``)."""
    return integrate_gaussian_C(lambda z: _evaluate(f, z) * np.conj(_evaluate(g, z)), rule)


def fock_norm(f: Callable, rule: QuadratureRule | None = None) -> float:
    return math.sqrt(max(fock_inner(f, f, rule).real, 0.0))


def reproducing_kernel(u: complex) -> Callable:
    """``K_u(z) = exp(z conj(u))``; ``<f, K_u> = f(u)`` for f in F^2."""
    ub = np.conj(complex(u))
    return lambda z: np.exp(np.asarray(z, dtype=complex) * ub)


def monomial(n: int) -> Callable:
    """Orthonormal basis element ``e_n(z) = z^n / sqrt(n!)``."""
    c = 1.0 / math.sqrt(math.factorial(n)) if n < 170 else math.exp(-0.5 * math.lgamma(n + 1))
    return lambda z: c * np.asarray(z, dtype=complex) ** n


def basis_values(z, n_max: int) -> np.ndarray:
    """Stack ``e_0(z), ..., e_{n_max-1}(z)`` along a new last axis."""
    z = np.asarray(z, dtype=complex)
    out = np.empty(z.shape + (n_max,), dtype=complex)
    out[..., 0] = 1.0
    for n in range(1, n_max):
        out[..., n] = out[..., n - 1] * z / math.sqrt(n)
    return out


@dataclass(frozen=True, eq=False)
class TruncatedFockVector:
    """Coefficients in the monomial orthonormal basis ``e_n``."""

    coeffs: np.ndarray = field(default_factory=lambda: np.ones(1, dtype=complex))

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if c.ndim != 1 or c.size < 1:
            raise ValueError("coefficient vector must be 1-D and non-empty")
        object.__setattr__(self, "coeffs", c)

    def __len__(self) -> int:
        return self.coeffs.size

    def __call__(self, z):
        return basis_values(z, len(self)) @ self.coeffs

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def inner(self, other: "TruncatedFockVector") -> complex:
        n = min(len(self), len(other))
        return complex(np.dot(self.coeffs[:n], np.conj(other.coeffs[:n])))

    def to_json(self) -> str:
        return json.dumps([[float(c.real), float(c.imag)] for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "TruncatedFockVector":
        pairs = json.loads(text)
        return cls(np.array([complex(re, im) for re, im in pairs]))


def integrate_gaussian_line(h: Callable, mu: complex, center: complex = 0.0,
                            n: int = 160) -> complex:
    """``int_R h(x) exp(-mu (x - center)^2) dx`` for ``Re mu > 0``.

    Gauss-Hermite on the real line after centring at the maximum of the real
    part of the exponent, so that only a pure phase is left to resolve.
    Used as an independent check on the closed-form Gaussian integrals.
    """
    mu = complex(mu)
    c = complex(center)
    m = mu.real
    if m <= 0:
        raise ValueError("Re mu must be positive")
    x0 = (mu * c).real / m
    xi, w = hermgauss(n)
    x = x0 + xi / math.sqrt(m)
    expo = -mu * (x - c) ** 2 + xi**2
    vals = np.asarray(h(x), dtype=complex) * np.exp(expo)
    return compensated_sum(w * vals) / math.sqrt(m)
