"""The integral operators T^(s,t) f(z) = int K^(s,t)(z, w) f(w) dlambda(w).

For ``|t| < 2|s|`` the operator is unbounded when ``|s|^2 - |t|^2 < 1``,
unitary when ``|s|^2 - |t|^2 = 1`` and Hilbert-Schmidt otherwise, with
squared HS norm ``|s| / (|s|^2 - |t|^2 - 1)``.

Matrices are taken in the orthonormal basis ``e_n(z) = z^n / sqrt(n!)``,
``M[m, n] = <T e_n, e_m>``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import (DomainViolation, NotHilbertSchmidt, NotInFock, NotUnitary,
                     TruncationTooLarge)
from .fock import (QuadratureRule, TruncatedFockVector, basis_values,
                   compensated_sum, default_nodes, principal_sqrt)
from .group import TOL_GROUP, GroupElement, cocycle, compose
from .kernel import (conjugate_params, kernel_eval, kernel_in_fock,
                     kernel_norm, kernel_sign)

MAX_TRUNCATION = 256


class OperatorClass(enum.Enum):
    UNBOUNDED = "Unbounded"
    UNITARY = "Unitary"
    HILBERT_SCHMIDT = "HilbertSchmidt"


def _check_domain(g: GroupElement):
    if g.s == 0 or abs(g.t) >= 2 * abs(g.s):
        raise DomainViolation(f"need |t| < 2|s|, got {g}")


def classify(g: GroupElement, tol: float = TOL_GROUP) -> OperatorClass:
    _check_domain(g)
    D = g.det()
    if abs(D - 1.0) <= tol:
        return OperatorClass.UNITARY
    if D > 1.0:
        return OperatorClass.HILBERT_SCHMIDT
    return OperatorClass.UNBOUNDED


def hs_norm_sq(g: GroupElement) -> float:
    """Squared Hilbert-Schmidt norm ``|s| / (|s|^2 - |t|^2 - 1)``."""
    if classify(g) is not OperatorClass.HILBERT_SCHMIDT:
        raise NotHilbertSchmidt(f"{g} is not Hilbert-Schmidt")
    return abs(g.s) / (g.det() - 1.0)


def hs_norm_sq_quadrature(g: GroupElement, rule: QuadratureRule | None = None) -> float:
    """``int int |K^(s,t)(z, w)|^2 dlambda(z) dlambda(w)`` by a product rule.

    The inner sums are BLAS matrix-vector products; with 48 nodes per axis
    the three reference cases agree with the closed form to ~1e-15.
    """
    if classify(g) is not OperatorClass.HILBERT_SCHMIDT:
        raise NotHilbertSchmidt(f"{g} is not Hilbert-Schmidt")
    rule = QuadratureRule.gauss_hermite(48) if rule is None else rule
    z, w = rule.planar()
    total = 0.0
    for start in range(0, z.size, 256):
        K = kernel_eval(g, z[start:start + 256, None], z[None, :])
        total += float(w[start:start + 256] @ (np.abs(K) ** 2 @ w))
    return total


def operator_rule(g: GroupElement, base: int | None = None) -> QuadratureRule:
    """Planar rule with enough nodes for the w-integral defining ``T^(s,t) f``.

    The integrand decays like ``exp(-(1 - |t|/(2|s|)) |w|^2)`` in the worst
    direction, so the node count grows as that rate shrinks.
    """
    base = default_nodes() if base is None else base
    rate = 1.0 - abs(g.t) / (2 * abs(g.s))
    return QuadratureRule.gauss_hermite(int(math.ceil(base / rate)))


def apply(g: GroupElement, f, z, rule: QuadratureRule | None = None,
          allow_unbounded: bool = False):
    """``T^(s,t) f`` at the point(s) ``z`` by planar quadrature."""
    if classify(g) is OperatorClass.UNBOUNDED and not allow_unbounded:
        raise DomainViolation(f"T^{g} is unbounded; pass allow_unbounded=True")
    rule = operator_rule(g) if rule is None else rule
    w, weights = rule.planar()
    fw = np.asarray(f(w), dtype=complex) * weights
    zz = np.atleast_1d(np.asarray(z, dtype=complex))
    out = np.empty(zz.shape, dtype=complex)
    for idx, zi in np.ndenumerate(zz):
        out[idx] = compensated_sum(kernel_eval(g, zi, w) * fw)
    return complex(out[0]) if np.ndim(z) == 0 else out


def apply_to_basis(g: GroupElement, n: int) -> Callable:
    """Closed form of ``T^(s,t) e_n``.

    ``t = 0``: ``s^(-n-1/2) e_n``.  Otherwise, with ``q = sqrt(conj(t)/(2s))``,
    ``(s n!)^(-1/2) exp(t z^2/(2s)) q^n H_n(z/(2 s q))``; this comes from
    expanding ``T K_u = K_u^(s,t)`` in powers of ``conj(u)``.  The Hermite
    recursion is run on ``q^k H_k / sqrt(k!)``, which only involves
    ``q^2``, so no square root is taken.
    """
    if not kernel_in_fock(g):
        raise NotInFock(f"|s| <= |t| for {g}")
    s, t = g.s, g.t
    rs = principal_sqrt(s)
    tb = np.conj(t)

    def Te_n(z):
        z = np.asarray(z, dtype=complex)
        # h_{k+1} = (z/s h_k - sqrt(k) conj(t)/s h_{k-1}) / sqrt(k+1)
        h_prev = np.zeros_like(z)
        h = np.ones_like(z)
        for k in range(n):
            h, h_prev = (z * h - math.sqrt(k) * tb * h_prev) / (s * math.sqrt(k + 1)), h
        return np.exp(t * z**2 / (2 * s)) * h / rs

    return Te_n


def _closed_form_matrix(g: GroupElement, N: int) -> np.ndarray:
    """Exact N x N block of the operator matrix.

    Column 0 holds the Taylor coefficients of ``s^(-1/2) exp(t z^2/(2s))``;
    later columns follow ``g_{n+1} = (z/s) g_n - n (conj t / s) g_{n-1}`` for
    ``g_n = sqrt(n!) T e_n``, where multiplication by ``z`` shifts the basis.
    Row truncation is exact since the recursion only moves mass upward.
    """
    s, t = g.s, g.t
    M = np.zeros((N, N), dtype=complex)
    c = 1.0 / principal_sqrt(s)
    ratio = t / (2 * s)
    for k in range(0, (N + 1) // 2):
        M[2 * k, 0] = c
        c = c * ratio * math.sqrt((2 * k + 1) * (2 * k + 2)) / (k + 1)
    up = np.sqrt(np.arange(1, N))
    tb = np.conj(t) / s
    for n in range(N - 1):
        M[1:, n + 1] = up * M[:-1, n] / (s * math.sqrt(n + 1))
        if n:
            M[:, n + 1] -= tb * math.sqrt(n / (n + 1)) * M[:, n - 1]
    return M


def _quadrature_matrix(g: GroupElement, N: int, rule: QuadratureRule | None) -> np.ndarray:
    """``M[m, n] = <T e_n, e_m>`` with both integrals done by quadrature."""
    rule = operator_rule(g, 48) if rule is None else rule
    w, ww = rule.planar()
    z, wz = w, ww  # same rule for the outer integral
    E_w = basis_values(w, N) * ww[:, None]
    M = np.zeros((N, N), dtype=complex)
    chunk = 512
    for start in range(0, z.size, chunk):
        zs = z[start:start + chunk]
        Kzw = kernel_eval(g, zs[:, None], w[None, :])
        Te = Kzw @ E_w  # (T e_n)(z_i)
        M += (np.conj(basis_values(zs, N)) * wz[start:start + chunk, None]).T @ Te
    return M


def matrix(g: GroupElement, N: int, method: str = "closed_form",
           rule: QuadratureRule | None = None) -> np.ndarray:
    if not kernel_in_fock(g):
        raise NotInFock(f"|s| <= |t| for {g}")
    if N > MAX_TRUNCATION:
        raise TruncationTooLarge(f"N = {N} exceeds {MAX_TRUNCATION}")
    if N < 1:
        raise ValueError("N must be positive")
    if method == "closed_form":
        return _closed_form_matrix(g, N)
    if method == "quadrature":
        return _quadrature_matrix(g, N, rule)
    raise ValueError(f"unknown method {method!r}")


def adjoint_params(g: GroupElement) -> tuple[GroupElement, int]:
    """``(T^(s,t))^* = c T^(conj s, -t)`` for unitary ``T^(s,t)``."""
    if classify(g) is not OperatorClass.UNITARY:
        raise NotUnitary(f"T^{g} is not unitary")
    return conjugate_params(g), kernel_sign(g)


def compose_operators(g1: GroupElement, g2: GroupElement) -> tuple[GroupElement, int]:
    """``T^(g1) T^(g2) = sign T^(g1 g2)``; returns ``(g1 g2, sign)``."""
    for g in (g1, g2):
        if classify(g) is not OperatorClass.UNITARY:
            raise NotUnitary(f"T^{g} is not unitary")
    return compose(g1, g2), cocycle(g1, g2)


def maximizing_direction(g: GroupElement) -> complex:
    """Unit vector along which ``|exp(q u^2)|`` in the kernel norm grows fastest."""
    s, t = g.s, g.t
    D = g.det()
    q = t * (abs(t) ** 2 + 1 - abs(s) ** 2) / (2 * np.conj(s) * D)
    if q == 0:
        return 1.0 + 0j
    return complex(np.exp(-0.5j * np.angle(q)))


def unboundedness_ratios(g: GroupElement, radii=(1, 2, 4, 8)) -> np.ndarray:
    """``||T K_u|| / ||K_u||`` along the maximizing ray; unbounded growth witnesses ``||T|| = inf``."""
    if not kernel_in_fock(g):
        raise NotInFock(f"|s| <= |t| for {g}")
    u = np.asarray(radii, dtype=float) * maximizing_direction(g)
    return kernel_norm(g, u) / np.exp(np.abs(u) ** 2 / 2)


@dataclass
class CanonicalOperator:
    """Convenience wrapper bundling parameters, class and a cached matrix."""

    g: GroupElement
    N: int = 64
    _matrix: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        self.kind = classify(self.g)

    def matrix(self) -> np.ndarray:
        if self._matrix is None:
            self._matrix = matrix(self.g, self.N)
            self._matrix.setflags(write=False)
        return self._matrix

    def __call__(self, f, z, rule: QuadratureRule | None = None, allow_unbounded: bool = False):
        return apply(self.g, f, z, rule, allow_unbounded)

    def apply_vector(self, v: TruncatedFockVector) -> TruncatedFockVector:
        M = self.matrix()
        c = np.zeros(self.N, dtype=complex)
        n = min(self.N, len(v))
        c[:n] = v.coeffs[:n]
        return TruncatedFockVector(M @ c)

    def hs_norm_sq(self) -> float:
        return hs_norm_sq(self.g)

    def adjoint(self) -> "CanonicalOperator":
        params, _ = adjoint_params(self.g)
        return CanonicalOperator(params, self.N)
