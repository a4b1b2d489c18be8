"""The two-parameter kernel

    K^(s,t)(z, w) = s^(-1/2) exp[(t z^2 - conj(t w^2) + 2 z conj(w)) / (2 s)]

with the principal square root.  ``K^(1,0)(z, w) = exp(z conj(w))`` is the
reproducing kernel of F^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NotInFock, ZeroS
from .fock import principal_sqrt
from .group import GroupElement, as_sign


def _check_s(g: GroupElement):
    if g.s == 0:
        raise ZeroS("s must be non-zero")


def kernel_eval(g: GroupElement, z, w):
    """``K^(s,t)(z, w)``; broadcasts over ``z`` and ``w``."""
    _check_s(g)
    s, t = g.s, g.t
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    out = np.exp((t * z**2 - np.conj(t * w**2) + 2 * z * np.conj(w)) / (2 * s)) / principal_sqrt(s)
    return complex(out) if out.ndim == 0 else out


def kernel_function(g: GroupElement, w: complex) -> Callable:
    """``K_w^(s,t)`` as a function of ``z``."""
    _check_s(g)
    return lambda z: kernel_eval(g, z, w)


def kernel_sign(g: GroupElement) -> int:
    """``c = sqrt(conj s) / conj(sqrt s)`` with ``conj K^(s,t)(z,w) = c K^(conj s,-t)(w,z)``.

    Computed from the branch rather than hard-coded; it is -1 exactly on the
    negative real axis.
    """
    _check_s(g)
    return as_sign(principal_sqrt(np.conj(g.s)) / np.conj(principal_sqrt(g.s)))


def conjugate_params(g: GroupElement) -> GroupElement:
    return GroupElement(np.conj(g.s), -g.t)


def kernel_in_fock(g: GroupElement) -> bool:
    _check_s(g)
    return abs(g.s) > abs(g.t)


def _require_fock(*gs: GroupElement):
    for g in gs:
        if not kernel_in_fock(g):
            raise NotInFock(f"|s| <= |t| for {g}")


def kernel_norm(g: GroupElement, w):
    """Closed-form F^2 norm of ``K_w^(s,t)``."""
    _require_fock(g)
    s, t = g.s, g.t
    D = abs(s) ** 2 - abs(t) ** 2
    w = np.asarray(w, dtype=complex)
    quad = t * (abs(t) ** 2 + 1 - abs(s) ** 2) / (2 * np.conj(s) * D)
    out = D ** -0.25 * np.exp(np.abs(w) ** 2 / (2 * D) + (quad * w**2).real)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class KernelComposition:
    """Result of ``int K^(g1)(z, w) K^(g2)(w, u) dlambda(w)``.

    Equal to ``sign * K^(params)(z, u) * extra(z, u)`` where ``params`` is the
    group product; ``extra`` is identically 1 when both factors are in SL.
    """

    params: GroupElement
    sign: int
    z_coeff: complex
    u_coeff: complex

    def extra(self, z, u):
        z = np.asarray(z, dtype=complex)
        u = np.asarray(u, dtype=complex)
        return np.exp(self.z_coeff * z**2 - self.u_coeff * np.conj(u) ** 2)

    def __call__(self, z, u):
        return self.sign * kernel_eval(self.params, z, u) * self.extra(z, u)


def kernel_compose(g1: GroupElement, g2: GroupElement) -> KernelComposition:
    _require_fock(g1, g2)
    s1, t1, s2, t2 = g1.s, g1.t, g2.s, g2.t
    s = s1 * s2 + np.conj(t1) * t2
    t = t1 * s2 + np.conj(s1) * t2
    sign = as_sign(principal_sqrt(s) / (principal_sqrt(s1) * principal_sqrt(s2))
                   * principal_sqrt(s1 * s2 / s))
    z_coeff = t2 * (abs(t1) ** 2 + 1 - abs(s1) ** 2) / (2 * s1 * s)
    u_coeff = np.conj(t1) * (abs(t2) ** 2 + 1 - abs(s2) ** 2) / (2 * s2 * s)
    return KernelComposition(GroupElement(s, t), sign, complex(z_coeff), complex(u_coeff))
