"""The groups GL(C x C) and SL(C x C) and their link to 2x2 real matrices.

A pair ``(s, t)`` with ``|s| != |t|`` stands for the real matrix
``phi^{-1}(s, t)``; the product is
``(s1, t1) . (s2, t2) = (s1 s2 + conj(t1) t2, t1 s2 + conj(s1) t2)``
and ``|s|^2 - |t|^2`` plays the role of the determinant.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import BranchFailure, DegenerateElement, SingularMatrix
from .fock import principal_sqrt

TOL_GROUP = 1e-12


@dataclass(frozen=True)
class GroupElement:
    """A complex pair ``(s, t)``.

    Construction does not check membership, because kernels are also defined
    for pairs outside GL(C x C) (e.g. ``|s| = |t|``).  Use :meth:`gl` or
    :meth:`sl` for validated construction; group operations validate their
    inputs themselves.
    """

    s: complex
    t: complex

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "t", complex(self.t))

    @classmethod
    def gl(cls, s, t, tol: float = TOL_GROUP) -> "GroupElement":
        g = cls(s, t)
        if not g.in_gl(tol):
            raise DegenerateElement(f"|s| = |t| for {g}")
        return g

    @classmethod
    def sl(cls, s, t, tol: float = TOL_GROUP) -> "GroupElement":
        g = cls(s, t)
        if not g.in_sl(tol):
            raise DegenerateElement(f"|s|^2 - |t|^2 = {g.det()} is not 1")
        return g

    @classmethod
    def sl_from(cls, t: complex, phase: float) -> "GroupElement":
        """SL element with the given ``t`` and ``arg s = phase``."""
        r = math.sqrt(1.0 + abs(t) ** 2)
        return cls(r * np.exp(1j * phase), t)

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(1.0, 0.0)

    def det(self) -> float:
        return abs(self.s) ** 2 - abs(self.t) ** 2

    def in_gl(self, tol: float = TOL_GROUP) -> bool:
        return abs(abs(self.s) - abs(self.t)) > tol

    def in_sl(self, tol: float = TOL_GROUP) -> bool:
        return abs(self.det() - 1.0) <= tol

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return compose(self, other)

    def to_dict(self) -> dict:
        return {"s": [self.s.real, self.s.imag], "t": [self.t.real, self.t.imag]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "GroupElement":
        return cls(complex(*d["s"]), complex(*d["t"]))

    @classmethod
    def from_json(cls, text: str) -> "GroupElement":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class RealSymplecticMatrix:
    """Real 2x2 matrix ``[[a, b], [c, d]]``."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_array(cls, arr) -> "RealSymplecticMatrix":
        arr = np.asarray(arr, dtype=float)
        return cls(arr[0, 0], arr[0, 1], arr[1, 0], arr[1, 1])

    @classmethod
    def identity(cls) -> "RealSymplecticMatrix":
        return cls(1, 0, 0, 1)

    @classmethod
    def rotation(cls, alpha: float) -> "RealSymplecticMatrix":
        """``A_alpha``; its transform is the fractional Fourier transform up to phase."""
        c, s = math.cos(alpha), math.sin(alpha)
        return cls(c, s, -s, c)

    @classmethod
    def dilation(cls, r: float) -> "RealSymplecticMatrix":
        """``diag(1/r, r)``, i.e. ``f(x) -> sqrt(r) f(r x)``."""
        return cls(1.0 / r, 0.0, 0.0, r)

    @classmethod
    def fresnel(cls, b: float) -> "RealSymplecticMatrix":
        return cls(1.0, b, 0.0, 1.0)

    @classmethod
    def chirp(cls, tau: float) -> "RealSymplecticMatrix":
        return cls(1.0, 0.0, tau, 1.0)

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def in_sl(self, tol: float = TOL_GROUP) -> bool:
        return abs(self.det() - 1.0) <= tol

    def __matmul__(self, other: "RealSymplecticMatrix") -> "RealSymplecticMatrix":
        return RealSymplecticMatrix.from_array(self.as_array() @ other.as_array())

    def inverse(self) -> "RealSymplecticMatrix":
        det = self.det()
        if abs(det) <= TOL_GROUP:
            raise SingularMatrix("determinant vanishes")
        return RealSymplecticMatrix(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}

    @classmethod
    def from_dict(cls, d: dict) -> "RealSymplecticMatrix":
        return cls(d["a"], d["b"], d["c"], d["d"])


def _check_gl(g: GroupElement, tol: float = TOL_GROUP):
    if not g.in_gl(tol):
        raise DegenerateElement(f"{g} is not in GL(C x C): |s| = |t|")


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    _check_gl(g1)
    _check_gl(g2)
    s = g1.s * g2.s + np.conj(g1.t) * g2.t
    t = g1.t * g2.s + np.conj(g1.s) * g2.t
    return GroupElement(s, t)


def inverse(g: GroupElement) -> GroupElement:
    _check_gl(g)
    det = g.det()
    return GroupElement(np.conj(g.s) / det, -g.t / det)


def phi(A: RealSymplecticMatrix) -> GroupElement:
    """Isomorphism GL(2, R) -> GL(C x C)."""
    if abs(A.det()) <= TOL_GROUP:
        raise SingularMatrix(f"det {A.det()} vanishes")
    s = complex(A.a + A.d, A.b - A.c) / 2
    t = complex(A.a - A.d, A.b + A.c) / 2
    return GroupElement(s, t)


def phi_inverse(g: GroupElement) -> RealSymplecticMatrix:
    _check_gl(g)
    p, m = g.s + g.t, g.s - g.t
    return RealSymplecticMatrix(p.real, p.imag, -m.imag, m.real)


def as_sign(value: complex, tol: float = TOL_GROUP) -> int:
    """Round a computed ``+-1`` to an int, refusing anything else."""
    if abs(value - 1) < tol:
        return 1
    if abs(value + 1) < tol:
        return -1
    raise BranchFailure(f"expected +1 or -1, got {value!r}")


def cocycle(g1: GroupElement, g2: GroupElement) -> int:
    """Sign ``C`` with ``T^{g1} T^{g2} = C T^{g1 g2}`` on SL(C x C)."""
    for g in (g1, g2):
        if not g.in_sl():
            raise DegenerateElement(f"{g} is not in SL(C x C)")
    prod = g1.s * g2.s
    s = prod + np.conj(g1.t) * g2.t
    value = (principal_sqrt(s) / (principal_sqrt(g1.s) * principal_sqrt(g2.s))
             * principal_sqrt(prod / s))
    return as_sign(value)
