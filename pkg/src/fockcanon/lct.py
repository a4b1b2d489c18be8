"""Linear canonical transforms on L^2(R) and the Bargmann bridge to F^2.

For ``A = [[a, b], [c, d]]`` with ``det A = 1``:

* ``b != 0``: ``F^A f(x) = (i pi b)^(-1/2) exp(i d x^2 / b) int exp(-i (2 x t - a t^2) / b) f(t) dt``
* ``b = 0``:  ``F^A f(x) = sqrt(d) exp(i c d x^2) f(d x)``

and ``B F^A B^{-1} = C_A T^(phi(A))`` on F^2 with a sign ``C_A``.
Integrals over R use Gauss-Hermite nodes, which suits the Gaussian-envelope
functions (Hermite-Gaussians, Bargmann preimages of polynomials) used here.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numpy.polynomial import Polynomial
from scipy.interpolate import CubicSpline

from .errors import NonFiniteIntegrand, OscillationBudgetExceeded, SingularDet
from .fock import QuadratureRule, compensated_sum, line_rule, principal_sqrt
from .group import RealSymplecticMatrix, as_sign, cocycle, phi
from .hermite import hermite
from .operators import apply

BARGMANN_C = (2 / math.pi) ** 0.25
OSCILLATION_BUDGET = 8.0
LINE_NODES = 120
MAX_LINE_NODES = 6000
ENVELOPE = 4.0


class WeightKind(enum.Enum):
    GAUSS_HERMITE = "GaussHermite"
    UNIFORM = "Uniform"


@dataclass(frozen=True, eq=False)
class SampledRealFunction:
    """Samples of ``f`` on a grid plus weights with ``int f dx ~ sum(weights * values)``.

    ``source`` keeps the generating callable when there is one, so that
    evaluation off the grid (the ``b = 0`` transforms) need not interpolate.
    """

    grid: np.ndarray
    values: np.ndarray
    weight_kind: WeightKind
    weights: np.ndarray
    source: Callable | None = field(default=None, repr=False)

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        if grid.ndim != 1 or grid.size < 16 or values.shape != grid.shape:
            raise ValueError("grid and values must be 1-D with the same length >= 16")
        if np.any(np.diff(grid) <= 0):
            raise ValueError("grid must be strictly increasing")
        if not np.all(np.isfinite(values)):
            raise NonFiniteIntegrand("sampled values are not finite")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float))

    @classmethod
    def from_callable(cls, f: Callable, n: int = LINE_NODES, scale: float = 1.0):
        x, w = line_rule(n, scale)
        return cls(x, np.asarray(f(x), dtype=complex) * np.ones_like(x), WeightKind.GAUSS_HERMITE, w, f)

    @classmethod
    def uniform(cls, f: Callable, lo: float = -8.0, hi: float = 8.0, n: int = 801):
        x = np.linspace(lo, hi, n)
        w = np.full(n, (hi - lo) / (n - 1))
        w[[0, -1]] *= 0.5
        return cls(x, np.asarray(f(x), dtype=complex) * np.ones_like(x), WeightKind.UNIFORM, w, f)

    def __len__(self) -> int:
        return self.grid.size

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.source is not None:
            return np.asarray(self.source(x), dtype=complex) * np.ones_like(x)
        re = CubicSpline(self.grid, self.values.real, extrapolate=False)(x)
        im = CubicSpline(self.grid, self.values.imag, extrapolate=False)(x)
        return np.nan_to_num(re) + 1j * np.nan_to_num(im)

    def integrate(self, h=None) -> complex:
        """``int f(x) h(x) dx``."""
        vals = self.values if h is None else self.values * np.asarray(h(self.grid), dtype=complex)
        return compensated_sum(self.weights * vals)

    def inner(self, other: "SampledRealFunction") -> complex:
        """``<self, other>`` in L^2(R), assuming matching grids."""
        if not np.array_equal(self.grid, other.grid):
            raise ValueError("grids differ")
        return compensated_sum(self.weights * self.values * np.conj(other.values))

    def norm(self) -> float:
        return math.sqrt(max(self.inner(self).real, 0.0))


def _as_sampled(f) -> SampledRealFunction:
    return f if isinstance(f, SampledRealFunction) else SampledRealFunction.from_callable(f)


def _check_det(A: RealSymplecticMatrix):
    if not A.in_sl():
        raise SingularDet(f"det A = {A.det()} is not 1")


def _check_oscillation(A: RealSymplecticMatrix):
    if A.b != 0 and max(abs(1 / A.b), abs(A.a / A.b)) > OSCILLATION_BUDGET:
        raise OscillationBudgetExceeded(
            f"|1/b| or |a/b| exceeds {OSCILLATION_BUDGET} for b = {A.b}")


def resolvable_frequency(f: SampledRealFunction) -> float:
    """Largest ``omega`` for which ``sum w f exp(-i omega t)`` is still accurate."""
    if f.weight_kind is WeightKind.GAUSS_HERMITE:
        return 1.5 * math.sqrt(len(f))
    return math.pi / (2 * float(np.max(np.diff(f.grid))))


def _phase_frequency(A: RealSymplecticMatrix, xmax: float) -> float:
    # t-frequency of exp(-i (2 x t - a t^2) / b) over the bulk |t| <= ENVELOPE
    return (2 * xmax + 2 * abs(A.a) * ENVELOPE) / abs(A.b)


def lct_apply(A: RealSymplecticMatrix, f, x):
    """``F^A f`` at ``x``; ``f`` is a callable or a :class:`SampledRealFunction`.

    For ``b != 0`` the t-integral is a Gauss-Hermite sum.  A callable is
    sampled on enough nodes to resolve the phase at every requested ``x``;
    a sampled input whose grid is too coarse raises
    :class:`OscillationBudgetExceeded` instead of returning aliased values.
    """
    _check_det(A)
    _check_oscillation(A)
    x = np.asarray(x, dtype=float)
    a, b, c, d = A.a, A.b, A.c, A.d
    if b == 0:
        out = principal_sqrt(d) * np.exp(1j * c * d * x**2) * np.asarray(f(d * x), dtype=complex)
        return complex(out) if np.ndim(out) == 0 else out
    xs = np.atleast_1d(x)
    omega = _phase_frequency(A, float(np.max(np.abs(xs))))
    if isinstance(f, SampledRealFunction):
        if omega > resolvable_frequency(f):
            raise OscillationBudgetExceeded(
                f"phase frequency {omega:.3g} exceeds the grid limit {resolvable_frequency(f):.3g}")
        fs = f
    else:
        n = max(LINE_NODES, int(math.ceil((omega / 1.5) ** 2)))
        if n > MAX_LINE_NODES:
            raise OscillationBudgetExceeded(f"would need {n} nodes (limit {MAX_LINE_NODES})")
        fs = SampledRealFunction.from_callable(f, n)
    t = fs.grid
    wf = fs.weights * fs.values * np.exp(1j * a * t**2 / b)
    phases = np.exp(-2j * np.outer(xs, t) / b)
    integral = np.array([compensated_sum(row) for row in phases * wf])
    out = np.exp(1j * d * xs**2 / b) * integral / principal_sqrt(1j * math.pi * b)
    out = out.reshape(x.shape)
    return complex(out) if np.ndim(out) == 0 else out


def frft(alpha: float, f, x):
    """Fractional Fourier transform ``F^alpha = exp(i alpha / 2) F^(A_alpha)``.

    ``alpha = 0`` is the identity and ``alpha = +-pi`` the parity map ``f(-x)``.
    """
    if not -math.pi <= alpha <= math.pi:
        raise ValueError("alpha must lie in [-pi, pi]")
    x = np.asarray(x, dtype=float)
    if alpha == 0:
        out = np.asarray(f(x), dtype=complex)
    elif abs(alpha) == math.pi:
        out = np.asarray(f(-x), dtype=complex)
    else:
        out = np.exp(0.5j * alpha) * np.asarray(lct_apply(RealSymplecticMatrix.rotation(alpha), f, x))
    return complex(out) if np.ndim(out) == 0 else out


def hermite_gaussian(n: int) -> Callable:
    """Orthonormal ``(2/pi)^(1/4) exp(-x^2) H_n(sqrt2 x) / sqrt(2^n n!)``; its Bargmann image is ``e_n``."""
    H = hermite(n)
    c = BARGMANN_C / math.sqrt(2.0**n * math.factorial(n))

    def phi_n(x):
        x = np.asarray(x)
        return c * np.exp(-x**2) * H(math.sqrt(2) * x)

    return phi_n


def bargmann(f, z, n: int = LINE_NODES):
    """``Bf(z) = (2/pi)^(1/4) int f(x) exp(2 x z - x^2 - z^2/2) dx``.

    A callable ``f`` is taken to be entire with Gaussian decay, and the line
    is moved to pass through the saddle ``x = z/2``:
    ``Bf(z) = (2/pi)^(1/4) int f(u + z/2) exp(-u^2 + u z + z^2/4) du``.
    This avoids the ``exp(|Im z|^2/2)`` cancellation of the real-line sum.
    Sampled input has no analytic continuation and uses the real line.
    """
    zz = np.atleast_1d(np.asarray(z, dtype=complex))
    if isinstance(f, SampledRealFunction):
        x, wf = f.grid, f.weights * f.values
        kern = np.exp(2 * np.outer(zz, x) - x**2 - (zz**2 / 2)[:, None])
        terms = kern * wf
    else:
        u, w = line_rule(n)
        pts = u[None, :] + zz[:, None] / 2
        fv = np.asarray(f(pts), dtype=complex) * np.ones(pts.shape)
        terms = fv * w * np.exp(-u**2 + np.outer(zz, u) + (zz**2 / 4)[:, None])
    out = BARGMANN_C * np.array([compensated_sum(row) for row in terms])
    if not np.all(np.isfinite(out)):
        raise NonFiniteIntegrand("Bargmann integral overflowed")
    out = out.reshape(np.shape(z))
    return complex(out) if np.ndim(out) == 0 else out


def bargmann_rule(n: int = 48) -> QuadratureRule:
    # scale sqrt(2) flattens the exp(|Im z|^2 / 2) growth of the inverse kernel
    return QuadratureRule.gauss_hermite(n, scale=math.sqrt(2))


def inverse_bargmann(F: Callable, x, rule: QuadratureRule | None = None):
    """``B^{-1}F(x) = (2/pi)^(1/4) int F(z) exp(2 x conj z - x^2 - conj(z)^2/2) dlambda(z)``."""
    rule = bargmann_rule() if rule is None else rule
    z, w = rule.planar()
    Fz = np.asarray(F(z), dtype=complex) * np.ones_like(z)
    if not np.all(np.isfinite(Fz)):
        raise NonFiniteIntegrand("F is not finite at some quadrature node")
    zb = np.conj(z)
    base = Fz * w * np.exp(-zb**2 / 2)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    kern = np.exp(2 * np.outer(xs, zb) - (xs**2)[:, None])
    out = BARGMANN_C * np.array([compensated_sum(row) for row in kern * base])
    out = out.reshape(np.shape(x))
    return complex(out) if np.ndim(out) == 0 else out


def bargmann_sign(A: RealSymplecticMatrix) -> int:
    """``C_A`` in ``B F^A B^{-1} = C_A T^(phi(A))``."""
    _check_det(A)
    g = phi(A)
    s, t = g.s, g.t
    if A.b != 0:
        v = principal_sqrt(2j * A.b)
        value = principal_sqrt(s) / v * principal_sqrt(2j * A.b / s)
    else:
        value = principal_sqrt(s) * principal_sqrt(1 / (s + t)) * principal_sqrt((s + t) / s)
    return as_sign(value)


def lct_inverse_sign(A: RealSymplecticMatrix) -> int:
    """``(F^A)^{-1} = sign * F^(A^{-1})``: the sign is -1 only for ``a < 0, b = 0``."""
    return -1 if (A.a < 0 and A.b == 0) else 1


def _poly_callable(f) -> Callable:
    if isinstance(f, Polynomial):
        return lambda z: f(np.asarray(z, dtype=complex))
    return f


def conjugated_lct(A: RealSymplecticMatrix, f, zs, rule: QuadratureRule | None = None,
                   n_line: int = LINE_NODES) -> np.ndarray:
    """``B F^A B^{-1} f`` at ``zs``, each step by quadrature."""
    _check_det(A)
    F = _poly_callable(f)
    rule = bargmann_rule() if rule is None else rule

    def pre(x):
        return inverse_bargmann(F, x, rule)

    t, wt = line_rule(n_line)
    image = SampledRealFunction(t, lct_apply(A, pre, t), WeightKind.GAUSS_HERMITE, wt)
    return np.asarray(bargmann(image, np.asarray(zs, dtype=complex)))


def verify_conjugation(A: RealSymplecticMatrix, f, zs, rule: QuadratureRule | None = None) -> float:
    """``max |B F^A B^{-1} f - C_A T^(phi(A)) f| / (1 + |T^(phi(A)) f|)`` over ``zs``."""
    zs = np.asarray(zs, dtype=complex)
    lhs = conjugated_lct(A, f, zs, rule)
    rhs = np.asarray(apply(phi(A), _poly_callable(f), zs))
    return float(np.max(np.abs(lhs - bargmann_sign(A) * rhs) / (1 + np.abs(rhs))))


def verify_frft_rotation(alpha: float, f, zs, rule: QuadratureRule | None = None) -> float:
    """``max |B F^alpha B^{-1} f(z) - f(exp(-i alpha) z)|`` over ``zs``."""
    zs = np.asarray(zs, dtype=complex)
    F = _poly_callable(f)
    lhs = np.exp(0.5j * alpha) * conjugated_lct(RealSymplecticMatrix.rotation(alpha), F, zs, rule)
    rhs = np.asarray(F(np.exp(-1j * alpha) * zs))
    return float(np.max(np.abs(lhs - rhs)))


def lct_sampled(A: RealSymplecticMatrix, f, n: int = LINE_NODES, scale: float = 1.0) -> SampledRealFunction:
    """``F^A f`` sampled on a Gauss-Hermite line rule."""
    x, w = line_rule(n, scale)
    return SampledRealFunction(x, lct_apply(A, f, x), WeightKind.GAUSS_HERMITE, w)


def composition_sign(A1: RealSymplecticMatrix, A2: RealSymplecticMatrix) -> int:
    """Predicted sign in ``F^A1 F^A2 = sign F^(A1 A2)``."""
    A12 = A1 @ A2
    return (cocycle(phi(A1), phi(A2)) * bargmann_sign(A1) * bargmann_sign(A2)
            * bargmann_sign(A12))


def composition_residual(A1: RealSymplecticMatrix, A2: RealSymplecticMatrix, f,
                         xs) -> tuple[float, complex]:
    """Compose numerically and compare with ``F^(A1 A2)``.

    Returns ``(max |F^A1 F^A2 f - c F^(A1 A2) f|, c)`` where ``c`` is the
    least-squares constant; for a true identity ``c`` is ``+-1``.
    """
    xs = np.asarray(xs, dtype=float)
    def inner(t):
        return lct_apply(A2, f, t)

    lhs = np.asarray(lct_apply(A1, inner, xs))
    rhs = np.asarray(lct_apply(A1 @ A2, f, xs))
    c = complex(np.vdot(rhs, lhs) / np.vdot(rhs, rhs))
    return float(np.max(np.abs(lhs - c * rhs))), c


def lct_norm_ratio(A: RealSymplecticMatrix, f, n: int = 80, scale: float = 1.0) -> float:
    """``||F^A f|| / ||f||`` with both norms on Gauss-Hermite line rules."""
    x, w = line_rule(n, scale)
    image = np.asarray(lct_apply(A, f, x))
    fx = np.asarray(f(x), dtype=complex)
    return math.sqrt(compensated_sum(w * np.abs(image) ** 2).real
                     / compensated_sum(w * np.abs(fx) ** 2).real)
