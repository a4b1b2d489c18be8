import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from numpy.polynomial import Polynomial

from fockcanon.errors import NonFiniteIntegrand, OscillationBudgetExceeded, SingularDet
from fockcanon.fock import QuadratureRule, fock_inner
from fockcanon.group import RealSymplecticMatrix as R
from fockcanon.group import cocycle, phi
from fockcanon.lct import (SampledRealFunction, WeightKind, bargmann, bargmann_sign,
                           composition_residual, composition_sign, conjugated_lct, frft,
                           hermite_gaussian, inverse_bargmann, lct_apply, lct_inverse_sign,
                           lct_norm_ratio, verify_conjugation, verify_frft_rotation)
from fockcanon.spectral import eigenfunction, inverse_bargmann_eigenfunction

gauss = lambda x: np.exp(-np.asarray(x) ** 2)
XS = np.linspace(-2, 2, 9)
ZS = np.array([0.3, -0.5j, 0.8 + 0.1j, -0.2 - 0.6j, 1.0, 0.1 + 0.9j, -1.1, 0.5 - 0.5j, 0.7j, -0.9 + 0.4j])


def test_identity_and_chirp():
    f = hermite_gaussian(3)
    assert np.allclose(lct_apply(R.identity(), f, XS), f(XS), atol=1e-15)
    tau = 0.6
    assert np.allclose(lct_apply(R.chirp(tau), f, XS), np.exp(1j * tau * XS**2) * f(XS), atol=1e-15)


def test_quarter_rotation_of_gaussian():
    v = lct_apply(R.rotation(math.pi / 2), gauss, XS)
    assert np.allclose(v, cmath.exp(-0.25j * math.pi) * np.exp(-XS**2), atol=1e-14)


# mpmath quadrature of the defining integral for exp(-t^2) at x = 0.8
@pytest.mark.parametrize("A,value", [
    (R.fresnel(0.7), 0.58905528452721951 - 0.0027637741654528606j),
    (R.rotation(math.pi / 3), 0.45664863444435655 - 0.26364621202152425j),
])
def test_lct_frozen(A, value):
    assert lct_apply(A, gauss, 0.8) == pytest.approx(value, abs=1e-14)


def test_frft_limits():
    f = hermite_gaussian(1)
    assert np.allclose(frft(0.0, f, XS), f(XS))
    assert np.allclose(frft(math.pi, f, XS), f(-XS))
    assert np.allclose(frft(-math.pi, f, XS), f(-XS))
    assert np.allclose(frft(math.pi / 2, gauss, XS), np.exp(-XS**2), atol=1e-14)
    with pytest.raises(ValueError):
        frft(4.0, f, XS)


def test_frft_is_fourier_at_quarter_turn():
    # kernel (1/sqrt(pi)) exp(-2ixt); for x exp(-x^2) the transform is -i x exp(-x^2)
    f = lambda x: np.asarray(x) * np.exp(-np.asarray(x) ** 2)
    assert np.allclose(frft(math.pi / 2, f, XS), -1j * XS * np.exp(-XS**2), atol=1e-14)


def test_hermite_gaussians_diagonalize_frft():
    alpha = 0.9
    for n in range(5):
        f = hermite_gaussian(n)
        assert np.allclose(frft(alpha, f, XS), np.exp(-1j * n * alpha) * f(XS), atol=1e-13)


def test_budget_and_det_guards():
    with pytest.raises(OscillationBudgetExceeded):
        lct_apply(R.fresnel(0.05), gauss, 0.0)
    with pytest.raises(SingularDet):
        lct_apply(R(1, 1, 1, 2.5), gauss, 0.0)
    coarse = SampledRealFunction.from_callable(gauss, 16)
    with pytest.raises(OscillationBudgetExceeded):
        lct_apply(R.fresnel(0.3), coarse, 5.0)


def test_sampled_function_validation():
    with pytest.raises(ValueError):
        SampledRealFunction(np.arange(5.0), np.ones(5), WeightKind.UNIFORM, np.ones(5))
    with pytest.raises(ValueError):
        SampledRealFunction(np.arange(20.0)[::-1], np.ones(20), WeightKind.UNIFORM, np.ones(20))
    with pytest.raises(NonFiniteIntegrand):
        SampledRealFunction(np.arange(20.0), np.full(20, np.nan), WeightKind.UNIFORM, np.ones(20))


def test_uniform_samples_and_interpolation():
    f = SampledRealFunction.uniform(gauss)
    assert f.integrate() == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    bare = SampledRealFunction(f.grid, f.values, WeightKind.UNIFORM, f.weights)
    # b = 0 transforms evaluate off-grid, through a cubic spline here
    got = lct_apply(R.dilation(1.3), bare, XS)
    assert np.allclose(got, math.sqrt(1.3) * np.exp(-(1.3 * XS) ** 2), atol=1e-6)
    got = lct_apply(R.fresnel(0.7), bare, XS)
    assert np.allclose(got, lct_apply(R.fresnel(0.7), gauss, XS), atol=1e-10)


def test_bargmann_examples():
    assert bargmann(gauss, 0.3 - 0.7j) == pytest.approx((math.pi / 2) ** 0.25, rel=1e-14)
    rule = QuadratureRule.gauss_hermite(40)
    B0 = lambda z: bargmann(hermite_gaussian(0), z)
    B1 = lambda z: bargmann(hermite_gaussian(1), z)
    assert abs(fock_inner(B0, B1, rule)) < 1e-14
    F = lambda z: np.asarray(z) ** 2
    back = lambda z: bargmann(lambda x: inverse_bargmann(F, x), z)
    sampled = SampledRealFunction.from_callable(lambda x: inverse_bargmann(F, x), 80)
    assert np.allclose(bargmann(sampled, ZS), ZS**2, atol=1e-9)


def test_bargmann_maps_hermite_gaussians_to_monomials():
    for n in range(6):
        got = bargmann(hermite_gaussian(n), ZS)
        assert np.allclose(got, ZS**n / math.sqrt(math.factorial(n)), atol=1e-13)
    # the saddle contour keeps large |Im z| accurate
    z = 6j
    assert bargmann(hermite_gaussian(2), z) == pytest.approx(z**2 / math.sqrt(2), rel=1e-12)


def test_sampled_and_callable_bargmann_agree():
    f = hermite_gaussian(3)
    s = SampledRealFunction.from_callable(f)
    assert np.allclose(bargmann(s, ZS), bargmann(f, ZS), atol=1e-13)


def test_inverse_bargmann_examples():
    one = lambda z: np.ones_like(z)
    xs = np.linspace(-2, 2, 7)
    assert np.allclose(inverse_bargmann(one, xs), hermite_gaussian(0)(xs), atol=1e-12)
    F, G = (lambda z: z**3), (lambda z: np.exp(0.3 * z))
    a, b = 0.4 - 1j, 2.0
    lhs = inverse_bargmann(lambda z: a * F(z) + b * G(z), xs)
    assert np.allclose(lhs, a * inverse_bargmann(F, xs) + b * inverse_bargmann(G, xs), atol=1e-12)


def test_inverse_bargmann_of_rotation_eigenfunction():
    from fockcanon.group import GroupElement
    g = GroupElement(cmath.exp(0.9j), 0)
    for n in range(4):
        xs = np.linspace(-2, 2, 9)
        got = inverse_bargmann(eigenfunction(g, n), xs)
        ref = inverse_bargmann_eigenfunction(g, n)(xs)
        ratio = got[np.abs(ref) > 1e-3] / ref[np.abs(ref) > 1e-3]
        assert np.allclose(ratio, ratio[0], rtol=1e-9)


@pytest.mark.parametrize("A,sign", [
    (R.identity(), 1), (R.rotation(0.4), 1), (R.rotation(-2.9), 1), (R.rotation(2.9), 1),
    (R(-1, 0, 0, -1), -1), (R(-1, 0, -1, -1), -1), (R.dilation(1.5), 1), (R.fresnel(-0.7), 1),
])
def test_bargmann_sign(A, sign):
    assert bargmann_sign(A) == sign


@pytest.mark.parametrize("A,sign", [
    (R.identity(), 1), (R(-1, 0, -1, -1), -1), (R(0, 1, -1, 0), 1), (R(-2, 0.5, 0, -0.5), 1),
])
def test_lct_inverse_sign(A, sign):
    assert lct_inverse_sign(A) == sign


def test_inverse_sign_realized():
    A = R(-1, 0, -1, -1)
    f = hermite_gaussian(2)
    once = lambda x: lct_apply(A, f, x)
    back = lct_apply(A.inverse(), once, XS)
    assert np.allclose(back, lct_inverse_sign(A) * f(XS))


def test_conjugation_examples():
    zs = ZS
    assert verify_conjugation(R.identity(), Polynomial([0.3, 1j, 2]), zs) < 1e-12
    alpha = 0.8
    assert verify_frft_rotation(alpha, Polynomial([0, 0, 0, 1]), zs) < 1e-10
    r = 1.5
    got = conjugated_lct(R.dilation(r), Polynomial([1.0]), zs)
    expected = math.sqrt(2 * r / (1 + r * r)) * np.exp((1 - r * r) * zs**2 / (2 * (1 + r * r)))
    assert np.allclose(got, expected, atol=1e-10)


@pytest.mark.parametrize("A", [R.rotation(2.5), R(-1, 0, 0, -1), R(-1, 0, -0.4, -1), R.fresnel(-0.6)])
def test_conjugation_includes_sign(A):
    f = Polynomial([0.5, -0.2j, 0.3, 1.0])
    assert verify_conjugation(A, f, ZS) < 1e-8


def test_composition_with_sign():
    pairs = [(R.rotation(0.5), R.rotation(0.9)), (R.rotation(2.5), R.rotation(2.0)),
             (R.chirp(0.5), R.dilation(1.4)), (R.rotation(-2.8), R.rotation(-1.5)),
             (R.dilation(0.8), R.chirp(-0.3))]
    for A1, A2 in pairs:
        err, c = composition_residual(A1, A2, hermite_gaussian(2), XS)
        assert err < 1e-5
        assert abs(c - composition_sign(A1, A2)) < 1e-6
        predicted = (cocycle(phi(A1), phi(A2)) * bargmann_sign(A1) * bargmann_sign(A2)
                     * bargmann_sign(A1 @ A2))
        assert predicted == composition_sign(A1, A2)


@pytest.mark.parametrize("A", [R.rotation(0.4), R.dilation(1.3), R.fresnel(0.5), R.chirp(0.5)])
def test_unitarity(A):
    for n in range(5):
        assert lct_norm_ratio(A, hermite_gaussian(n)) == pytest.approx(1, abs=1e-5)


def test_round_trip():
    xs = np.linspace(-3, 3, 13)
    for n in range(5):
        f = hermite_gaussian(n)
        back = inverse_bargmann(lambda z: bargmann(f, z), xs)
        assert np.max(np.abs(back - f(xs))) < 1e-6


angle = st.floats(0.7, 1.4) | st.floats(-1.4, -0.7)


@settings(max_examples=15, deadline=None)
@given(angle, angle)
def test_frft_additive_up_to_phase(a, b):
    # the nested transform samples far out on the line; small |sin| would need too many nodes
    assume(abs(math.sin(a + b)) > 0.6)
    f = hermite_gaussian(1)
    xs = np.linspace(-1.5, 1.5, 7)
    inner = lambda x: frft(b, f, x)
    lhs = np.asarray(frft(a, inner, xs))
    rhs = np.asarray(frft(a + b, f, xs))
    c = np.vdot(rhs, lhs) / np.vdot(rhs, rhs)
    assert abs(abs(c) - 1) < 1e-6
    assert np.max(np.abs(lhs - c * rhs)) < 1e-6
