import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockcanon.errors import NonFiniteIntegrand
from fockcanon.fock import (QuadratureRule, TruncatedFockVector, basis_values, compensated_sum,
                            default_nodes, fock_inner, fock_norm, integrate_gaussian_C,
                            integrate_gaussian_C_many, integrate_gaussian_line, monomial,
                            principal_sqrt, reproducing_kernel)

RULE = QuadratureRule.gauss_hermite(48)


@pytest.mark.parametrize("z,root", [
    (4, 2),
    (-1, 1j),
    (-1 - 0j, 1j),
    (complex(-1, -0.0), 1j),
    (-1j, cmath.exp(-0.25j * math.pi)),
    (1j, cmath.exp(0.25j * math.pi)),
])
def test_principal_sqrt(z, root):
    assert abs(principal_sqrt(z) - root) < 1e-15


def test_principal_sqrt_vectorized():
    out = principal_sqrt(np.array([-4.0, 9.0, -1j]))
    assert np.allclose(out, [2j, 3, cmath.exp(-0.25j * math.pi)])


@settings(max_examples=100, deadline=None)
@given(st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False))
def test_principal_sqrt_half_plane(z):
    r = principal_sqrt(z)
    assert abs(r * r - z) <= 1e-12 * max(1.0, abs(z))
    assert r.real > 0 or (r.real == 0 and r.imag >= 0)


def test_default_nodes_env(monkeypatch):
    monkeypatch.delenv("FOCKCANON_NODES", raising=False)
    assert default_nodes() == 64
    monkeypatch.setenv("FOCKCANON_NODES", "20")
    assert default_nodes() == 20
    assert QuadratureRule.gauss_hermite().size == 20


def test_measure_is_probability():
    assert integrate_gaussian_C(lambda z: np.ones_like(z), RULE) == pytest.approx(1, abs=1e-14)
    assert integrate_gaussian_C(lambda z: np.abs(z) ** 2, RULE) == pytest.approx(1, abs=1e-13)


def test_gaussian_identity():
    gam, dlt, a, b = 0.3, 0.2j, 1.0, 0.5
    db, bb = np.conj(dlt), np.conj(b)

    def g(w):
        wb = np.conj(w)
        return np.exp(gam / 2 * w**2 + a * w + db / 2 * wb**2 + bb * wb)

    d = 1 - gam * db
    closed = np.exp((db * a**2 + gam * bb**2 + 2 * a * bb) / (2 * d)) / principal_sqrt(d)
    assert abs(integrate_gaussian_C(g, QuadratureRule.gauss_hermite(64)) - closed) < 1e-12


def test_nonfinite_integrand():
    with pytest.raises(NonFiniteIntegrand):
        integrate_gaussian_C(lambda z: np.where(np.abs(z) > 1, np.inf, 1.0), RULE)


def test_monomials_orthonormal():
    gram = np.array([[fock_inner(monomial(m), monomial(n), RULE) for n in range(11)]
                     for m in range(11)])
    assert np.max(np.abs(gram - np.eye(11))) < 1e-12


def test_reproducing_kernel_examples():
    u, v = 0.4 - 0.3j, -0.2 + 0.9j
    assert fock_inner(reproducing_kernel(u), reproducing_kernel(v), RULE) == pytest.approx(
        np.exp(v * np.conj(u)), abs=1e-12)
    assert np.allclose(reproducing_kernel(0)(np.array([1 + 1j, 3])), 1)
    assert fock_inner(lambda z: z**2, reproducing_kernel(1), RULE) == pytest.approx(1, abs=1e-12)
    assert fock_norm(reproducing_kernel(u), RULE) ** 2 == pytest.approx(np.exp(abs(u) ** 2))
    assert fock_inner(lambda z: np.ones_like(z), lambda z: np.ones_like(z), RULE) == pytest.approx(1)


def test_reproducing_property_for_polynomial():
    f = np.polynomial.Polynomial([1, -2j, 0.5, 0.25])
    u = 0.7 + 0.2j
    assert fock_inner(f, reproducing_kernel(u), RULE) == pytest.approx(f(u), abs=1e-12)


def test_many_matches_single():
    params = np.array([0.1, 0.5j, -0.3 + 0.2j])
    many = integrate_gaussian_C_many(lambda p, w: np.exp(p * np.conj(w)) * w, params, RULE)
    for p, v in zip(params, many):
        assert v == pytest.approx(integrate_gaussian_C(lambda w: np.exp(p * np.conj(w)) * w, RULE))


def test_rule_helpers():
    r = QuadratureRule.gauss_hermite(10, radius=2.0)
    z, w = r.planar()
    assert np.all(np.abs(z) <= 2.0) and z.size < 100
    assert r.doubled().size == 20
    assert r.doubled().truncation_radius == 2.0
    with pytest.raises(ValueError):
        QuadratureRule.gauss_hermite(1)


def test_scaled_rule_integrates_same():
    f = lambda z: np.abs(z) ** 4
    assert integrate_gaussian_C(f, QuadratureRule.gauss_hermite(30, scale=0.8)) == pytest.approx(2)


def test_line_integral_centering():
    mu, c = 1.5 - 0.7j, 0.8 + 1.1j
    val = integrate_gaussian_line(lambda x: np.ones_like(x), mu, c)
    assert abs(val - principal_sqrt(math.pi / mu)) < 1e-13


def test_compensated_sum_order_free():
    vals = np.array([1e16, 1.0, -1e16, 1j])
    assert compensated_sum(vals) == 1 + 1j


def test_truncated_vector():
    v = TruncatedFockVector(np.array([1, 2j, 0.5]))
    assert v.norm() == pytest.approx(math.sqrt(5.25))
    assert v(0.5) == pytest.approx(1 + 2j * 0.5 + 0.5 * 0.25 / math.sqrt(2))
    w = TruncatedFockVector.from_json(v.to_json())
    assert np.array_equal(w.coeffs, v.coeffs)
    assert v.inner(TruncatedFockVector([1])) == 1
    assert np.allclose(basis_values(np.array([2.0]), 3), [[1, 2, 4 / math.sqrt(2)]])
