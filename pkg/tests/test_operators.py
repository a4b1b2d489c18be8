import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockcanon.errors import (DomainViolation, NotHilbertSchmidt, NotInFock, NotUnitary,
                              TruncationTooLarge)
from fockcanon.fock import QuadratureRule, TruncatedFockVector, monomial, reproducing_kernel
from fockcanon.group import GroupElement, inverse
from fockcanon.kernel import kernel_eval
from fockcanon.operators import (CanonicalOperator, OperatorClass, adjoint_params, apply,
                                 apply_to_basis, classify, compose_operators, hs_norm_sq,
                                 hs_norm_sq_quadrature, matrix, maximizing_direction,
                                 unboundedness_ratios)

# <T e_n, e_m> from the double Taylor expansion of T K_u, 40-digit mpmath
ORACLE = {
    "hs": ((2, 1), {
        (0, 0): 0.70710678118654752, (2, 0): 0.25, (1, 1): 0.35355339059327376,
        (3, 1): 0.21650635094610966, (4, 2): 0.11481983169296147,
        (10, 4): 0.012866118284177773, (7, 7): 0.0079411406090286099, (0, 2): -0.25}),
    "generic": ((1.25 + 0.75j, 0.5 - 0.6j), {
        (0, 0): 0.79819472395139346 - 0.22108713944097731j,
        (2, 0): -0.03628338099811536 - 0.31167913058028137j,
        (1, 1): 0.39149555310988651 - 0.41176704341871376j,
        (3, 1): -0.2275006548549883 - 0.29537487894616054j,
        (4, 2): -0.28534248546312998 - 0.11201081105972263j,
        (10, 4): 0.11721748765536424 - 0.049301286802384831j,
        (7, 7): 0.03691021179066632 - 0.047632704082378603j,
        (0, 2): -0.31311254140649428 - 0.020515861909773323j}),
    "sl": (None, {
        (0, 0): 0.85456293730794917 - 0.17322848336608984j,
        (2, 0): 0.3889118918797053 - 0.095680121203584092j,
        (1, 1): 0.54713690429436075 - 0.37431649542989796j,
        (3, 1): 0.42264684794845551 - 0.31548743481224402j,
        (4, 2): 0.23418432980470867 - 0.40008563753049237j,
        (10, 4): -0.10563860429903654 - 0.28682064279378369j,
        (7, 7): 0.066122364365824731 + 0.0094255144602461155j,
        (0, 2): -0.2301028525426268 + 0.32781065036195861j}),
}
SL_CASE = GroupElement.sl_from(0.8 + 0.3j, 0.4)


@pytest.mark.parametrize("name", sorted(ORACLE))
def test_matrix_entries_frozen(name):
    params, entries = ORACLE[name]
    g = SL_CASE if params is None else GroupElement(*params)
    M = matrix(g, 12)
    for (m, n), value in entries.items():
        assert abs(M[m, n] - value) < 1e-14, (m, n)


def test_quadrature_matrix_agrees():
    g = GroupElement(2, 1)
    Mc = matrix(g, 10)
    Mq = matrix(g, 10, "quadrature", QuadratureRule.gauss_hermite(40))
    assert np.max(np.abs(Mc - Mq)) < 1e-12


@pytest.mark.parametrize("g,kind", [
    ((1, 0), OperatorClass.UNITARY),
    ((2, 1), OperatorClass.HILBERT_SCHMIDT),
    ((1, 0.5), OperatorClass.UNBOUNDED),
    ((math.sqrt(2), 1j), OperatorClass.UNITARY),
])
def test_classify(g, kind):
    assert classify(GroupElement(*g)) is kind


def test_domain_violation():
    with pytest.raises(DomainViolation):
        classify(GroupElement(1, 2.5))
    with pytest.raises(DomainViolation):
        apply(GroupElement(1, 0.5), lambda z: z, 0.1)


@pytest.mark.parametrize("g,value", [((2, 0), 2 / 3), ((2, 1), 1.0), ((3, 2j), 0.75),
                                     ((math.sqrt(2), 0), math.sqrt(2))])
def test_hs_norm(g, value):
    g = GroupElement(*g)
    assert hs_norm_sq(g) == pytest.approx(value, rel=1e-14)
    assert hs_norm_sq_quadrature(g) == pytest.approx(value, rel=1e-9)


def test_hs_norm_rejects_unitary():
    with pytest.raises(NotHilbertSchmidt):
        hs_norm_sq(GroupElement(1, 0))


def test_matrix_hs_sum():
    assert np.sum(np.abs(matrix(GroupElement(2, 1), 60)) ** 2) == pytest.approx(1.0, rel=1e-3)


def test_apply_reproducing_kernel_identity():
    f = np.polynomial.Polynomial([0.5, 1j, -2, 0.3])
    z = 0.7 + 0.2j
    assert apply(GroupElement(1, 0), f, z) == pytest.approx(f(z), abs=1e-12)


def test_apply_constant_and_kernel():
    g = GroupElement(2, 1)
    z = np.array([0.3 - 0.1j, -0.6 + 0.8j])
    one = apply(g, lambda w: np.ones_like(w), z)
    assert np.allclose(one, np.exp(g.t * z**2 / (2 * g.s)) / cmath.sqrt(g.s), atol=1e-12)
    u = 0.4 + 0.5j
    assert np.allclose(apply(g, reproducing_kernel(u), z), kernel_eval(g, z, u), atol=1e-12)


def test_apply_to_basis():
    alpha = 1.1
    g = GroupElement(cmath.exp(1j * alpha), 0)
    for n in range(6):
        z = 0.3 + 0.9j
        assert apply_to_basis(g, n)(z) == pytest.approx(
            cmath.exp(-1j * alpha * (n + 0.5)) * monomial(n)(z))
    g = GroupElement(2, 1)
    assert apply_to_basis(g, 2)(0.5) == pytest.approx(apply(g, monomial(2), 0.5), rel=1e-7)
    assert apply_to_basis(g, 0)(0.5) == pytest.approx(cmath.exp(0.25 / 4) / math.sqrt(2))
    with pytest.raises(NotInFock):
        apply_to_basis(GroupElement(1, 1), 0)


def test_special_matrices():
    assert np.allclose(matrix(GroupElement(1, 0), 8), np.eye(8))
    M = matrix(GroupElement(cmath.exp(1j * math.pi / 3), 0), 8)
    assert np.allclose(M, np.diag(np.exp(-1j * math.pi * (np.arange(8) + 0.5) / 3)), atol=1e-15)
    with pytest.raises(TruncationTooLarge):
        matrix(GroupElement(2, 1), 257)


@pytest.mark.parametrize("g,expected,sign", [
    ((1, 0), (1, 0), 1),
    ((1j * math.sqrt(2), 1), (-1j * math.sqrt(2), -1), 1),
    ((-1, 0), (-1, 0), -1),
])
def test_adjoint(g, expected, sign):
    params, c = adjoint_params(GroupElement(*g))
    assert params == GroupElement(*expected) and c == sign


def test_adjoint_matrix_identity():
    g = SL_CASE
    params, c = adjoint_params(g)
    M, Mstar = matrix(g, 80), matrix(params, 80)
    assert np.max(np.abs(M.conj().T[:10, :10] - c * Mstar[:10, :10])) < 1e-12
    with pytest.raises(NotUnitary):
        adjoint_params(GroupElement(2, 1))


@pytest.mark.parametrize("g1,g2,expected,sign", [
    ((1j, 0), (1j, 0), (-1, 0), 1),
    ((cmath.exp(0.75j * math.pi), 0), (cmath.exp(0.75j * math.pi), 0), (-1j, 0), -1),
])
def test_compose_operators(g1, g2, expected, sign):
    prod, c = compose_operators(GroupElement(*g1), GroupElement(*g2))
    assert abs(prod.s - expected[0]) < 1e-15 and abs(prod.t - expected[1]) < 1e-15
    assert c == sign


def test_inverse_pair_gives_signed_identity():
    g = SL_CASE
    prod, c = compose_operators(g, inverse(g))
    assert abs(prod.s - 1) < 1e-12 and abs(prod.t) < 1e-12
    P = matrix(g, 128) @ matrix(inverse(g), 128)
    assert np.max(np.abs(P[:8, :8] - c * np.eye(8))) < 1e-10


def test_unboundedness():
    g = GroupElement(1, 0.5)
    ratios = unboundedness_ratios(g)
    assert np.all(np.diff(ratios) > 0) and ratios[-1] > 1e3
    # exponent grows like 0.25 |u|^2 along the ray
    assert math.log(ratios[-1] / ratios[-2]) == pytest.approx(0.25 * (64 - 16), rel=1e-12)
    assert abs(maximizing_direction(GroupElement(2, 0))) == 1


def test_canonical_operator_wrapper():
    op = CanonicalOperator(GroupElement(2, 1), N=16)
    assert op.kind is OperatorClass.HILBERT_SCHMIDT
    assert not op.matrix().flags.writeable
    v = op.apply_vector(TruncatedFockVector([1.0]))
    assert v.coeffs[0] == pytest.approx(1 / math.sqrt(2))
    assert op.hs_norm_sq() == 1.0
    u = CanonicalOperator(SL_CASE, N=8)
    assert u.adjoint().g == GroupElement(np.conj(SL_CASE.s), -SL_CASE.t)


@settings(max_examples=25, deadline=None)
@given(st.floats(0, 0.45), st.floats(-math.pi, math.pi), st.floats(-math.pi, math.pi))
def test_small_t_matrices_are_unitary(r, ang, phase):
    g = GroupElement.sl_from(r * cmath.exp(1j * ang), phase)
    M = matrix(g, 64)
    assert np.max(np.abs((M.conj().T @ M)[:16, :16] - np.eye(16))) < 1e-6


@settings(max_examples=20, deadline=None)
@given(st.floats(0, 1.0), st.floats(-math.pi, math.pi), st.floats(-math.pi, math.pi))
def test_unitarity_converges_with_truncation(r, ang, phase):
    # |t| <= 1 needs a larger truncation than 64; at 200 the block is unitary
    g = GroupElement.sl_from(r * cmath.exp(1j * ang), phase)
    M = matrix(g, 200)
    assert np.max(np.abs((M.conj().T @ M)[:16, :16] - np.eye(16))) < 1e-9


@settings(max_examples=30, deadline=None)
@given(st.floats(0.5, 3), st.floats(0, 0.9), st.floats(-math.pi, math.pi), st.floats(-math.pi, math.pi))
def test_first_column_is_closed_form(smod, ratio, a1, a2):
    g = GroupElement(smod * cmath.exp(1j * a1), ratio * smod * cmath.exp(1j * a2))
    col = matrix(g, 30)[:, 0]
    z = 0.3 - 0.2j
    series = sum(col[m] * monomial(m)(z) for m in range(30))
    assert series == pytest.approx(apply_to_basis(g, 0)(z), rel=1e-9, abs=1e-12)
