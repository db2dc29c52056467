import math

import numpy as np
import pytest

from octoweak.core import (
    E,
    ONE,
    CplxOcton,
    bar_star,
    conj_complex,
    conj_oct,
    isclose,
    mul,
    norm,
    scal,
)
from octoweak.errors import DomainViolation
from octoweak.grading import SubspaceTag, draw, in_subspace
from octoweak.lorentz import (
    E_LOWER,
    E_UPPER,
    EBAR_UPPER,
    ETA,
    Theta,
    double_cover_residual,
    eta_inverse_transform,
    gamma5_analogue,
    infinitesimal_dc_residual,
    lambda_S,
    lambda_V,
    lambda_V_real,
    lorentz_algebra_residual,
    mat_exp,
    s_gen,
    transform_alpha,
    transform_beta,
    v_gen,
)

from oracles import mat_exp_taylor


# -------------------------------------------------------------------- basis


def test_basis_is_antihermitian_and_orthonormal_for_the_metric():
    from octoweak.core import inner

    for mu in range(4):
        assert isclose(bar_star(E_LOWER[mu]), -E_LOWER[mu], 0.0)
        for nu in range(4):
            assert abs(inner(E_LOWER[mu], E_LOWER[nu]) - ETA[mu, nu]) < 1e-15
    # raised index flips the time slot only
    assert E_UPPER[0] == -E_LOWER[0]
    for k in range(1, 4):
        assert E_UPPER[k] == E_LOWER[k]


def test_theta_validation_and_constructors():
    with pytest.raises(ValueError):
        Theta(np.ones((4, 4)))
    t = Theta.single(1, 2, 0.5)
    assert t.m[1, 2] == 0.5 and t.m[2, 1] == -0.5
    with pytest.raises(ValueError):
        Theta.from_upper({(2, 1): 1.0})
    rng = np.random.default_rng(0)
    tr = Theta.random_rotation(rng, 2.0)
    assert np.all(tr.m[0, :] == 0.0)


# ---------------------------------------------------------------- generators


def test_spinor_generator_anchors():
    assert isclose(s_gen(1, 2), 0.5j * E[3], 1e-15)
    assert isclose(s_gen(0, 1), -0.5 * E[1], 1e-15)
    assert s_gen(2, 2) == CplxOcton.zero()
    for mu in range(4):
        for nu in range(4):
            g = s_gen(mu, nu)
            assert isclose(g, -s_gen(nu, mu), 0.0)
            assert scal(g) == 0.0  # zero scalar part
            assert in_subspace(g, SubspaceTag.A)


def test_vector_generator_entries():
    v = v_gen(0, 1)
    assert v[0, 1] == -1j * ETA[1, 1]
    assert np.all(v_gen(2, 2) == 0.0)
    for mu in range(4):
        for nu in range(4):
            m = v_gen(mu, nu)
            assert np.max(np.abs(m.real)) == 0.0  # purely imaginary entries
            assert np.allclose(m, -v_gen(nu, mu))


def test_vector_generators_close_with_the_same_structure_constants():
    for mu in range(4):
        for nu in range(4):
            for rho in range(4):
                for sig in range(4):
                    a, b = v_gen(mu, nu), v_gen(rho, sig)
                    lhs = -1j * (a @ b - b @ a)
                    rhs = (
                        ETA[mu, rho] * v_gen(nu, sig)
                        - ETA[mu, sig] * v_gen(nu, rho)
                        - ETA[nu, rho] * v_gen(mu, sig)
                        + ETA[nu, sig] * v_gen(mu, rho)
                    )
                    assert np.max(np.abs(lhs - rhs)) < 1e-14


# ------------------------------------------------------------- matrix exponential


def test_mat_exp_identity_and_inverse():
    assert np.allclose(mat_exp(np.zeros((4, 4))), np.eye(4))
    rng = np.random.default_rng(30)
    for _ in range(20):
        m = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
        prod = mat_exp(m) @ mat_exp(-m)
        assert np.max(np.abs(prod - np.eye(4))) < 1e-10


def test_mat_exp_rotation_block():
    phi = 0.9
    m = np.zeros((4, 4))
    m[0, 1] = phi
    m[1, 0] = -phi
    got = mat_exp(m)
    want = np.eye(4, dtype=complex)
    want[0, 0] = want[1, 1] = math.cos(phi)
    want[0, 1] = math.sin(phi)
    want[1, 0] = -math.sin(phi)
    assert np.max(np.abs(got - want)) < 1e-14


def test_mat_exp_matches_series_oracle():
    rng = np.random.default_rng(31)
    for _ in range(20):
        m = rng.uniform(-0.8, 0.8, (4, 4)) + 1j * rng.uniform(-0.8, 0.8, (4, 4))
        assert np.max(np.abs(mat_exp(m) - mat_exp_taylor(m))) < 1e-12


def test_mat_exp_relative_accuracy_at_large_norm():
    # hyperbolic block with 1-norm 10: exact closed form available
    chi = 10.0
    m = np.zeros((4, 4))
    m[0, 1] = m[1, 0] = chi
    got = mat_exp(m)
    want = np.eye(4, dtype=complex)
    want[0, 0] = want[1, 1] = math.cosh(chi)
    want[0, 1] = want[1, 0] = math.sinh(chi)
    assert np.max(np.abs(got - want)) / math.cosh(chi) < 1e-12
    # oscillatory block with 1-norm 10
    m = np.zeros((4, 4))
    m[0, 1] = 10.0
    m[1, 0] = -10.0
    got = mat_exp(m)
    want = np.eye(4, dtype=complex)
    want[0, 0] = want[1, 1] = math.cos(10.0)
    want[0, 1] = math.sin(10.0)
    want[1, 0] = -math.sin(10.0)
    assert np.max(np.abs(got - want)) < 1e-12


# ----------------------------------------------------------- exponentiated maps


def test_lambda_maps_at_zero():
    assert lambda_S(Theta.zero()) == ONE
    assert np.allclose(lambda_V(Theta.zero()), np.eye(4))


def test_lambda_S_rotation_closed_form():
    phi = 1.3
    lam = lambda_S(Theta.single(1, 2, phi))
    want = math.cos(phi / 2) * ONE + math.sin(phi / 2) * E[3]
    assert isclose(lam, want, 1e-14)


def test_lambda_V_boost_entries_and_unit_norm():
    chi = 0.75
    lv = lambda_V_real(Theta.single(0, 1, chi))
    assert abs(lv[0, 0] - math.cosh(chi)) < 1e-13
    assert abs(lv[1, 1] - math.cosh(chi)) < 1e-13
    assert abs(lv[0, 1] + math.sinh(chi)) < 1e-13
    assert abs(lv[1, 0] + math.sinh(chi)) < 1e-13
    assert abs(norm(lambda_S(Theta.single(0, 1, chi))) - 1.0) < 1e-13


def test_lambda_V_preserves_the_metric():
    rng = np.random.default_rng(32)
    for _ in range(50):
        lv = lambda_V_real(Theta.random(rng, 2.0))
        assert np.max(np.abs(lv.T @ ETA @ lv - ETA)) < 1e-10
        # metric inverse equals the group inverse
        assert np.max(np.abs(eta_inverse_transform(lv) @ lv - np.eye(4))) < 1e-10


def test_lambda_S_has_unit_norm_for_random_parameters():
    rng = np.random.default_rng(33)
    for _ in range(50):
        assert abs(norm(lambda_S(Theta.random(rng, 2.0))) - 1.0) < 1e-10


def test_rotation_only_unitarity_and_boost_self_conjugacy():
    rng = np.random.default_rng(34)
    for _ in range(50):
        lam = lambda_S(Theta.random_rotation(rng, 2.0))
        assert abs(mul(bar_star(lam), lam) - ONE) < 1e-10
    for _ in range(50):
        axis = int(rng.integers(1, 4))
        lam = lambda_S(Theta.single(0, axis, float(rng.uniform(-2, 2))))
        assert abs(bar_star(lam) - lam) < 1e-10


# ----------------------------------------------------------------- double cover


def test_double_cover_residual_examples():
    assert double_cover_residual(Theta.zero()) == 0.0
    assert double_cover_residual(Theta.single(1, 2, math.pi / 2)) < 1e-10


def test_double_cover_residual_random_sweep():
    rng = np.random.default_rng(35)
    for _ in range(100):
        assert double_cover_residual(Theta.random(rng, 2.0)) < 1e-9


def test_algebra_residual_exhaustive():
    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            for rho in range(4):
                for sig in range(4):
                    worst = max(worst, abs(lorentz_algebra_residual(mu, nu, rho, sig)))
    assert worst < 1e-12


def test_infinitesimal_double_cover_exhaustive():
    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            for rho in range(4):
                worst = max(worst, abs(infinitesimal_dc_residual(mu, nu, rho)))
    assert worst < 1e-12


def test_equal_index_pairs_are_trivial():
    assert abs(lorentz_algebra_residual(0, 1, 0, 1)) == 0.0
    assert abs(infinitesimal_dc_residual(1, 1, 2)) == 0.0


# ------------------------------------------------------------- spinor transforms


def test_transform_identity_and_double_cover_sign():
    rng = np.random.default_rng(36)
    alpha = draw(SubspaceTag.A, rng)
    beta = draw(SubspaceTag.B, rng)
    assert isclose(transform_alpha(ONE, alpha), alpha, 0.0)
    assert isclose(transform_beta(ONE, beta), beta, 0.0)
    lam = lambda_S(Theta.single(1, 2, 2 * math.pi))
    assert isclose(lam, -ONE, 1e-12)
    assert isclose(transform_alpha(lam, alpha), -alpha, 1e-12)


def test_transform_beta_two_routes_agree():
    rng = np.random.default_rng(37)
    for _ in range(20):
        lam = lambda_S(Theta.random(rng, 2.0))
        beta = draw(SubspaceTag.B, rng)
        got = transform_beta(lam, beta)
        assert isclose(got, mul(beta, conj_complex(lam)), 1e-11)
        assert isclose(got, mul(bar_star(lam), beta), 0.0)


def test_transform_composition_laws():
    rng = np.random.default_rng(38)
    for _ in range(20):
        l1 = lambda_S(Theta.random(rng, 1.5))
        l2 = lambda_S(Theta.random(rng, 1.5))
        l3 = mul(l2, l1)
        alpha = draw(SubspaceTag.A, rng)
        beta = draw(SubspaceTag.B, rng)
        assert isclose(
            transform_alpha(l2, transform_alpha(l1, alpha)),
            transform_alpha(l3, alpha),
            1e-11,
        )
        assert isclose(
            transform_beta(l2, transform_beta(l1, beta)),
            transform_beta(l3, beta),
            1e-11,
        )


def test_transform_membership_violations():
    with pytest.raises(DomainViolation):
        transform_alpha(E[4], E[1])
    with pytest.raises(DomainViolation):
        transform_alpha(ONE, E[4])
    with pytest.raises(DomainViolation):
        transform_beta(ONE, E[1])


# ------------------------------------------------------------- gamma5 analogue


def test_gamma5_product_is_one():
    assert abs(gamma5_analogue() - ONE) < 1e-14


def test_gamma5_variants():
    # same product without the -i prefactor
    acc = E_UPPER[0]
    for f in (EBAR_UPPER[1], E_UPPER[2], EBAR_UPPER[3]):
        acc = mul(acc, f)
    assert isclose(acc, CplxOcton.scalar(1j), 1e-14)
    # lowered-index variant picks up the time-slot sign twice
    acc = E_LOWER[0]
    for f in (conj_oct(E_LOWER[1]), E_LOWER[2], conj_oct(E_LOWER[3])):
        acc = mul(acc, f)
    assert isclose(acc * -1j, -ONE, 1e-14)


def test_gamma5_association_order_is_immaterial():
    f0, f1, f2, f3 = E_UPPER[0], EBAR_UPPER[1], E_UPPER[2], EBAR_UPPER[3]
    left = mul(mul(mul(f0, f1), f2), f3)
    right = mul(f0, mul(f1, mul(f2, f3)))
    middle = mul(mul(f0, f1), mul(f2, f3))
    assert isclose(left, right, 1e-15)
    assert isclose(left, middle, 1e-15)
