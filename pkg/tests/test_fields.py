import cmath
import math

import numpy as np
import pytest

from octoweak.core import E, IM, ONE, CplxOcton, inner, isclose, mul
from octoweak.errors import DomainViolation
from octoweak.fields import (
    PolyField,
    dexp_at,
    dirac_scalar,
    eval_at,
    exp_field_at,
    lorentz_invariance_residual,
    partial,
    pullback_linear,
    random_field,
)
from octoweak.grading import SubspaceTag, draw, in_subspace
from octoweak.lorentz import EBAR_UPPER, Theta

from oracles import central_difference, eval_naive


def x_power(mu, coeff):
    deg = tuple(1 if k == mu else 0 for k in range(4))
    return PolyField({deg: coeff})


# ----------------------------------------------------------------- evaluation


def test_eval_constants_and_linear_terms():
    c = 2.5 * E[3] - 1j * ONE
    f = PolyField.constant(c)
    assert isclose(eval_at(f, (4.0, -1.0, 0.5, 9.0)), c, 0.0)
    g = x_power(1, E[2])
    assert isclose(eval_at(g, (0.0, 2.0, 0.0, 0.0)), 2.0 * E[2], 0.0)


def test_eval_matches_naive_oracle_on_random_cubics():
    rng = np.random.default_rng(40)
    for _ in range(30):
        f = random_field(rng, 3, SubspaceTag.FULL_CO)
        p = rng.uniform(-1.5, 1.5, 4)
        assert abs(eval_at(f, p) - eval_naive(f, p)) < 1e-12


def test_field_validation():
    with pytest.raises(ValueError):
        PolyField({(1, 0, 0): E[1]})
    with pytest.raises(ValueError):
        PolyField({(2, 0, 0, 0): E[1]}, max_total_degree=1)
    with pytest.raises(DomainViolation):
        PolyField({(0, 0, 0, 0): E[5]}, tag=SubspaceTag.A)


def test_point_validation():
    f = PolyField.constant(ONE)
    with pytest.raises(ValueError):
        eval_at(f, (1.0, 2.0))
    with pytest.raises(ValueError):
        eval_at(f, (np.nan, 0.0, 0.0, 0.0))


# -------------------------------------------------------------- differentiation


def test_partial_examples():
    assert partial(PolyField.constant(E[1]), 2).terms == {}
    g = partial(x_power(1, E[2]), 1)
    assert isclose(eval_at(g, (0.3, 0.7, -0.2, 0.9)), E[2], 0.0)


def test_partial_matches_finite_differences():
    rng = np.random.default_rng(41)
    for _ in range(10):
        f = random_field(rng, 3, SubspaceTag.FULL_CO)
        p = rng.uniform(-1, 1, 4)
        for mu in range(4):
            fd = central_difference(lambda q: eval_at(f, q), p, mu)
            assert abs(eval_at(partial(f, mu), p) - fd) < 1e-8


def test_mixed_partials_commute_exactly():
    rng = np.random.default_rng(42)
    f = random_field(rng, 3, SubspaceTag.FULL_CO)
    for mu in range(4):
        for nu in range(4):
            a = partial(partial(f, mu), nu)
            b = partial(partial(f, nu), mu)
            assert a.terms.keys() == b.terms.keys()
            for deg in a.terms:
                assert isclose(a.terms[deg], b.terms[deg], 0.0)


# -------------------------------------------------------------------- pullback


def test_pullback_identity_and_rotation_pattern():
    f = x_power(1, E[3])
    assert isclose(eval_at(pullback_linear(f, np.eye(4)), (0, 1.0, 0, 0)), E[3], 0.0)
    phi = 0.6
    m = np.eye(4)
    m[1, 1] = m[2, 2] = math.cos(phi)
    m[1, 2] = math.sin(phi)
    m[2, 1] = -math.sin(phi)
    g = pullback_linear(f, m)
    # x1 pulls back to cos(phi) x1 + sin(phi) x2
    assert isclose(g.terms[(0, 1, 0, 0)], math.cos(phi) * E[3], 1e-15)
    assert isclose(g.terms[(0, 0, 1, 0)], math.sin(phi) * E[3], 1e-15)


def test_pullback_defining_property():
    rng = np.random.default_rng(43)
    for _ in range(15):
        f = random_field(rng, 3, SubspaceTag.B)
        m = rng.uniform(-1, 1, (4, 4))
        p = rng.uniform(-1, 1, 4)
        assert abs(eval_at(pullback_linear(f, m), p) - eval_at(f, m @ p)) < 1e-12


def test_pullback_chain_rule():
    rng = np.random.default_rng(44)
    f = random_field(rng, 3, SubspaceTag.A)
    m = rng.uniform(-1, 1, (4, 4))
    p = rng.uniform(-1, 1, 4)
    for mu in range(4):
        lhs = eval_at(partial(pullback_linear(f, m), mu), p)
        rhs = CplxOcton.zero()
        for nu in range(4):
            rhs = rhs + eval_at(pullback_linear(partial(f, nu), m), p) * m[nu, mu]
        assert abs(lhs - rhs) < 1e-12


def test_pullback_rejects_complex_matrix():
    f = x_power(0, E[1])
    with pytest.raises(ValueError):
        pullback_linear(f, np.eye(4) * (1 + 0.5j))


# ------------------------------------------------------------ derivative bilinear


def test_dirac_scalar_constant_field_vanishes():
    f = PolyField.constant(E[1], tag=SubspaceTag.A)
    assert dirac_scalar(f, (0.3, 0.1, -0.9, 2.0)) == 0.0


def test_dirac_scalar_single_term_hand_expansion():
    f = PolyField({(1, 0, 0, 0): E[1]}, tag=SubspaceTag.A)
    p = (0.7, 0.3, -0.4, 0.2)
    got = dirac_scalar(f, p)
    # f = x0 e1: only the time derivative survives, <x0* e1, ebar^0 e1>
    want = inner(0.7 * E[1], mul(EBAR_UPPER[0], E[1]))
    assert abs(got - want) < 1e-14
    assert abs(got - (-0.7j)) < 1e-14


def test_dirac_scalar_requires_a_tagged_field():
    f = PolyField.constant(E[1])
    with pytest.raises(DomainViolation):
        dirac_scalar(f, (0, 0, 0, 0))


def test_dirac_scalar_is_finite_complex_on_random_fields():
    rng = np.random.default_rng(45)
    for tag in (SubspaceTag.A, SubspaceTag.B):
        f = random_field(rng, 2, tag)
        v = dirac_scalar(f, rng.uniform(-1, 1, 4))
        assert isinstance(v, complex) and cmath.isfinite(v)


# --------------------------------------------------------- invariance residual


def test_invariance_residual_zero_parameters():
    rng = np.random.default_rng(46)
    f = random_field(rng, 2, SubspaceTag.A)
    assert lorentz_invariance_residual(f, Theta.zero(), (0.2, 0.4, 0.1, -0.3)) < 1e-14


def test_invariance_residual_rotation_on_quaternionic_fields():
    rng = np.random.default_rng(47)
    for _ in range(25):
        f = random_field(rng, 2, SubspaceTag.A)
        p = rng.uniform(-1, 1, 4)
        assert lorentz_invariance_residual(f, Theta.single(1, 2, 1.0), p) < 1e-9


def test_invariance_residual_boost_on_complement_fields():
    rng = np.random.default_rng(48)
    for _ in range(25):
        f = random_field(rng, 2, SubspaceTag.B)
        p = rng.uniform(-1, 1, 4)
        assert lorentz_invariance_residual(f, Theta.single(0, 1, 0.7), p) < 1e-9


def test_invariance_residual_random_parameters_both_tags():
    rng = np.random.default_rng(49)
    for tag in (SubspaceTag.A, SubspaceTag.B):
        for _ in range(25):
            f = random_field(rng, 2, tag)
            theta = Theta.random(rng, 1.5)
            p = rng.uniform(-1, 1, 4)
            assert lorentz_invariance_residual(f, theta, p) < 1e-9


def test_invariance_residual_requires_tagged_field():
    f = PolyField.constant(ONE)
    with pytest.raises(DomainViolation):
        lorentz_invariance_residual(f, Theta.zero(), (0, 0, 0, 0))


# ---------------------------------------------------- exponential fields


def test_exp_field_and_dexp_constant_parameter():
    u = PolyField.constant(0.3 * IM + 0.2 * E[1], tag=SubspaceTag.A_MINUS)
    p = (0.5, 0.5, 0.5, 0.5)
    assert abs(dexp_at(u, 0, p)) == 0.0
    from octoweak.core import exp_assoc

    assert isclose(exp_field_at(u, p), exp_assoc(eval_at(u, p)), 0.0)


def test_dexp_scalar_valued_closed_form():
    u = PolyField({(1, 0, 0, 0): IM}, tag=SubspaceTag.A_MINUS)
    p = (0.4, 0.0, 0.0, 0.0)
    want = CplxOcton.scalar(1j * cmath.exp(0.4j))
    assert abs(dexp_at(u, 0, p) - want) < 1e-13
    assert abs(dexp_at(u, 1, p)) == 0.0


def test_dexp_matches_finite_differences():
    rng = np.random.default_rng(50)
    for _ in range(25):
        u = random_field(rng, 1, SubspaceTag.A, 0.12)
        p = rng.uniform(-1, 1, 4)
        for mu in range(4):
            fd = central_difference(lambda q: exp_field_at(u, q), p, mu)
            assert abs(dexp_at(u, mu, p) - fd) < 1e-7


def test_exp_field_requires_quaternionic_values():
    u = PolyField.constant(E[5], tag=SubspaceTag.B)
    with pytest.raises(DomainViolation):
        exp_field_at(u, (0, 0, 0, 0))
    with pytest.raises(DomainViolation):
        dexp_at(u, 0, (0, 0, 0, 0))


# ------------------------------------------------------------- field arithmetic


def test_field_algebra_and_tag_propagation():
    rng = np.random.default_rng(51)
    f = random_field(rng, 2, SubspaceTag.A)
    g = random_field(rng, 2, SubspaceTag.A)
    p = rng.uniform(-1, 1, 4)
    assert abs(eval_at(f + g, p) - (eval_at(f, p) + eval_at(g, p))) < 1e-13
    assert abs(eval_at(f - g, p) - (eval_at(f, p) - eval_at(g, p))) < 1e-13
    assert (f + g).tag is SubspaceTag.A
    assert (2.0 * f).tag is SubspaceTag.A
    assert (1j * f).tag is SubspaceTag.A  # complex span
    h = random_field(rng, 1, SubspaceTag.A_MINUS)
    assert (2.0 * h).tag is SubspaceTag.A_MINUS
    assert (1j * h).tag is None  # only the real span survives


def test_scale_left_right_follow_the_closure_table():
    rng = np.random.default_rng(52)
    f = random_field(rng, 2, SubspaceTag.B)
    a = draw(SubspaceTag.A, rng)
    b = draw(SubspaceTag.B, rng)
    assert f.scale_left(a).tag is SubspaceTag.B
    assert f.scale_right(b).tag is SubspaceTag.A
    g = random_field(rng, 2, SubspaceTag.A)
    assert g.scale_left(a).tag is SubspaceTag.A
    assert g.scale_left(b).tag is SubspaceTag.B
    p = rng.uniform(-1, 1, 4)
    assert abs(eval_at(f.scale_left(a), p) - mul(a, eval_at(f, p))) < 1e-13
    assert abs(eval_at(f.scale_right(b), p) - mul(eval_at(f, p), b)) < 1e-13


def test_random_field_values_stay_in_the_tagged_subspace():
    rng = np.random.default_rng(53)
    for tag in (SubspaceTag.A, SubspaceTag.B, SubspaceTag.A_MINUS):
        f = random_field(rng, 2, tag)
        for _ in range(5):
            assert in_subspace(eval_at(f, rng.uniform(-1, 1, 4)), tag)
