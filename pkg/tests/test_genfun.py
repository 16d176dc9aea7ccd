import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from cuspidal_radon.genfun import (Angular, AngularKind, GeneratingFunction,
                                   decay_norm, make_bump, make_psi, make_xi)
from cuspidal_radon.params import make_discrete_series, make_space


def test_psi_2_2():
    sp = make_space(2, 2)
    psi = make_psi(sp, make_discrete_series(sp, Fraction(1, 2)))
    for theta, t in [(0.0, 0.0), (0.7, 1.3), (2.1, -0.4)]:
        assert psi.value(theta, t) == pytest.approx(
            math.cos(theta) * math.cosh(t) ** -2, rel=1e-14)
    assert psi.value(0.0, 0.0) == 1.0
    assert psi.value_kind == "real"


def test_psi_q1_negative_lambda():
    sp = make_space(1, 1)
    ds = make_discrete_series(sp, Fraction(-3, 2))
    assert ds.mu == -2
    psi = make_psi(sp, ds)
    assert psi.value_kind == "complex"
    for theta, t in [(0.7, 1.3), (2.0, 0.2)]:
        expected = cmath.exp(-2j * theta) * math.cosh(t) ** -2
        assert psi.value(theta, t) == pytest.approx(expected, rel=1e-14)
    assert psi.value(0.0, 0.0) == 1.0


def test_psi_rejects_negative_mu_for_q_gt_1():
    sp = make_space(1, 5)
    ds = make_discrete_series(sp, Fraction(1, 2))
    with pytest.raises(ValueError):
        make_psi(sp, ds)


def test_xi_1_5_closed_form():
    sp = make_space(1, 5)
    xi = make_xi(sp, make_discrete_series(sp, Fraction(1, 2)))
    assert xi.normalization == Fraction(-2)
    assert xi.radial.degree == 1
    for theta, t in [(0.3, 0.8), (1.2, -1.5), (2.8, 2.0)]:
        raw = xi.value(theta, t) * float(xi.normalization)
        ch = math.cosh(t)
        assert raw == pytest.approx(math.cos(theta) * (6 * ch * ch - 8) * ch ** -5,
                                    rel=1e-13)
    assert xi.value(0.0, 0.0) == pytest.approx(1.0, abs=1e-15)


def test_xi_1_7_closed_form():
    sp = make_space(1, 7)
    xi = make_xi(sp, make_discrete_series(sp, Fraction(1, 2)))
    assert xi.angular.kind is AngularKind.CONSTANT
    for theta, t in [(0.3, 0.8), (1.2, -1.5)]:
        raw = xi.value(theta, t) * float(xi.normalization)
        ch = math.cosh(t)
        assert raw == pytest.approx((6 * ch * ch - 8) * ch ** -6, rel=1e-13)


def test_xi_degree_is_m():
    for p, q, lam in [(1, 5, Fraction(1, 2)), (1, 7, Fraction(1, 2)),
                      (2, 7, Fraction(1)), (1, 9, Fraction(1, 2)),
                      (1, 9, Fraction(3, 2)), (2, 8, Fraction(1, 2))]:
        sp = make_space(p, q)
        ds = make_discrete_series(sp, lam)
        xi = make_xi(sp, ds)
        assert xi.radial.degree == ds.m


def test_xi_rejects_non_exceptional():
    sp = make_space(2, 2)
    ds = make_discrete_series(sp, Fraction(1, 2))
    with pytest.raises(ValueError):
        make_xi(sp, ds)


def test_dual_form_agreement_on_grid():
    for p, q, lam in [(1, 5, Fraction(1, 2)), (1, 7, Fraction(1, 2)),
                      (2, 7, Fraction(1))]:
        sp = make_space(p, q)
        xi = make_xi(sp, make_discrete_series(sp, lam))
        for theta in np.linspace(0, 2 * math.pi, 9):
            for t in np.linspace(-5, 5, 21):
                a = xi.value(theta, t)
                b = xi.value_via_phi(theta, t)
                assert abs(a - b) <= 1e-12 * (1 + abs(a))


def test_xi_radial_bound_and_limit():
    sp = make_space(1, 5)
    ds = make_discrete_series(sp, Fraction(1, 2))
    xi = make_xi(sp, ds)
    maj = xi.majorant()
    assert maj.gamma == pytest.approx(float(ds.lam))
    exponent = float(ds.lam + sp.rho)
    for t in np.linspace(-6, 6, 41):
        assert abs(xi.value(0.0, t)) <= maj.M * math.cosh(t) ** -exponent + 1e-15
    # (cosh t)^(lambda+rho) xi(0, t) converges to the leading coefficient
    lead = float(xi.radial.leading_coefficient)
    assert lead != 0.0
    val = math.cosh(25.0) ** exponent * xi.value(0.0, 25.0)
    assert val == pytest.approx(lead, rel=1e-10)


def test_evenness_in_t():
    sp = make_space(2, 7)
    xi = make_xi(sp, make_discrete_series(sp, Fraction(1)))
    psi = make_psi(make_space(2, 2),
                   make_discrete_series(make_space(2, 2), Fraction(1, 2)))
    for f in (xi, psi):
        for theta, t in [(0.4, 0.9), (1.9, 2.3)]:
            assert f.value(theta, t) == f.value(theta, -t)


def test_psi_majorant():
    sp = make_space(2, 2)
    psi = make_psi(sp, make_discrete_series(sp, Fraction(1, 2)))
    maj = psi.majorant()
    assert maj.M == 1.0
    assert maj.gamma == pytest.approx(0.5)


def test_bump_values():
    sp = make_space(4, 2)
    bump = make_bump(sp, 1.0)
    assert bump.value(0.3, 0.0) == 1.0
    assert bump.value(0.0, 1.5) == 0.0
    assert 0.0 < bump.value(0.0, 0.5) < 1.0
    assert bump.support_w == pytest.approx(math.cosh(1.0) ** 2)
    with pytest.raises(ValueError):
        make_bump(sp, -1.0)


def test_decay_norm_psi_finite():
    sp = make_space(2, 2)
    psi = make_psi(sp, make_discrete_series(sp, Fraction(1, 2)))
    for N in (2, 4, 8):
        assert math.isfinite(decay_norm(psi, N))


def test_decay_norm_marginal_schwartz():
    # f = (cosh t)^(-rho) (1 + log cosh t)^(-2): finite at N = 2, infinite at N = 4
    sp = make_space(2, 2)
    rho = float(sp.rho)

    def radial(w):
        ch = math.sqrt(w)
        return ch ** -rho / (1.0 + math.log(ch)) ** 2

    f = GeneratingFunction(space=sp, angular=Angular(AngularKind.CONSTANT),
                           radial=radial)
    assert decay_norm(f, 2) == pytest.approx(1.0, rel=1e-6)
    assert decay_norm(f, 4) == math.inf


def test_decay_norm_bump():
    sp = make_space(2, 3)
    bump = make_bump(sp, 1.0)
    v = decay_norm(bump, 4)
    assert math.isfinite(v)
    assert v >= 1.0  # value at t = 0 is already 1
