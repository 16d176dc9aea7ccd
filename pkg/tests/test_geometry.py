import math

import pytest
from hypothesis import given, settings, strategies as st

from cuspidal_radon.geometry import (Convergence, convergence_criterion,
                                     recover_coords, theta, theta_lower_bound)
from cuspidal_radon.params import make_space

SP_A = make_space(4, 2)
SP_B = make_space(2, 2)
SP_B_DEG = make_space(1, 3)

finite = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)
nonneg = st.floats(min_value=0.0, max_value=5.0, allow_nan=False)


def test_theta_case_a_example():
    assert theta(SP_A, 0.0, 1.0, 1.0) == pytest.approx(3.25)


def test_theta_case_b_example():
    assert theta(SP_B, 0.0, 1.0, 1.0) == pytest.approx(2.25)


def test_theta_at_origin_is_cosh_squared():
    for sp in (SP_A, SP_B, SP_B_DEG):
        for s in (-2.0, -0.5, 0.0, 1.7):
            assert theta(sp, s, 0.0, 0.0) == pytest.approx(math.cosh(s) ** 2)


def test_recover_at_origin():
    t, c = recover_coords(SP_A, 1.3, 0.0, 0.0)
    assert t == pytest.approx(1.3)
    assert c == pytest.approx(1.0)
    t, c = recover_coords(SP_A, -1.3, 0.0, 0.0)
    assert t == pytest.approx(1.3)  # p > 1: t >= 0
    t, c = recover_coords(SP_B_DEG, -1.3, 0.0, 0.0)
    assert t == pytest.approx(-1.3)  # p = 1: signed


def test_recover_1_3_example():
    t, c = recover_coords(SP_B_DEG, 0.0, 0.0, 2.0)
    assert math.sinh(t) == pytest.approx(-2.0)
    assert c == pytest.approx(-1.0 / math.sqrt(5.0))


@given(finite, nonneg, nonneg)
@settings(max_examples=200)
def test_recover_consistency(s, x, y):
    for sp in (SP_A, SP_B):
        t, c = recover_coords(sp, s, x, y)
        Th = theta(sp, s, x, y)
        assert math.cosh(t) ** 2 == pytest.approx(Th, rel=1e-12)
        assert -1.0 <= c <= 1.0


@given(finite, nonneg)
@settings(max_examples=100)
def test_p1_sign_rule(s, y):
    t, _ = recover_coords(SP_B_DEG, s, 0.0, y)
    assert math.sinh(t) == pytest.approx(
        math.sinh(s) - 0.5 * math.exp(s) * y * y, rel=1e-12, abs=1e-12)


def test_theta_lower_bound_values():
    b = theta_lower_bound(SP_A, 0.0)
    assert (b.a, b.b, b.quartic_var) == (pytest.approx(0.25), pytest.approx(1.0), "x")
    b = theta_lower_bound(SP_B, 2.0)
    assert (b.a, b.b, b.quartic_var) == (pytest.approx(0.25), pytest.approx(0.75), "y")
    b = theta_lower_bound(SP_B, -1.0)
    assert b.a == pytest.approx(0.25 * math.exp(-2.0))
    assert b.b == pytest.approx(math.cosh(1.0) ** 2)


@given(finite, nonneg, nonneg)
@settings(max_examples=300)
def test_theta_lower_bound_validity(s, x, y):
    for sp in (SP_A, SP_B, SP_B_DEG):
        bound = theta_lower_bound(sp, s)
        xx = 0.0 if sp.degenerate_x else x
        assert theta(sp, s, xx, y) - bound.value(xx, y) >= -1e-12


@given(finite, nonneg, nonneg, st.floats(min_value=0.01, max_value=1.0))
@settings(max_examples=200)
def test_theta_monotone(s, x, y, dx):
    assert theta(SP_A, s, x + dx, y) >= theta(SP_A, s, x, y)
    assert theta(SP_A, s, x, y + dx) >= theta(SP_A, s, x, y)
    assert theta(SP_B, s, x + dx, y) >= theta(SP_B, s, x, y)


def test_recover_continuity_along_path():
    # no branch glitches when cos theta passes +-1
    def f(sp, s, x, y):
        t, c = recover_coords(sp, s, x, y)
        return c * math.cosh(t) ** -2

    for sp in (SP_B, SP_B_DEG):
        n = 400
        vals = []
        for i in range(n + 1):
            u = i / n
            s, x, y = 2.0 * u - 0.5, (0.0 if sp.degenerate_x else 1.5 * u), 2.5 * u
            vals.append(f(sp, s, x, y))
        jumps = [abs(vals[i + 1] - vals[i]) for i in range(n)]
        assert max(jumps) < 0.05


def test_convergence_criterion_cases():
    sp = SP_A
    res = convergence_criterion(4, 2, sp.alpha + 1, sp.beta + 1, sp.rho)
    assert res is Convergence.CONVERGES
    assert convergence_criterion(4, 2, 2, 2, 1.5, delta=2) is Convergence.CONVERGES_LOG
    assert convergence_criterion(4, 2, 2, 2, 1.5) is Convergence.UNKNOWN
    assert convergence_criterion(4, 2, 8, 8, 1.0) is Convergence.UNKNOWN
    with pytest.raises(ValueError):
        convergence_criterion(0, 2, 1, 1, 1)


def test_recover_rejects_inconsistent():
    # impossible |cos theta| > 1 cannot arise from the forward map; exercise the
    # clamp tolerance instead
    t, c = recover_coords(SP_B, 0.0, 0.0, 0.0)
    assert c == 1.0
