import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import quad

from cuspidal_radon.params import make_space
from cuspidal_radon.specfun import (RadialForm, beta_integral, beta_linear_integral,
                                    gamma_half_integer, laplacian_step, phi_nm,
                                    zonal, zonal_coeffs)


# ---------------------------------------------------------------------------
# zonal polynomials
# ---------------------------------------------------------------------------


def test_zonal_degree_zero_is_one():
    for q in (2, 3, 5, 8):
        for x in (-1.0, -0.3, 0.0, 0.9, 1.0):
            assert zonal(0, q, x) == 1.0


def test_zonal_degree_one_is_identity():
    for x in np.linspace(-1, 1, 11):
        assert zonal(1, 4, x) == pytest.approx(x, abs=1e-15)


def test_zonal_mu2_q3():
    for x in np.linspace(-1, 1, 11):
        assert zonal(2, 3, x) == pytest.approx((4 * x * x - 1) / 3, abs=1e-14)


def test_zonal_coeffs_exact():
    assert zonal_coeffs(2, 3) == (Fraction(-1, 3), Fraction(0), Fraction(4, 3))
    assert zonal_coeffs(1, 5) == (Fraction(0), Fraction(1))


def test_zonal_normalized_and_bounded():
    xs = np.linspace(-1, 1, 201)
    for mu in range(21):
        for q in range(2, 9):
            assert abs(zonal(mu, q, 1.0) - 1.0) <= 1e-12
            vals = [zonal(mu, q, float(x)) for x in xs]
            assert max(abs(v) for v in vals) <= 1.0 + 1e-10


def test_zonal_orthogonality_brute_force():
    # Gegenbauer weight (1-x^2)^(nu - 1/2), nu = (q-1)/2
    for q, mu1, mu2 in [(3, 2, 0), (4, 3, 1), (5, 2, 1)]:
        nu = 0.5 * (q - 1)
        val, _ = quad(lambda x: zonal(mu1, q, x) * zonal(mu2, q, x)
                      * (1 - x * x) ** (nu - 0.5), -1, 1)
        assert abs(val) < 1e-10


def test_zonal_rejects_out_of_range():
    with pytest.raises(ValueError):
        zonal(2, 3, 1.5)
    with pytest.raises(ValueError):
        zonal(2, 1, 0.5)


# ---------------------------------------------------------------------------
# radial calculus
# ---------------------------------------------------------------------------


def test_laplacian_step_inverse_power_p1():
    # d^2/dx^2 (1+x^2)^(-1) = (6x^2-2)(1+x^2)^(-3)
    out = laplacian_step(RadialForm((Fraction(1),), Fraction(-1)), p=1)
    assert out == RadialForm((Fraction(-2), Fraction(6)), Fraction(-3))


def test_laplacian_step_kills_constants():
    out = laplacian_step(RadialForm((Fraction(1),), Fraction(0)), p=5)
    assert out.coeffs == ()
    assert out.degree == -1


def test_laplacian_step_of_x_squared():
    # omega(x^2) = 2p; canonical representation 2p(1+u)^2 (1+u)^(-2)
    out = laplacian_step(RadialForm((Fraction(0), Fraction(1)), Fraction(0)), p=3)
    assert out.nu == Fraction(-2)
    assert out.coeffs == (Fraction(6), Fraction(12), Fraction(6))
    for u in (0.0, 0.7, 2.0):
        assert out(u) == pytest.approx(6.0, abs=1e-12)


def _fd_laplacian(form, p, r, h=1e-3):
    """p-dimensional Laplacian of x -> form(|x|^2) at (r,0,...,0) by differences."""
    def g(u):
        return form(u)
    radial = (g((r + h) ** 2) - 2 * g(r * r) + g((r - h) ** 2)) / (h * h)
    transverse = 2.0 * (g(r * r + h * h) - g(r * r)) / (h * h)
    return radial + (p - 1) * transverse


def test_laplacian_step_matches_finite_differences():
    rng = np.random.default_rng(7)
    for _ in range(20):
        deg = int(rng.integers(0, 4))
        coeffs = tuple(Fraction(int(rng.integers(-3, 4)) or 1) for _ in range(deg + 1))
        nu = Fraction(int(rng.integers(-6, 3)), 2)
        p = int(rng.integers(1, 6))
        form = RadialForm(coeffs, nu)
        stepped = laplacian_step(form, p)
        r = float(rng.uniform(0.3, 1.8))
        exact = stepped(r * r)
        approx = _fd_laplacian(form, p, r)
        scale = max(1.0, abs(exact))
        assert abs(exact - approx) <= 2e-4 * scale


def test_phi_nm_examples():
    expected = RadialForm((Fraction(-2), Fraction(6)), Fraction(-3))
    assert phi_nm(make_space(1, 7), 2, 1) == expected
    assert phi_nm(make_space(1, 5), 1, 1) == expected


def test_phi_nm_degree_and_exponent():
    cases = [(1, 9, 1, 1), (1, 9, 2, 1), (1, 9, 3, 2), (2, 11, 3, 2),
             (1, 13, 4, 2), (2, 13, 2, 1)]
    for p, q, n, m in cases:
        sp = make_space(p, q)
        form = phi_nm(sp, n, m)
        assert form.degree == m
        assert form.nu == Fraction(n - 2 * m) - sp.rho_c


def test_phi_nm_rejects_bad_indices():
    sp = make_space(1, 7)
    with pytest.raises(ValueError):
        phi_nm(sp, 4, 1)  # n not in {2m, 2m-1}
    with pytest.raises(ValueError):
        phi_nm(make_space(1, 3), 1, 1)  # n - rho_c >= -p/2


# ---------------------------------------------------------------------------
# gamma / beta
# ---------------------------------------------------------------------------


def test_gamma_half_integer_values():
    assert gamma_half_integer(Fraction(1, 2)) == pytest.approx(math.sqrt(math.pi))
    assert gamma_half_integer(Fraction(5, 2)) == pytest.approx(0.75 * math.sqrt(math.pi))
    assert gamma_half_integer(Fraction(4)) == 6.0
    for a in (Fraction(1, 2), Fraction(3, 2), Fraction(7, 2), Fraction(3), Fraction(6)):
        assert gamma_half_integer(a) == pytest.approx(math.gamma(float(a)), rel=1e-14)


def test_beta_linear_integral_examples():
    assert beta_linear_integral(1, 4) == pytest.approx(1 / 6, rel=1e-13)
    assert beta_linear_integral(2, 6) == pytest.approx(1 / 60, rel=1e-13)


def test_beta_linear_integral_zero_iff_l_eq_2k_plus_1():
    assert beta_linear_integral(1.5, 4.0) == 0.0
    assert beta_linear_integral(1.5, 4.0 + 1e-6) != 0.0


def test_beta_linear_integral_range():
    with pytest.raises(ValueError):
        beta_linear_integral(3, 3.5)
    with pytest.raises(ValueError):
        beta_linear_integral(-1, 4)


def test_beta_integral_matches_quadrature():
    for k, l in [(0.5, 2.0), (1.0, 3.5), (2.5, 7.0)]:
        val, _ = quad(lambda y: y ** (k - 1) * (1 + y) ** (-l), 0, np.inf)
        assert beta_integral(k, l) == pytest.approx(val, rel=1e-9)


def test_beta_linear_integral_matches_quadrature():
    rng = np.random.default_rng(3)
    for _ in range(10):
        k = float(rng.uniform(0.4, 3.0))
        l = float(k + 1 + rng.uniform(0.5, 4.0))
        val, _ = quad(lambda y: (1 - y) * y ** (k - 1) * (1 + y) ** (-l), 0, np.inf)
        assert beta_linear_integral(k, l) == pytest.approx(val, rel=1e-8, abs=1e-12)


def test_radial_form_canonical():
    form = RadialForm((Fraction(1), Fraction(0)), Fraction(-1))
    assert form.coeffs == (Fraction(1),)
    assert form.degree == 0
    assert form.leading_coefficient == 1
    assert form(0.5) == pytest.approx(1.0 / 1.5)
