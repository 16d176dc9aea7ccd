"""Zonal Gegenbauer polynomials, gamma/beta values, and exact radial calculus.

The radial calculus works with forms P(u)*(1+u)^nu (rational P and nu) in
the variable u = x^2.  On such forms the Euclidean Laplacian of R^p acts as

    omega[g(u)] = 4*u*g''(u) + 2*p*g'(u),        u = |x|^2,

which keeps everything inside exact rational polynomial arithmetic.  The
iterated forms

    phi_{n,m}(s^2) = [omega^m (1+x^2)^(n-rho_c)] at x = (s,0,...,0)

are the building blocks of the exceptional generating functions; each
application of omega lowers the exponent by exactly 2 and raises the
polynomial degree by exactly 1 in the nondegenerate range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .params import SpaceParams

Rational = Union[int, Fraction]

# ---------------------------------------------------------------------------
# exact polynomial helpers (coefficient lists, ascending degree)
# ---------------------------------------------------------------------------


def _strip(c: list[Fraction]) -> tuple[Fraction, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else Fraction(0)) + (b[i] if i < len(b) else Fraction(0))
            for i in range(n)]


def _pmul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out

def _pscale(a: Sequence[Fraction], c: Fraction) -> list[Fraction]:
    return [c * ai for ai in a]


def _pderiv(a: Sequence[Fraction]) -> list[Fraction]:
    return [Fraction(i) * a[i] for i in range(1, len(a))]


def poly_eval(coeffs: Sequence[Fraction], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + float(c)
    return acc


def poly_shift(coeffs: Sequence[Fraction], c: Rational) -> tuple[Fraction, ...]:
    """Coefficients of P(x + c) given those of P(x), exactly (Horner)."""
    c = Fraction(c)
    out: list[Fraction] = []
    for a in reversed(coeffs):
        out = _padd(_pmul(out, [c, Fraction(1)]), [a])
    return _strip(out)


# ---------------------------------------------------------------------------
# RadialForm and the iterated Laplacian
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadialForm:
    """u |-> P(u) * (1+u)^nu with exact rational P and nu."""

    coeffs: tuple[Fraction, ...]
    nu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(list(Fraction(c) for c in self.coeffs)))
        object.__setattr__(self, "nu", Fraction(self.nu))

    @property
    def degree(self) -> int:
        """Degree of P; -1 for P identically zero."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, u: float) -> float:
        if not self.coeffs:
            return 0.0
        return poly_eval(self.coeffs, u) * (1.0 + u) ** float(self.nu)

    def poly_in_w(self) -> tuple[Fraction, ...]:
        """Coefficients of P(w - 1), the polynomial in w = 1 + u."""
        return poly_shift(self.coeffs, Fraction(-1))

    def __str__(self) -> str:
        return f"P(u)*(1+u)^({self.nu}) with P coeffs {self.coeffs}"


def laplacian_step(form: RadialForm, p: int) -> RadialForm:
    """One application of omega = 4u d^2/du^2 + 2p d/du to P(u)(1+u)^nu.

    Writing g = P*(1+u)^nu,

      omega g = [ 4u(1+u)^2 P'' + 8 nu u (1+u) P' + 4 nu(nu-1) u P
                  + 2p(1+u)^2 P' + 2p nu (1+u) P ] * (1+u)^(nu-2),

    returned canonically with exponent nu-2 (any (1+u) factors multiplied
    into the polynomial).  deg P rises by exactly 1 when nu + deg P is
    neither 0 nor -(p-2)/2.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    P = list(form.coeffs)
    if not P:
        return RadialForm((), form.nu - 2)
    nu = form.nu
    dP = _pderiv(P)
    ddP = _pderiv(dP)
    one_plus = [Fraction(1), Fraction(1)]
    u = [Fraction(0), Fraction(1)]
    sq = _pmul(one_plus, one_plus)
    terms = _pscale(_pmul(u, _pmul(sq, ddP)), Fraction(4))
    terms = _padd(terms, _pscale(_pmul(u, _pmul(one_plus, dP)), 8 * nu))
    terms = _padd(terms, _pscale(_pmul(u, P), 4 * nu * (nu - 1)))
    terms = _padd(terms, _pscale(_pmul(sq, dP), Fraction(2 * p)))
    terms = _padd(terms, _pscale(_pmul(one_plus, P), 2 * p * nu))
    return RadialForm(tuple(_strip(terms)), nu - 2)


def phi_nm(space: SpaceParams, n: int, m: int) -> RadialForm:
    """The m-fold Laplacian iterate phi_{n,m} as a RadialForm in u = s^2.

    Starts from (1+u)^(n-rho_c) and applies omega m times; the result has
    exponent n - 2m - rho_c and polynomial degree exactly m.  Requires the
    exceptional index relation n = 2m or n = 2m-1 and n - rho_c < -p/2.
    """
    if m < 1 or n < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if n not in (2 * m, 2 * m - 1):
        raise ValueError(f"indices must satisfy n = 2m or n = 2m-1, got n={n}, m={m}")
    nu0 = Fraction(n) - space.rho_c
    if not (nu0 < Fraction(-space.p, 2)):
        raise ValueError(f"require n - rho_c < -p/2, got {nu0} vs {Fraction(-space.p, 2)}")
    form = RadialForm((Fraction(1),), nu0)
    for _ in range(m):
        form = laplacian_step(form, space.p)
    if form.nu != Fraction(n - 2 * m) - space.rho_c:
        raise RuntimeError("exponent bookkeeping failed in phi_nm")
    if form.degree != m:
        raise RuntimeError(f"degree shortfall in phi_nm: got {form.degree}, want {m}")
    return form


# ---------------------------------------------------------------------------
# zonal spherical (Gegenbauer) polynomials
# ---------------------------------------------------------------------------


def gegenbauer(mu: int, nu: float, x: float) -> float:
    """C_mu^nu(x) by the three-term forward recurrence (nu > 0)."""
    if mu == 0:
        return 1.0
    prev, cur = 1.0, 2.0 * nu * x
    for k in range(2, mu + 1):
        prev, cur = cur, (2.0 * x * (k + nu - 1.0) * cur - (k + 2.0 * nu - 2.0) * prev) / k
    return cur


def zonal(mu: int, q: int, x: float) -> float:
    """Normalized zonal polynomial R_mu(x) = C_mu^((q-1)/2)(x) / C_mu^((q-1)/2)(1).

    These are the zonal spherical functions of SO(q+1)/SO(q) for q >= 2,
    normalized so R_mu(1) = 1; R_1(cos theta) = cos theta.  Values outside
    [-1, 1] (beyond rounding slack) are rejected.
    """
    if mu < 0:
        raise ValueError("mu must be >= 0")
    if q < 2:
        raise ValueError("zonal polynomials require q >= 2 (q = 1 uses exponentials)")
    if abs(x) > 1.0 + 1e-12:
        raise ValueError(f"|x| > 1: {x}")
    x = min(1.0, max(-1.0, x))
    nu = 0.5 * (q - 1)
    return gegenbauer(mu, nu, x) / gegenbauer(mu, nu, 1.0)


def zonal_coeffs(mu: int, q: int) -> tuple[Fraction, ...]:
    """Exact rational coefficients of R_mu for tests (ascending degree)."""
    if mu < 0 or q < 2:
        raise ValueError("need mu >= 0 and q >= 2")
    nu = Fraction(q - 1, 2)
    prev: list[Fraction] = [Fraction(1)]
    if mu == 0:
        return tuple(prev)
    cur: list[Fraction] = [Fraction(0), 2 * nu]
    for k in range(2, mu + 1):
        nxt = _padd(_pscale([Fraction(0)] + list(cur), Fraction(2 * (k + nu - 1), k)),
                    _pscale(prev, -Fraction(k + 2 * nu - 2, k)))
        prev, cur = cur, nxt
    norm = sum(cur)  # value at x = 1
    return tuple(c / norm for c in cur)


# ---------------------------------------------------------------------------
# gamma / beta closed forms
# ---------------------------------------------------------------------------


def gamma_half_integer(a: Fraction) -> float:
    """Gamma at positive integer or half-integer arguments, in closed form.

    Gamma(n) = (n-1)!;  Gamma(n + 1/2) = (2n)! / (4^n n!) * sqrt(pi).
    """
    a = Fraction(a)
    if a <= 0:
        raise ValueError("argument must be positive")
    if a.denominator == 1:
        return float(math.factorial(int(a) - 1))
    if a.denominator == 2:
        n = int(a - Fraction(1, 2))
        return math.factorial(2 * n) / (4.0 ** n * math.factorial(n)) * math.sqrt(math.pi)
    raise ValueError(f"{a} is not an integer or half-integer")


def beta_integral(k: float, l: float) -> float:
    """int_0^inf y^(k-1) (1+y)^(-l) dy = Gamma(k)Gamma(l-k)/Gamma(l), 0 < k < l."""
    if not (0 < k < l):
        raise ValueError(f"require 0 < k < l, got k={k}, l={l}")
    return math.exp(math.lgamma(k) + math.lgamma(l - k) - math.lgamma(l))


def beta_linear_integral(k: float, l: float) -> float:
    """int_0^inf (1-y) y^(k-1) (1+y)^(-l) dy = (l-2k-1) Gamma(k)Gamma(l-k-1)/Gamma(l).

    Valid for 0 < k < l-1; vanishes precisely when l - 2k - 1 = 0.  This is
    the closed form behind the exceptional-odd limit constant.
    """
    k = float(k)
    l = float(l)
    if not (0 < k < l - 1):
        raise ValueError(f"require 0 < k < l-1, got k={k}, l={l}")
    return (l - 2.0 * k - 1.0) * math.exp(
        math.lgamma(k) + math.lgamma(l - k - 1.0) - math.lgamma(l))
