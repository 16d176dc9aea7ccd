"""K cap H - invariant generating functions of the discrete series.

Every evaluator here is separable, f(k_theta a_t) = A(theta) * G(cosh^2 t),
with the angular factor one of

    Constant            1                      (K-invariant / spherical)
    Cosine              cos(theta)             (odd exceptional functions)
    ZonalGegenbauer     R_mu(cos theta)        (q > 1)
    ComplexExponential  e^(i mu theta)         (q = 1)

and the radial factor either an exact P(w) * w^(e/2) power law (w = cosh^2 t)
or a compactly supported bump.  Evaluators are normalized to 1 at the
identity (theta = 0, t = 0) by a stored exact constant; the raw closed forms
remain available through that constant and, for the exceptional functions,
through the independent phi-form oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Union

import numpy as np

from .params import DiscreteSeriesParam, SpaceParams
from .specfun import RadialForm, phi_nm, poly_eval, zonal

Number = Union[float, complex]


class AngularKind(Enum):
    CONSTANT = "Constant"
    COSINE = "Cosine"
    ZONAL = "ZonalGegenbauer"
    COMPLEX_EXP = "ComplexExponential"


@dataclass(frozen=True)
class Angular:
    kind: AngularKind
    mu: int = 0
    q: int = 2

    def value(self, theta: float) -> Number:
        if self.kind is AngularKind.CONSTANT:
            return 1.0
        if self.kind is AngularKind.COSINE:
            return math.cos(theta)
        if self.kind is AngularKind.ZONAL:
            return zonal(self.mu, self.q, math.cos(theta))
        return complex(math.cos(self.mu * theta), math.sin(self.mu * theta))


@dataclass(frozen=True)
class PowerLawRadial:
    """w |-> P(w) * w^(exponent/2) with exact rational data (w = cosh^2 t)."""

    coeffs: tuple[Fraction, ...]
    cosh_exponent: Fraction

    def __call__(self, w: float) -> float:
        return poly_eval(self.coeffs, w) * w ** (0.5 * float(self.cosh_exponent))

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def abs_coeff_sum(self) -> float:
        return float(sum(abs(c) for c in self.coeffs))


@dataclass(frozen=True)
class BumpRadial:
    """Smooth bump in t, supported in |t| <= t0, evaluated in w = cosh^2 t.

    g(t) = exp(-k u^2 / (1 - u^2)), u = t/t0; g(0) = 1 and g vanishes to all
    orders at the support boundary.
    """

    t0: float
    steepness: float = 1.0

    def __call__(self, w: float) -> float:
        w = max(w, 1.0)
        t = math.acosh(math.sqrt(w))
        u = t / self.t0
        if u >= 1.0:
            return 0.0
        u2 = u * u
        return math.exp(-self.steepness * u2 / (1.0 - u2))


@dataclass(frozen=True)
class Majorant:
    """Certified bound |f(k_theta a_t)| <= M * (cosh t)^(-(rho + gamma))."""

    M: float
    gamma: float


@dataclass(frozen=True)
class GeneratingFunction:
    space: SpaceParams
    angular: Angular
    radial: Callable[[float], float]
    ds: Optional[DiscreteSeriesParam] = None
    normalization: Fraction = Fraction(1)
    phi_form: Optional[RadialForm] = None
    label: str = ""

    @property
    def value_kind(self) -> str:
        return "complex" if self.angular.kind is AngularKind.COMPLEX_EXP else "real"

    @property
    def is_k_invariant(self) -> bool:
        if self.angular.kind is AngularKind.CONSTANT:
            return True
        return (self.angular.kind in (AngularKind.ZONAL, AngularKind.COMPLEX_EXP)
                and self.angular.mu == 0)

    @property
    def support_w(self) -> Optional[float]:
        """Upper end of the radial support in w = cosh^2 t, if compact."""
        if isinstance(self.radial, BumpRadial):
            return math.cosh(self.radial.t0) ** 2
        return None

    def radial_value(self, w: float) -> float:
        return self.radial(w)

    def value(self, theta: float, t: float) -> Number:
        w = math.cosh(t) ** 2
        return self.angular.value(theta) * self.radial(w)

    __call__ = value

    def value_via_phi(self, theta: float, t: float) -> Number:
        """Independent phi-form evaluation of an exceptional function.

        Computes A(theta) * phi_{n,m}(sinh^2 t) (times cosh t in the odd
        case) divided by the same normalization constant; agreement with
        ``value`` is the dual-route oracle.
        """
        if self.phi_form is None or self.ds is None:
            raise ValueError("phi-form only available for exceptional functions")
        u = math.sinh(t) ** 2
        raw = self.phi_form(u)
        if self.angular.kind is AngularKind.COSINE:
            raw *= math.cos(theta) * math.cosh(t)
        return raw / float(self.normalization)

    def majorant(self) -> Majorant:
        """Power-law envelope used for certified truncation of the transform.

        The angular factor is bounded by 1 for every kind; power-law radial
        parts P(w) w^(e/2) obey |P(w)| <= (sum |c_j|) w^deg for w >= 1.
        """
        rho = float(self.space.rho)
        if isinstance(self.radial, PowerLawRadial):
            gamma = -float(self.radial.cosh_exponent) - 2.0 * self.radial.degree - rho
            return Majorant(M=self.radial.abs_coeff_sum(), gamma=gamma)
        if isinstance(self.radial, BumpRadial):
            gamma = 1.0
            M = math.cosh(self.radial.t0) ** (rho + gamma)
            return Majorant(M=M, gamma=gamma)
        raise ValueError("no certified majorant for custom radial parts")


def make_psi(space: SpaceParams, ds: DiscreteSeriesParam) -> GeneratingFunction:
    """The ordinary generating function psi_lambda.

    q > 1:  R_{mu}(cos theta) * (cosh t)^(-lambda-rho), requires mu >= 0;
    q = 1:  e^(i mu theta) * (cosh t)^(-|lambda|-rho).
    """
    if space.q > 1:
        if ds.mu < 0:
            raise ValueError("psi_lambda requires mu_lambda >= 0 when q > 1")
        angular = Angular(AngularKind.ZONAL, mu=ds.mu_int, q=space.q)
        exponent = -ds.lam - space.rho
    else:
        angular = Angular(AngularKind.COMPLEX_EXP, mu=ds.mu_int, q=1)
        exponent = -abs(ds.lam) - space.rho
    radial = PowerLawRadial(coeffs=(Fraction(1),), cosh_exponent=Fraction(exponent))
    return GeneratingFunction(space=space, angular=angular, radial=radial, ds=ds,
                              label=f"psi(lambda={ds.lam})")


def make_xi(space: SpaceParams, ds: DiscreteSeriesParam) -> GeneratingFunction:
    """The exceptional generating function xi_lambda (q > p+3, mu = -n < 0).

    Built from phi_{n,m}: the radial closed form is P(cosh^2 t) times
    (cosh t)^(-lambda-rho-2m) with P(w) = P_phi(w-1) of degree exactly m,
    normalized so xi(e) = 1.  The phi-form is retained as an oracle.
    """
    if ds.mu >= 0:
        raise ValueError("xi_lambda requires mu_lambda < 0")
    if not (space.q > space.p + 3):
        raise ValueError("exceptional parameters require q > p+3")
    n, m = ds.n, ds.m
    if n is None or m is None:
        raise ValueError("exceptional indices (n, m) missing on the parameter")
    phi = phi_nm(space, n, m)
    poly_w = poly_shift_to_w(phi)
    exponent = -ds.lam - space.rho - 2 * m
    norm = _poly_value_exact(poly_w, Fraction(1))
    if norm == 0:
        raise ValueError("exceptional function vanishes at the identity; cannot normalize")
    coeffs = tuple(c / norm for c in poly_w)
    radial = PowerLawRadial(coeffs=coeffs, cosh_exponent=Fraction(exponent))
    angular = (Angular(AngularKind.CONSTANT) if n == 2 * m
               else Angular(AngularKind.COSINE))
    return GeneratingFunction(space=space, angular=angular, radial=radial, ds=ds,
                              normalization=norm, phi_form=phi,
                              label=f"xi(lambda={ds.lam}, n={n}, m={m})")


def poly_shift_to_w(phi: RadialForm) -> tuple[Fraction, ...]:
    """P_phi as a polynomial in w = cosh^2 t = 1 + u."""
    return phi.poly_in_w()


def _poly_value_exact(coeffs: tuple[Fraction, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def make_bump(space: SpaceParams, t0: float, smoothness: float = 1.0) -> GeneratingFunction:
    """K-invariant smooth bump supported in |t| <= t0 with f(e) = 1."""
    if t0 <= 0:
        raise ValueError("t0 must be positive")
    radial = BumpRadial(t0=float(t0), steepness=float(smoothness))
    return GeneratingFunction(space=space, angular=Angular(AngularKind.CONSTANT),
                              radial=radial, label=f"bump(t0={t0})")


def decay_norm(f: GeneratingFunction, N: int, space: Optional[SpaceParams] = None,
               log_cosh_max: float = 50.0, samples: int = 4000) -> float:
    """Numerical Schwartz-type norm sup_t (cosh t)^rho (1+log cosh t)^N |f|.

    The supremum over K is 1 in modulus for every angular kind, so only the
    radial factor matters.  Evaluated on a grid dense in log cosh t; if the
    tail of the grid is still growing the norm is reported as infinite.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    space = space or f.space
    rho = float(space.rho)
    L = np.linspace(0.0, log_cosh_max, samples)
    vals = np.empty_like(L)
    for i, li in enumerate(L):
        w = math.exp(2.0 * li)  # cosh^2 t
        g = f.radial_value(w)
        vals[i] = abs(g) * math.exp(rho * li) * (1.0 + li) ** N
    tail = vals[int(0.9 * samples):]
    if np.argmax(vals) >= int(0.9 * samples) and tail[-1] > 2.0 * vals[: int(0.9 * samples)].max():
        return math.inf
    return float(vals.max())
