"""Spaces X_{p,q}, derived constants, and discrete-series parameters.

All parameter arithmetic is exact (``fractions.Fraction``); floating point
only enters downstream in quadrature and fitting.  The hyperbolic space
X_{p,q} carries

    rho   = (p+q-1)/2,      rho_c = (q-1)/2,
    rho1  = (p-q-1)/2  if p > q   (case A),
          = (q-p+1)/2  if q >= p  (case B),

and the radial measure exponents of the unipotent-group integral,

    case A:  alpha = p-2-q,  beta = q-1,
    case B:  alpha = p-2,    beta = q-p.

A discrete-series parameter is a rational lambda != 0 with

    mu = lambda + rho - 2*rho_c          (lambda > 0),
    mu = lambda - rho                    (lambda < 0, only for q = 1),

integral mu for q > 1 and integral |lambda| + rho for q = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

Rational = Union[int, Fraction]


class Case(Enum):
    A = "A"  # p > q
    B = "B"  # q >= p


class Tag(Enum):
    CUSPIDAL = "Cuspidal"
    SPHERICAL_NON_CUSPIDAL = "SphericalNonCuspidal"
    EXCEPTIONAL_EVEN = "ExceptionalEven"
    EXCEPTIONAL_ODD = "ExceptionalOdd"


@dataclass(frozen=True)
class SpaceParams:
    """The space X_{p,q} = SO(p,q+1)_e / SO(p,q)_e with derived constants."""

    p: int
    q: int
    rho: Fraction
    rho_c: Fraction
    rho1: Fraction
    alpha: int
    beta: int
    case_tag: Case
    degenerate_x: bool

    def __str__(self) -> str:
        return f"X({self.p},{self.q})"


def make_space(p: int, q: int) -> SpaceParams:
    """Build SpaceParams for X_{p,q}; rejects p < 1 or q < 1.

    The degenerate flag marks the spaces where the x-integral of the
    radial reduction is absent: p-1 = q in case A, p = 1 in case B.
    """
    if not (isinstance(p, int) and isinstance(q, int)):
        raise TypeError("p and q must be integers")
    if p < 1 or q < 1:
        raise ValueError(f"require p >= 1 and q >= 1, got ({p},{q})")
    rho = Fraction(p + q - 1, 2)
    rho_c = Fraction(q - 1, 2)
    if p > q:
        case = Case.A
        rho1 = Fraction(p - q - 1, 2)
        alpha, beta = p - 2 - q, q - 1
        degenerate = (p - 1 == q)
    else:
        case = Case.B
        rho1 = Fraction(q - p + 1, 2)
        alpha, beta = p - 2, q - p
        degenerate = (p == 1)
    space = SpaceParams(p=p, q=q, rho=rho, rho_c=rho_c, rho1=rho1,
                        alpha=alpha, beta=beta, case_tag=case,
                        degenerate_x=degenerate)
    _check_space_identities(space)
    return space


def _check_space_identities(space: SpaceParams) -> None:
    # Exact identities used by the decay and limit arguments downstream.
    if (space.alpha == -1) != space.degenerate_x:
        raise AssertionError("alpha = -1 must coincide with the degenerate flag")
    if space.case_tag is Case.A:
        if Fraction(space.alpha + 1, 2) + space.beta + 1 != space.rho:
            raise AssertionError("case A identity (alpha+1)/2 + beta + 1 = rho violated")
    else:
        if space.alpha + space.beta + 2 != space.q:
            raise AssertionError("case B identity alpha + beta + 2 = q violated")


@dataclass(frozen=True)
class DiscreteSeriesParam:
    """A discrete-series parameter lambda with its K-type degree mu.

    For mu < 0 (the exceptional range, only for q > p+3) the indices
    n = -mu and m with n = 2m (even) or n = 2m-1 (odd) are populated.
    """

    lam: Fraction
    mu: Fraction
    tag: Tag
    n: Optional[int] = None
    m: Optional[int] = None
    descends_to_projective: bool = False

    @property
    def mu_int(self) -> int:
        if self.mu.denominator != 1:
            raise ValueError(f"mu = {self.mu} is not an integer")
        return int(self.mu)

    def __str__(self) -> str:
        return f"lambda={self.lam} (mu={self.mu}, {self.tag.value})"


def mu_of(space: SpaceParams, lam: Rational) -> Fraction:
    """mu_lambda = lambda + rho - 2 rho_c for lambda > 0; lambda - rho for lambda < 0 (q=1)."""
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    if lam > 0:
        return lam + space.rho - 2 * space.rho_c
    if space.q != 1:
        raise ValueError("lambda < 0 is admitted only when q = 1")
    return lam - space.rho


def make_discrete_series(space: SpaceParams, lam: Rational) -> DiscreteSeriesParam:
    """Validate lambda as a discrete-series parameter for the space and classify it.

    q > 1 requires lambda > 0 with integral mu; q = 1 requires |lambda| + rho
    integral (both signs of lambda admitted).
    """
    lam = Fraction(lam)
    mu = mu_of(space, lam)
    if space.q > 1:
        if lam <= 0:
            raise ValueError("q > 1 requires lambda > 0")
        if mu.denominator != 1:
            raise ValueError(f"mu_lambda = {mu} must be an integer for q > 1")
    else:
        if (abs(lam) + space.rho).denominator != 1:
            raise ValueError(f"|lambda| + rho = {abs(lam) + space.rho} must be an integer for q = 1")
    tag = _classify_mu(space, mu)
    n = m = None
    if mu < 0 and space.q > 1:
        n = int(-mu)
        m = (n + 1) // 2
    descends = (mu.denominator == 1 and int(mu) % 2 == 0)
    return DiscreteSeriesParam(lam=lam, mu=mu, tag=tag, n=n, m=m,
                               descends_to_projective=descends)


def _classify_mu(space: SpaceParams, mu: Fraction) -> Tag:
    if space.q == 1:
        # All (relative) discrete series for q = 1 are cuspidal, both signs.
        return Tag.CUSPIDAL
    if mu > 0:
        return Tag.CUSPIDAL
    if mu == 0:
        return Tag.SPHERICAL_NON_CUSPIDAL
    n = int(-mu)
    return Tag.EXCEPTIONAL_EVEN if n % 2 == 0 else Tag.EXCEPTIONAL_ODD


def classify(space: SpaceParams, ds: DiscreteSeriesParam) -> Tag:
    """Classification of a discrete-series parameter (Cuspidal iff mu > 0 for q > 1).

    Raises on an inconsistent (space, ds) pair.
    """
    if mu_of(space, ds.lam) != ds.mu:
        raise ValueError(f"inconsistent pair: mu_of({space}, {ds.lam}) != {ds.mu}")
    tag = _classify_mu(space, ds.mu)
    if ds.mu < 0 and space.q > 1:
        n = int(-ds.mu)
        if ds.n != n or ds.m != (n + 1) // 2:
            raise ValueError("inconsistent exceptional indices (n, m)")
        if not (space.q > space.p + 3):
            raise ValueError("exceptional parameters require q > p+3")
    return tag


def enumerate_discrete_series(space: SpaceParams,
                              lambda_max: Rational) -> list[DiscreteSeriesParam]:
    """All discrete-series parameters with 0 < |lambda| <= lambda_max.

    For q > 1 these are the lambda > 0 with mu_lambda integral; for q = 1
    both signs with |lambda| + rho integral.  Sorted by (|lambda|, lambda),
    so the enumeration is prefix-stable in lambda_max.
    """
    lambda_max = Fraction(lambda_max)
    if lambda_max <= 0:
        raise ValueError("lambda_max must be positive")
    out: list[DiscreteSeriesParam] = []
    if space.q > 1:
        # lambda = mu - rho + 2 rho_c over integers mu with lambda > 0.
        shift = space.rho - 2 * space.rho_c
        mu = int(shift) - 2
        while Fraction(mu) - shift <= 0:
            mu += 1
        while Fraction(mu) - shift <= lambda_max:
            out.append(make_discrete_series(space, Fraction(mu) - shift))
            mu += 1
    else:
        k = 1
        while True:
            lam = Fraction(k) - space.rho
            if lam > lambda_max:
                break
            if lam > 0:
                out.append(make_discrete_series(space, lam))
                out.append(make_discrete_series(space, -lam))
            k += 1
    out.sort(key=lambda d: (abs(d.lam), d.lam))
    return out
