"""N*-coordinate geometry: Theta, recovery of (t, theta), and tail bounds.

In the radial coordinates (s, x, y) of the unipotent group the hyperbolic
polar coordinates are recovered from

    case A (p > q):   cosh^2 t = y^2 + (cosh s + e^s x^2 / 2)^2,
                      cos theta = (cosh s + e^s x^2 / 2) / cosh t,
    case B (q >= p):  cosh^2 t = x^2 + y^2 + (cosh s - e^s y^2 / 2)^2,
                      cos theta = (cosh s - e^s y^2 / 2) / cosh t,

with t >= 0 for p > 1 and, for p = 1, the sign of t fixed by
sinh t = sinh s - e^s y^2 / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .params import Case, SpaceParams

Real = Union[int, float, Fraction]


def cos_numerator(space: SpaceParams, s: float, x: float, y: float) -> float:
    """The quantity h with cos theta = h / cosh t (case-dependent sign)."""
    if space.case_tag is Case.A:
        return math.cosh(s) + 0.5 * math.exp(s) * x * x
    return math.cosh(s) - 0.5 * math.exp(s) * y * y


def theta(space: SpaceParams, s: float, x: float, y: float) -> float:
    """Theta(s,x,y) = cosh^2 t along a_s n_{u,v}, reduced to radial coordinates."""
    h = cos_numerator(space, s, x, y)
    if space.case_tag is Case.A:
        return y * y + h * h
    return x * x + y * y + h * h


def recover_coords(space: SpaceParams, s: float, x: float, y: float) -> tuple[float, float]:
    """(t, cos theta) of the coset through a_s n*; t signed only for p = 1.

    cos theta is clamped to [-1, 1] after rounding; a violation beyond
    1e-12 would indicate an arithmetic fault and raises.
    """
    Th = theta(space, s, x, y)
    h = cos_numerator(space, s, x, y)
    cosh_t = math.sqrt(Th)
    c = h / cosh_t
    if abs(c) > 1.0 + 1e-12:
        raise ArithmeticError(f"|cos theta| = {abs(c)} > 1: inconsistent coordinates")
    c = min(1.0, max(-1.0, c))
    if space.p == 1:
        sh = math.sinh(s) - 0.5 * math.exp(s) * y * y
        t = math.asinh(sh)
    else:
        t = math.acosh(max(1.0, cosh_t))
    return t, c


class Convergence(Enum):
    CONVERGES = "converges"
    CONVERGES_LOG = "converges_log"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ThetaBound:
    """Theta >= linear^2 + a * quartic^4 + b; which variable is quartic depends on the case."""

    a: float
    b: float
    quartic_var: str  # "x" in case A, "y" in case B

    def value(self, x: float, y: float) -> float:
        if self.quartic_var == "x":
            return y * y + self.a * x ** 4 + self.b
        return x * x + self.a * y ** 4 + self.b


def theta_lower_bound(space: SpaceParams, s: float) -> ThetaBound:
    """Certified lower bound for Theta used to truncate the improper integrals.

    For case A, or for s <= 0 in case B:  a = e^(2s)/4, b = cosh^2 s.
    For case B with s > 0:                a = 1/4,      b = 3/4.
    """
    if space.case_tag is Case.A:
        return ThetaBound(a=0.25 * math.exp(2.0 * s), b=math.cosh(s) ** 2, quartic_var="x")
    if s <= 0:
        return ThetaBound(a=0.25 * math.exp(2.0 * s), b=math.cosh(s) ** 2, quartic_var="y")
    return ThetaBound(a=0.25, b=0.75, quartic_var="y")


def convergence_criterion(a_exp: Real, b_exp: Real, c: Real, d: Real,
                          gamma: Real, delta: Real = 0) -> Convergence:
    """Integrability of (1 + x^a + y^b)^(-gamma) x^(c-1) y^(d-1) over the quadrant.

    Converges when c/a + d/b < gamma; with an extra factor
    (1 + log(1+x^a+y^b))^(-delta), delta > 1, also in the equality case.
    """
    for name, v in (("a", a_exp), ("b", b_exp), ("c", c), ("d", d), ("gamma", gamma)):
        if float(v) <= 0:
            raise ValueError(f"{name} must be positive")
    if all(isinstance(v, (int, Fraction)) for v in (a_exp, b_exp, c, d, gamma)):
        lhs_exact = Fraction(c) / Fraction(a_exp) + Fraction(d) / Fraction(b_exp)
        gamma_cmp = Fraction(gamma)
    else:
        lhs_exact = float(c) / float(a_exp) + float(d) / float(b_exp)
        gamma_cmp = float(gamma)
    if lhs_exact < gamma_cmp:
        return Convergence.CONVERGES
    if lhs_exact == gamma_cmp and float(delta) > 1.0:
        return Convergence.CONVERGES_LOG
    return Convergence.UNKNOWN
