"""Radon transform over the unipotent group N* by certified adaptive quadrature.

The transform of a K cap H - invariant function reduces to

    Rf(s) = int_0^inf int_0^inf A(theta(s,x,y)) F(Theta(s,x,y)) x^alpha y^beta dx dy,

with the x-integral absent on degenerate spaces.  The engine integrates over
a finite box whose tail mass is certified in closed form from the lower
bound Theta >= linear^2 + a*quartic^4 + b, and evaluates each 1D integral
with QUADPACK through a scale-aware tangent substitution u = sigma*tan(phi):
the structural scale sigma keeps the transformed integrand well resolved no
matter how large the certified box is.

Coordinate changes from the convergence proofs are available as alternative
exact routes: the case-A rescaling (x, y) -> (xi, eta) with
Theta = cosh^2(s) (eta^2 + (1+xi^2)^2), and the case-B substitutions onto
Theta = 1 + x^2 + v^2 and Theta = 1 + e^(-2s)(u^2 + v^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional, Sequence, Union

from scipy.integrate import quad as _scipy_quad

from .genfun import Angular, AngularKind, GeneratingFunction, Majorant
from .geometry import theta_lower_bound
from .params import Case, SpaceParams
from .specfun import beta_integral, zonal

Number = Union[float, complex]


class Substitution(Enum):
    DIRECT = "Direct"
    COMPACTIFY_TAN = "CompactifyTan"
    PAPER_SUBST_A = "PaperSubstA"
    PAPER_SUBST_B_ZZ = "PaperSubstB_zz"
    PAPER_SUBST_B_UV = "PaperSubstB_uv"


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-8
    abs_tol: float = 1e-9
    max_subdivisions: int = 256
    truncation_margin: float = 0.5
    substitution: Optional[Substitution] = None  # None = per-case default

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")

    def with_overrides(self, **kw) -> "QuadratureConfig":
        return replace(self, **kw)


@dataclass(frozen=True)
class RadonSample:
    s: float
    value: Number
    error_estimate: float
    evaluations: int
    tail_bound: float = 0.0


class ToleranceNotReached(RuntimeError):
    """Quadrature failed to reach the requested tolerance; carries the best estimate."""

    def __init__(self, message: str, best: RadonSample):
        super().__init__(message)
        self.best = best


# ---------------------------------------------------------------------------
# 1D building block: scale-aware tangent-mapped QUADPACK
# ---------------------------------------------------------------------------


def _quad_finite(fn, lo, hi, epsabs, epsrel, limit, points=None):
    kwargs = {}
    if points:
        pts = sorted({p for p in points if lo < p < hi})
        if pts:
            kwargs["points"] = pts
    out = _scipy_quad(fn, lo, hi, epsabs=epsabs, epsrel=epsrel, limit=limit,
                      full_output=True, **kwargs)
    val, err = out[0], out[1]
    warned = len(out) > 3
    return val, err, warned


def tan_quad(fn: Callable[[float], float], upper: float, scale: float,
             epsabs: float, epsrel: float, limit: int = 256,
             points: Optional[Sequence[float]] = None):
    """integral_0^upper fn(x) dx via x = scale * tan(phi).

    The map compresses [0, upper] onto [0, atan(upper/scale)] so that mass
    sitting at the characteristic scale is always resolved by the rule,
    even for boxes spanning many decades.  ``points`` are x-space
    breakpoints passed through the map.
    """
    scale = max(scale, 1e-300)
    phimax = 0.5 * math.pi if math.isinf(upper) else math.atan(upper / scale)

    def g(phi: float) -> float:
        t = math.tan(phi)
        return fn(scale * t) * scale * (1.0 + t * t)

    mapped = [math.atan(p / scale) for p in points] if points else None
    return _quad_finite(g, 0.0, phimax, epsabs, epsrel, limit, mapped)


# ---------------------------------------------------------------------------
# certified truncation from the Theta lower bound
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncationPlan:
    x_max: float
    y_max: float
    tail_bound: float


def truncation_plan(space: SpaceParams, s: float, maj: Majorant,
                    cfg: QuadratureConfig) -> TruncationPlan:
    """Box [0, x_max] x [0, y_max] whose complement carries certified tail mass.

    Uses |F(Theta)| <= M * Theta^(-g), g = (rho+gamma)/2, together with
    Theta >= linear^2 + a*quartic^4 + b; both tail pieces are evaluated in
    closed beta-function form and each is pushed below half the truncation
    target margin * abs_tol.
    """
    if maj.gamma <= 0:
        raise ValueError("certified truncation requires a strictly positive decay margin")
    g = 0.5 * (float(space.rho) + maj.gamma)
    M = maj.M
    bound = theta_lower_bound(space, s)
    a = bound.a
    if space.case_tag is Case.A:
        wq, wl = space.alpha, space.beta  # quartic x, linear y
    else:
        wq, wl = space.beta, space.alpha  # quartic y, linear x
    target = cfg.truncation_margin * cfg.abs_tol

    if space.degenerate_x:
        if space.case_tag is Case.A:
            # Theta >= y^2 (+ b): single linear tail
            decay = 2.0 * g - space.beta - 1.0
            if decay <= 0:
                raise ValueError("tail not integrable: decay margin too small")
            R = (M / (decay * target)) ** (1.0 / decay)
            return TruncationPlan(x_max=0.0, y_max=max(R, 10.0), tail_bound=target)
        decay = 4.0 * g - space.beta - 1.0
        if decay <= 0:
            raise ValueError("tail not integrable: decay margin too small")
        R = (M * a ** (-g) / (decay * target)) ** (1.0 / decay)
        return TruncationPlan(x_max=0.0, y_max=max(R, 10.0), tail_bound=target)

    h_q = 0.25 * (wq + 1.0)
    h_l = 0.5 * (wl + 1.0)
    if g - h_q <= 0 or g - h_l <= 0 or g - h_q - h_l <= 0:
        raise ValueError("tail not integrable: decay margin too small")

    # linear variable beyond L: quartic integrated in full
    dec_lin = 2.0 * (g - h_q) - wl - 1.0
    K_lin = M * 0.25 * a ** (-h_q) * beta_integral(h_q, g)
    L = (K_lin / (dec_lin * 0.5 * target)) ** (1.0 / dec_lin)

    # quartic variable beyond Q: linear integrated in full
    dec_quar = 4.0 * (g - h_l) - wq - 1.0
    K_quar = M * 0.5 * a ** (h_l - g) * beta_integral(h_l, g)
    Q = (K_quar / (dec_quar * 0.5 * target)) ** (1.0 / dec_quar)

    L, Q = max(L, 10.0), max(Q, 10.0)
    if space.case_tag is Case.A:
        return TruncationPlan(x_max=Q, y_max=L, tail_bound=target)
    return TruncationPlan(x_max=L, y_max=Q, tail_bound=target)


# ---------------------------------------------------------------------------
# reduced integrands
# ---------------------------------------------------------------------------


def _angular_reduced(angular: Angular) -> Callable[[float, float], float]:
    """Angular factor as a function of (h, Theta) with cos theta = h / sqrt(Theta).

    For q = 1 the reduction to y = |v| averages the two points +-v of the
    0-sphere; the odd component of e^(i mu theta) cancels exactly and the
    even one is cos(mu theta), so the reduced transform is real with
    identically vanishing imaginary part.
    """
    kind = angular.kind
    if kind is AngularKind.CONSTANT:
        return lambda h, Th: 1.0
    if kind is AngularKind.COSINE:
        return lambda h, Th: h / math.sqrt(Th)
    if kind is AngularKind.ZONAL:
        mu, q = angular.mu, angular.q

        def zonal_factor(h: float, Th: float) -> float:
            return zonal(mu, q, h / math.sqrt(Th))

        return zonal_factor
    mu = abs(angular.mu)

    def cos_mu_theta(h: float, Th: float) -> float:
        c = min(1.0, max(-1.0, h / math.sqrt(Th)))
        return math.cos(mu * math.acos(c))

    return cos_mu_theta


def _scale_points_case(space: SpaceParams, s: float):
    ch = math.cosh(s)
    if space.case_tag is Case.A:
        sigma_y = math.sqrt(1.0 + ch * ch)
        return sigma_y, [1.0, ch]
    sigma_y = math.sqrt(1.0 + 2.0 * ch * math.exp(-s))
    return sigma_y, [1.0, math.sqrt(2.0 * ch * math.exp(-s)), ch]


def _support_points_y(space: SpaceParams, s: float, support_w: Optional[float]):
    """y-breakpoints marking the edge of a compact radial support.

    The region Theta <= W is contained in |h| <= sqrt(W) (plus y <= sqrt(W)
    in case B), which in the direct coordinates pins y near explicit edges;
    without these markers a narrow support far from the origin is invisible
    to the initial quadrature rule.
    """
    if support_w is None:
        return []
    rt = math.sqrt(support_w)
    ch = math.cosh(s)
    if space.case_tag is Case.A:
        return [math.sqrt(support_w - ch * ch)] if support_w > ch * ch else []
    lo = 2.0 * math.exp(-s) * (ch - rt)
    hi = 2.0 * math.exp(-s) * (ch + rt)
    pts = [math.sqrt(hi), rt]
    if lo > 0:
        pts.append(math.sqrt(lo))
    return pts


# ---------------------------------------------------------------------------
# the transform
# ---------------------------------------------------------------------------


def default_substitution(space: SpaceParams, s: float) -> Substitution:
    if space.case_tag is Case.B and s > 0:
        return Substitution.PAPER_SUBST_B_ZZ
    return Substitution.COMPACTIFY_TAN


def radon_at(f: GeneratingFunction, s: float,
             cfg: Optional[QuadratureConfig] = None) -> RadonSample:
    """Rf(s) = int_{N*} f(a_s n* H) dn* by nested adaptive quadrature.

    Requires a certified power-law decay margin on f (refused otherwise);
    the returned error estimate is the quadrature error plus the certified
    truncation tail.  Raises ToleranceNotReached, carrying the best
    estimate, when QUADPACK cannot meet the requested tolerance.
    """
    cfg = cfg or QuadratureConfig()
    space = f.space
    maj = f.majorant()
    if maj.gamma <= 0:
        raise ValueError("f does not satisfy the required decay; refusing to integrate")
    plan = truncation_plan(space, s, maj, cfg)
    sub = cfg.substitution or default_substitution(space, s)
    counter = [0]
    value, err, warned = _integrate_box(f, space, float(s), plan, cfg, sub, counter)
    total_err = err + plan.tail_bound
    if f.value_kind == "complex":
        out_value: Number = complex(value, 0.0)
    else:
        out_value = value
    sample = RadonSample(s=float(s), value=out_value, error_estimate=total_err,
                         evaluations=counter[0], tail_bound=plan.tail_bound)
    if warned and err > 10.0 * max(cfg.abs_tol, cfg.rel_tol * abs(value)):
        raise ToleranceNotReached(
            f"quadrature tolerance not reached at s={s} (err={err:.3e})", sample)
    return sample


def radon_substituted_B(f: GeneratingFunction, s: float,
                        cfg: Optional[QuadratureConfig] = None,
                        variant: str = "auto") -> RadonSample:
    """radon_at forced through a case-B substituted route ((zz) or (u,v))."""
    if f.space.case_tag is not Case.B:
        raise ValueError("substituted-B routes require a case-B space")
    cfg = cfg or QuadratureConfig()
    if variant == "zz":
        sub = Substitution.PAPER_SUBST_B_ZZ
    elif variant == "uv":
        sub = Substitution.PAPER_SUBST_B_UV
    elif variant == "auto":
        sub = Substitution.PAPER_SUBST_B_ZZ if s > 0 else Substitution.PAPER_SUBST_B_UV
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return radon_at(f, s, cfg.with_overrides(substitution=sub))


def _integrate_box(f, space, s, plan, cfg, sub, counter):
    if sub in (Substitution.DIRECT, Substitution.COMPACTIFY_TAN):
        return _route_direct(f, space, s, plan, cfg, counter,
                             use_tan=(sub is Substitution.COMPACTIFY_TAN))
    if sub is Substitution.PAPER_SUBST_A:
        if space.case_tag is not Case.A:
            raise ValueError("PaperSubstA requires a case-A space")
        return _route_subst_A(f, space, s, plan, cfg, counter)
    if sub is Substitution.PAPER_SUBST_B_ZZ:
        if space.case_tag is not Case.B:
            raise ValueError("PaperSubstB_zz requires a case-B space")
        return _route_zz(f, space, s, plan, cfg, counter)
    if sub is Substitution.PAPER_SUBST_B_UV:
        if space.case_tag is not Case.B:
            raise ValueError("PaperSubstB_uv requires a case-B space")
        return _route_uv(f, space, s, plan, cfg, counter)
    raise ValueError(f"unknown substitution {sub}")


def _inner_tols(cfg: QuadratureConfig, outer_scale: float):
    eab = cfg.abs_tol / (8.0 * max(1.0, outer_scale))
    erl = max(cfg.rel_tol / 8.0, 5e-14)
    return eab, erl


def _route_direct(f, space, s, plan, cfg, counter, use_tan=True):
    ang = _angular_reduced(f.angular)
    F = f.radial_value
    ch, es = math.cosh(s), math.exp(s)
    alpha, beta = space.alpha, space.beta
    case_a = space.case_tag is Case.A
    sigma_y, pts = _scale_points_case(space, s)
    pts = pts + _support_points_y(space, s, f.support_w)
    eab_in, erl_in = _inner_tols(cfg, sigma_y)
    warned = [False]

    if space.degenerate_x:
        def fy(y: float) -> float:
            counter[0] += 1
            h = ch if case_a else ch - 0.5 * es * y * y
            Th = y * y + h * h
            return ang(h, Th) * F(Th) * y ** beta

        if use_tan:
            v, e, w = tan_quad(fy, plan.y_max, sigma_y, cfg.abs_tol / 2, cfg.rel_tol,
                               cfg.max_subdivisions, pts)
        else:
            v, e, w = _quad_finite(fy, 0.0, plan.y_max, cfg.abs_tol / 2, cfg.rel_tol,
                                   cfg.max_subdivisions, _ladder(sigma_y, plan.y_max))
        return v, e, w

    def outer(y: float) -> float:
        if case_a:
            ybase = y * y
            sigma_x = math.sqrt(2.0 * math.exp(-s) * math.sqrt(ch * ch + ybase))

            def fx(x: float) -> float:
                counter[0] += 1
                h = ch + 0.5 * es * x * x
                Th = ybase + h * h
                return ang(h, Th) * F(Th) * x ** alpha
        else:
            h = ch - 0.5 * es * y * y
            base = y * y + h * h
            sigma_x = math.sqrt(1.0 + base)

            def fx(x: float) -> float:
                counter[0] += 1
                Th = x * x + base
                return ang(h, Th) * F(Th) * x ** alpha

        if use_tan:
            v, e, w = tan_quad(fx, plan.x_max, sigma_x, eab_in, erl_in,
                               cfg.max_subdivisions)
        else:
            v, e, w = _quad_finite(fx, 0.0, plan.x_max, eab_in, erl_in,
                                   cfg.max_subdivisions, _ladder(sigma_x, plan.x_max))
        warned[0] = warned[0] or w
        return v * y ** beta

    if use_tan:
        v, e, w = tan_quad(outer, plan.y_max, sigma_y, cfg.abs_tol / 2, cfg.rel_tol,
                           cfg.max_subdivisions, pts)
    else:
        v, e, w = _quad_finite(outer, 0.0, plan.y_max, cfg.abs_tol / 2, cfg.rel_tol,
                               cfg.max_subdivisions, _ladder(sigma_y, plan.y_max))
    return v, e, (w or warned[0])


def _ladder(scale: float, upper: float) -> list[float]:
    """Geometric breakpoints for raw-coordinate quadrature over huge ranges."""
    pts = []
    p = max(scale, 1e-6)
    while p < upper:
        pts.append(p)
        p *= 4.0
    return pts[:200]


def _route_subst_A(f, space, s, plan, cfg, counter):
    """Case-A rescaling x = kappa*xi, y = cosh(s)*eta, Theta = cosh^2 s (eta^2+(1+xi^2)^2)."""
    ang = _angular_reduced(f.angular)
    F = f.radial_value
    ch = math.cosh(s)
    kappa = math.sqrt(2.0 * math.exp(-s) * ch)
    alpha, beta = space.alpha, space.beta
    ch2 = ch * ch
    pref = ch ** (beta + 1.0)
    eta_max = plan.y_max / ch
    pts = []
    if f.support_w is not None and f.support_w > ch2:
        pts = [math.sqrt(f.support_w - ch2) / ch]
    warned = [False]

    if space.degenerate_x:
        def feta(eta: float) -> float:
            counter[0] += 1
            Th = ch2 * (eta * eta + 1.0)
            return ang(ch, Th) * F(Th) * eta ** beta

        v, e, w = tan_quad(feta, eta_max, 1.0, cfg.abs_tol / (2 * pref), cfg.rel_tol,
                           cfg.max_subdivisions, pts)
        return pref * v, pref * e, w

    pref *= kappa ** (alpha + 1.0)
    xi_max = plan.x_max / kappa
    eab_in, erl_in = _inner_tols(cfg, 1.0)

    def outer(eta: float) -> float:
        ee = eta * eta
        sigma_xi = max(1.0, (1.0 + ee) ** 0.25)

        def fxi(xi: float) -> float:
            counter[0] += 1
            z = 1.0 + xi * xi
            Th = ch2 * (ee + z * z)
            return ang(ch * z, Th) * F(Th) * xi ** alpha

        v, e, w = tan_quad(fxi, xi_max, sigma_xi, eab_in, erl_in, cfg.max_subdivisions)
        warned[0] = warned[0] or w
        return v * eta ** beta

    v, e, w = tan_quad(outer, eta_max, 1.0, cfg.abs_tol / (2 * pref), cfg.rel_tol,
                       cfg.max_subdivisions, pts)
    return pref * v, pref * e, (w or warned[0])


def _route_zz(f, space, s, plan, cfg, counter):
    """Case-B route through v = -sinh s + e^s y^2 / 2, Theta = 1 + x^2 + v^2.

    In the shifted variable w = v + sinh s one has exactly y^2 = 2 e^(-s) w
    and cos-theta numerator h = cosh s - w, so the integrand is free of the
    cancellation that afflicts the direct form for large |s|.
    """
    ang = _angular_reduced(f.angular)
    F = f.radial_value
    ch, es = math.cosh(s), math.exp(s)
    sh = math.sinh(s)
    alpha, beta = space.alpha, space.beta
    bexp = 0.5 * (beta - 1.0)
    w_max = 0.5 * es * plan.y_max ** 2
    pref = math.exp(-s) * (2.0 * math.exp(-s)) ** bexp
    sigma_w = math.sqrt(1.0 + sh * sh)
    pts = [1.0, ch]
    if f.support_w is not None:
        rt = math.sqrt(f.support_w)
        pts += [ch - rt, ch + rt]
    warned = [False]

    if space.degenerate_x:
        def fw(w: float) -> float:
            counter[0] += 1
            v = w - sh
            Th = 1.0 + v * v
            h = ch - w
            return ang(h, Th) * F(Th) * w ** bexp

        v, e, wn = tan_quad(fw, w_max, sigma_w, cfg.abs_tol / (2 * pref), cfg.rel_tol,
                            cfg.max_subdivisions, pts)
        return pref * v, pref * e, wn

    eab_in, erl_in = _inner_tols(cfg, sigma_w)

    def outer(w: float) -> float:
        v0 = w - sh
        base = 1.0 + v0 * v0
        h = ch - w
        sigma_x = math.sqrt(base)

        def fx(x: float) -> float:
            counter[0] += 1
            Th = base + x * x
            return ang(h, Th) * F(Th) * x ** alpha

        vv, ee, wn = tan_quad(fx, plan.x_max, sigma_x, eab_in, erl_in,
                              cfg.max_subdivisions)
        warned[0] = warned[0] or wn
        return vv * w ** bexp

    v, e, wn = tan_quad(outer, w_max, sigma_w, cfg.abs_tol / (2 * pref), cfg.rel_tol,
                        cfg.max_subdivisions, pts)
    return pref * v, pref * e, (wn or warned[0])


def _route_uv(f, space, s, plan, cfg, counter):
    """Case-B route through u = e^s x, v = (1 + e^(2s)(y^2-1))/2.

    Theta = 1 + e^(-2s)(u^2 + v^2); with w = v - (1-e^(2s))/2 the measure
    factor is exactly (2w)^((beta-1)/2) and h = cosh s - e^(-s) w.  This is
    the coordinate system of the exceptional-limit computations.
    """
    ang = _angular_reduced(f.angular)
    F = f.radial_value
    ch, es = math.cosh(s), math.exp(s)
    ems = math.exp(-s)
    alpha, beta = space.alpha, space.beta
    bexp = 0.5 * (beta - 1.0)
    v_lo = 0.5 * (1.0 - es * es)
    w_max = 0.5 * es * es * plan.y_max ** 2
    sigma_w = 0.5 + abs(v_lo)
    pts = []
    if f.support_w is not None:
        rt = math.sqrt(f.support_w)
        pts = [es * (ch - rt), es * (ch + rt)]
    warned = [False]

    if space.degenerate_x:
        pref = math.exp(-s * (beta + 1.0)) * 2.0 ** bexp

        def fw(w: float) -> float:
            counter[0] += 1
            v = v_lo + w
            Th = 1.0 + ems * ems * v * v
            h = ch - ems * w
            return ang(h, Th) * F(Th) * w ** bexp

        v, e, wn = tan_quad(fw, w_max, sigma_w, cfg.abs_tol / (2 * pref), cfg.rel_tol,
                            cfg.max_subdivisions, pts)
        return pref * v, pref * e, wn

    pref = math.exp(-s * (alpha + beta + 2.0)) * 2.0 ** bexp
    u_max = es * plan.x_max
    eab_in, erl_in = _inner_tols(cfg, sigma_w)

    def outer(w: float) -> float:
        v0 = v_lo + w
        base = 1.0 + ems * ems * v0 * v0
        h = ch - ems * w
        sigma_u = math.sqrt(es * es + v0 * v0)

        def fu(u: float) -> float:
            counter[0] += 1
            Th = base + ems * ems * u * u
            return ang(h, Th) * F(Th) * u ** alpha

        vv, ee, wn = tan_quad(fu, u_max, sigma_u, eab_in, erl_in, cfg.max_subdivisions)
        warned[0] = warned[0] or wn
        return vv * w ** bexp

    v, e, wn = tan_quad(outer, w_max, sigma_w, cfg.abs_tol / (2 * pref), cfg.rel_tol,
                        cfg.max_subdivisions, pts)
    return pref * v, pref * e, (wn or warned[0])


# ---------------------------------------------------------------------------
# limits and the full-N divergence witness
# ---------------------------------------------------------------------------


def limit_at_plus_infinity(f: GeneratingFunction,
                           cfg: Optional[QuadratureConfig] = None) -> float:
    """lim_{s->inf} e^s Rf(s) for p < q and K-invariant f, evaluated directly.

    The limit equals int_0^inf int_R F(1 + x^2 + v^2) x^alpha dv dx (without
    the x-integral on degenerate spaces); positivity for positive f is part
    of the structure theory and is exercised by the tests.
    """
    cfg = cfg or QuadratureConfig()
    space = f.space
    if not space.p < space.q:
        raise ValueError("the e^s Rf(s) limit requires p < q")
    if not f.is_k_invariant:
        raise ValueError("the limit formula requires a K-invariant function")
    F = f.radial_value
    alpha = space.alpha
    counter = [0]

    if space.degenerate_x:
        def fv(v: float) -> float:
            counter[0] += 1
            return F(1.0 + v * v)

        val, err, _ = tan_quad(fv, math.inf, 1.0, cfg.abs_tol, cfg.rel_tol,
                               cfg.max_subdivisions)
        return 2.0 * val

    eab_in, erl_in = _inner_tols(cfg, 1.0)

    def outer(v: float) -> float:
        base = 1.0 + v * v

        def fx(x: float) -> float:
            counter[0] += 1
            return F(base + x * x) * x ** alpha

        val, err, _ = tan_quad(fx, math.inf, math.sqrt(base), eab_in, erl_in,
                               cfg.max_subdivisions)
        return val

    val, err, _ = tan_quad(outer, math.inf, 1.0, cfg.abs_tol, cfg.rel_tol,
                           cfg.max_subdivisions)
    return 2.0 * val


def divergence_witness(space: SpaceParams, nu: float,
                       T_list: Sequence[float],
                       rel_tol: float = 1e-7) -> list[float]:
    """Truncated full-N integrals I(T) witnessing Lemma-level divergence.

    I(T) = int_0^T int_0^T (y^2 + (1 + (x^2-y^2)/2)^2)^(-(rho+nu)/2)
           x^(p-2) y^(q-1) dx dy.

    For 0 < nu <= (p+q-3)/2 the values grow without bound (the mass rides
    the ridge x ~ y); larger nu gives the convergent contrast case.
    """
    if not (space.p > 1 and space.p + space.q > 3):
        raise ValueError("divergence witness requires p > 1 and p+q > 3")
    if nu <= 0:
        raise ValueError("nu must be positive")
    g = 0.5 * (float(space.rho) + nu)
    pe, qe = space.p - 2, space.q - 1
    out = []
    for T in T_list:
        def inner(y: float) -> float:
            ridge = math.sqrt(max(y * y - 2.0, 0.25))

            def fx(x: float) -> float:
                w = 1.0 + 0.5 * (x * x - y * y)
                return (y * y + w * w) ** (-g) * x ** pe

            v, _, _ = _quad_finite(fx, 0.0, T, 1e-12, rel_tol / 4, 512,
                                   [ridge - 2.0 / max(y, 1.0), ridge,
                                    ridge + 2.0 / max(y, 1.0)])
            return v * y ** qe

        v, _, _ = _quad_finite(inner, 0.0, T, 1e-11, rel_tol, 512,
                               [1.0, 0.5 * T])
        out.append(v)
    return out
