"""Post-processing of Radon profiles: fits, verdicts, ODE and limit oracles.

An eigenfunction input forces Rf onto the two-exponential model

    Rf(s) = C1 * e^((-rho1 + lambda) s) + C2 * e^((-rho1 - lambda) s),

equivalently the flat ODE (d/ds)^2 Af = lambda^2 Af for Af = e^(rho1 s) Rf.
The fits here are linear least squares in (C1, C2) with the exponents fixed;
a free-exponent single-exponential fit is kept as a diagnostic.  The
exceptional limit constants are recomputed through the substituted limit
integrals (beta closed form in the odd case) as independent oracles.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .genfun import GeneratingFunction, make_psi, make_xi
from .params import Case, DiscreteSeriesParam, SpaceParams, Tag
from .radon import QuadratureConfig, RadonSample, radon_at, tan_quad
from .specfun import beta_linear_integral

Number = Union[float, complex]


class Verdict:
    CUSPIDAL = "CuspidalNumeric"
    NON_CUSPIDAL = "NonCuspidalNumeric"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class RadonProfile:
    space: SpaceParams
    ds: Optional[DiscreteSeriesParam]
    samples: list[RadonSample] = field(default_factory=list)
    C1: Number = 0.0
    C2: Number = 0.0
    residual: float = 0.0
    verdict: str = Verdict.INCONCLUSIVE

    @property
    def s_values(self) -> np.ndarray:
        return np.array([smp.s for smp in self.samples])

    @property
    def values(self) -> np.ndarray:
        return np.array([smp.value for smp in self.samples])

    @property
    def max_error(self) -> float:
        return max((smp.error_estimate for smp in self.samples), default=0.0)


def default_s_grid(space: SpaceParams, h: float = 0.25) -> list[float]:
    """Uniform grid [-4, 4] in case A, [-6, 2] in case B (slower positive-s decay)."""
    lo, hi = (-4.0, 4.0) if space.case_tag is Case.A else (-6.0, 2.0)
    n = int(round((hi - lo) / h))
    return [lo + i * h for i in range(n + 1)]


def _workers_from_env() -> int:
    try:
        return max(1, int(os.environ.get("CUSPIDAL_RADON_THREADS", "1")))
    except ValueError:
        return 1


def compute_profile(f: GeneratingFunction, s_grid: Sequence[float],
                    cfg: Optional[QuadratureConfig] = None,
                    workers: Optional[int] = None) -> RadonProfile:
    """Evaluate Rf on a grid; sample order follows the grid deterministically."""
    cfg = cfg or QuadratureConfig()
    workers = workers if workers is not None else _workers_from_env()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            samples = list(pool.map(lambda s: radon_at(f, s, cfg), s_grid))
    else:
        samples = [radon_at(f, s, cfg) for s in s_grid]
    return RadonProfile(space=f.space, ds=f.ds, samples=samples)


# ---------------------------------------------------------------------------
# fitting
# ---------------------------------------------------------------------------


def fit_exponentials(profile: RadonProfile, lam: float, rho1: float):
    """Weighted linear LSQ of the two-exponential model with fixed exponents.

    Returns (C1, C2, residual); the residual is the weighted RMS misfit
    relative to the sample scale.  Raises on an ill-conditioned design
    (lambda too small or the s-range too short to separate the exponents).
    """
    lam = float(lam)
    rho1 = float(rho1)
    if len(profile.samples) < 4:
        raise ValueError("need at least 4 samples to fit two exponentials")
    if lam == 0:
        raise ValueError("lambda must be nonzero (exponents must be distinct)")
    s = profile.s_values
    vals = profile.values
    errs = np.array([smp.error_estimate for smp in profile.samples])
    scale = float(np.abs(vals).max())
    if scale == 0.0:
        profile.C1, profile.C2, profile.residual = 0.0, 0.0, 0.0
        return 0.0, 0.0, 0.0
    floor = max(errs.max(), 1e-300) * 1e-3 + 1e-300
    wts = 1.0 / np.maximum(errs, floor)
    design = np.column_stack([np.exp((-rho1 + lam) * s), np.exp((-rho1 - lam) * s)])
    A = design * wts[:, None]
    cond = np.linalg.cond(A)
    if not np.isfinite(cond) or cond > 1e12:
        raise ValueError(f"ill-conditioned two-exponential design (cond={cond:.2e}); "
                         "widen the s-range or check lambda")

    complex_vals = np.iscomplexobj(vals)
    def solve(rhs):
        coef, *_ = np.linalg.lstsq(A, rhs * wts, rcond=None)
        return coef

    if complex_vals:
        cr = solve(vals.real)
        ci = solve(vals.imag)
        C = cr + 1j * ci
        fitted = design @ C
    else:
        C = solve(vals.astype(float))
        fitted = design @ C
    misfit = (vals - fitted) * wts
    residual = float(np.sqrt(np.mean(np.abs(misfit) ** 2)) / (wts.max() * scale))
    C1, C2 = (complex(C[0]), complex(C[1])) if complex_vals else (float(C[0]), float(C[1]))
    profile.C1, profile.C2, profile.residual = C1, C2, residual
    return C1, C2, residual


def fit_single_exponential(profile: RadonProfile):
    """Free-exponent diagnostic fit log|Rf| ~ log C + kappa s on usable samples.

    Returns (C_signed, kappa).  Samples indistinguishable from quadrature
    noise are excluded.
    """
    s = profile.s_values
    vals = profile.values
    mags = np.abs(vals)
    errs = np.array([smp.error_estimate for smp in profile.samples])
    mask = mags > 20.0 * np.maximum(errs, 1e-300)
    if mask.sum() < 3:
        raise ValueError("too few samples above noise for a free-exponent fit")
    kappa, logc = np.polyfit(s[mask], np.log(mags[mask]), 1)
    sign = np.sign(np.real(vals[mask][np.argmax(mags[mask])]))
    return float(sign * math.exp(logc)), float(kappa)


@dataclass(frozen=True)
class VerdictTolerances:
    """Noise-anchored thresholds: both scale with the worst sample error."""

    vanish_factor: float = 1e3
    signal_factor: float = 1e6


def decide_cuspidality(profile: RadonProfile,
                       tolerances: VerdictTolerances = VerdictTolerances()) -> str:
    """Verdict from a fitted profile.

    vanish_tol = vanish_factor * max error estimate, signal_tol likewise.
    Cuspidal: every |Rf| sample below vanish_tol.  Non-cuspidal: the fitted
    C1 contributes above signal_tol somewhere on the grid while the C2
    contribution stays below vanish_tol.  The coefficient magnitudes are
    measured through their largest basis-function contribution on the grid,
    so the verdict does not depend on where the grid sits.
    """
    err = profile.max_error
    vanish_tol = tolerances.vanish_factor * err
    signal_tol = tolerances.signal_factor * err
    mags = np.abs(profile.values)
    if mags.size == 0:
        return Verdict.INCONCLUSIVE
    if float(mags.max()) <= vanish_tol:
        profile.verdict = Verdict.CUSPIDAL
        return profile.verdict
    if profile.ds is not None:
        lam = float(profile.ds.lam)
        rho1 = float(profile.space.rho1)
        s = profile.s_values
        a1 = abs(profile.C1) * float(np.exp((-rho1 + lam) * s).max())
        a2 = abs(profile.C2) * float(np.exp((-rho1 - lam) * s).max())
        if a1 > signal_tol and a2 <= vanish_tol:
            profile.verdict = Verdict.NON_CUSPIDAL
            return profile.verdict
    profile.verdict = Verdict.INCONCLUSIVE
    return profile.verdict


# ---------------------------------------------------------------------------
# ODE verification
# ---------------------------------------------------------------------------


def verify_A_ode(profile: RadonProfile, lam: float) -> float:
    """Max relative defect of (d/ds)^2 Af = lambda^2 Af on the sample grid.

    Af(s) = e^(rho1 s) Rf(s); the second derivative is the central
    difference, so the defect of an exact profile is O(h^2) plus quadrature
    noise.  Requires a uniform grid.
    """
    lam = float(lam)
    s = profile.s_values
    if len(s) < 3:
        raise ValueError("need at least 3 samples")
    hs = np.diff(s)
    h = hs[0]
    if not np.allclose(hs, h, rtol=1e-9, atol=1e-12):
        raise ValueError("grid must be uniform")
    rho1 = float(profile.space.rho1)
    vals = profile.values
    A = np.exp(rho1 * s) * vals
    lam2 = lam * lam
    second = (A[:-2] - 2.0 * A[1:-1] + A[2:]) / (h * h)
    target = lam2 * A[1:-1]
    floor = lam2 * (np.abs(A).max() * 1e-6 + 1e-300)
    defect = np.abs(second - target) / (np.abs(target) + floor)
    return float(defect.max())


# ---------------------------------------------------------------------------
# exceptional limit oracles
# ---------------------------------------------------------------------------


def exceptional_limit_oracle(space: SpaceParams, ds: DiscreteSeriesParam,
                             gen: Optional[GeneratingFunction] = None,
                             cfg: Optional[QuadratureConfig] = None) -> float:
    """Predicted C1 = lim_{s->-inf} e^((rho1-lambda)s) R xi_lambda(s).

    Both cases use c = leading coefficient of the (normalized) polynomial
    P_lambda.  Odd case: c times the product of the two 1D integrals of the
    substituted limit, the first by quadrature and the second in beta
    closed form with k = (beta+1)/2, l = lambda+rho-alpha (times the exact
    power of two from v = (1+y)/2).  Even case: c times the limit integral
    by direct quadrature.  On degenerate spaces the u-integral is absent.
    """
    cfg = cfg or QuadratureConfig()
    xi = gen if gen is not None else make_xi(space, ds)
    radial = xi.radial
    c = float(radial.leading_coefficient)  # type: ignore[union-attr]
    lam = float(ds.lam)
    rho = float(space.rho)
    alpha, beta = space.alpha, space.beta
    odd = ds.n is not None and ds.n % 2 == 1

    if odd:
        k = 0.5 * (beta + 1.0)
        l = lam + rho - alpha
        v_part = 2.0 ** (lam + rho - alpha - 2.0) * beta_linear_integral(k, l)
        if space.degenerate_x:
            return c * v_part
        gexp = 0.5 * (lam + rho + 1.0)

        def fx(x: float) -> float:
            return (1.0 + x * x) ** (-gexp) * x ** alpha

        u_part, _, _ = tan_quad(fx, math.inf, 1.0, cfg.abs_tol, cfg.rel_tol,
                                cfg.max_subdivisions)
        return c * u_part * v_part

    # even case: quadrature of the limit integral over v >= 1/2 (and u >= 0)
    gexp = lam + rho
    bexp = 0.5 * (beta - 1.0)
    if space.degenerate_x:
        def fv(w: float) -> float:
            v = 0.5 + w
            return v ** (-gexp) * (2.0 * w) ** bexp

        val, _, _ = tan_quad(fv, math.inf, 1.0, cfg.abs_tol, cfg.rel_tol,
                             cfg.max_subdivisions)
        return c * val

    def outer(w: float) -> float:
        v = 0.5 + w
        base = v * v

        def fu(u: float) -> float:
            return (base + u * u) ** (-0.5 * gexp) * u ** alpha

        val, _, _ = tan_quad(fu, math.inf, v, cfg.abs_tol, cfg.rel_tol / 4,
                             cfg.max_subdivisions)
        return val * (2.0 * w) ** bexp

    val, _, _ = tan_quad(outer, math.inf, 1.0, cfg.abs_tol, cfg.rel_tol,
                         cfg.max_subdivisions)
    return c * val


# ---------------------------------------------------------------------------
# decay-lemma check
# ---------------------------------------------------------------------------


def verify_decay_lemma(f: GeneratingFunction, gamma: float, s_grid: Sequence[float],
                       cfg: Optional[QuadratureConfig] = None) -> bool:
    """Boundedness of e^(rho1 s) |Rf(s)| (cosh s)^(gamma - eps), eps = gamma/2.

    Fits the constant as the max ratio over the grid and reports whether the
    ratio sequence shows no growth trend toward the grid ends (the lemma's
    inequality with the grid-calibrated constant).
    """
    cfg = cfg or QuadratureConfig()
    rho1 = float(f.space.rho1)
    eps = 0.5 * gamma
    ratios = []
    for s in s_grid:
        smp = radon_at(f, s, cfg)
        bound = math.cosh(s) ** (-gamma + eps)
        ratios.append(abs(smp.value) * math.exp(rho1 * s) / bound)
    return not _has_growth_trend(np.asarray(ratios))


def _has_growth_trend(vals: np.ndarray, window: int = 4, factor: float = 3.0) -> bool:
    """True if the last ``window`` entries increase monotonically and leave the bulk."""
    if len(vals) <= window:
        return False
    tail = vals[-window:]
    increasing = bool(np.all(np.diff(tail) > 0))
    bulk = float(np.max(vals[:-window]))
    return increasing and float(tail[-1]) > factor * max(bulk, 1e-300)
