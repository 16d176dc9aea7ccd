"""Cuspidality of discrete series on real hyperbolic spaces X_{p,q}.

Exact parametrization and classification of the discrete series, generating
functions, numerically certified evaluation of the Radon transform over the
unipotent group N*, and the post-processing that reproduces the
cuspidal / non-cuspidal dichotomy.
"""

from .params import (Case, DiscreteSeriesParam, SpaceParams, Tag, classify,
                     enumerate_discrete_series, make_discrete_series,
                     make_space, mu_of)
from .specfun import (RadialForm, beta_integral, beta_linear_integral,
                      gamma_half_integer, laplacian_step, phi_nm, zonal,
                      zonal_coeffs)
from .genfun import (Angular, AngularKind, GeneratingFunction, Majorant,
                     decay_norm, make_bump, make_psi, make_xi)
from .geometry import (Convergence, ThetaBound, convergence_criterion,
                       recover_coords, theta, theta_lower_bound)
from .radon import (QuadratureConfig, RadonSample, Substitution,
                    ToleranceNotReached, divergence_witness,
                    limit_at_plus_infinity, radon_at, radon_substituted_B,
                    truncation_plan)
from .analysis import (RadonProfile, Verdict, compute_profile,
                       decide_cuspidality, exceptional_limit_oracle,
                       fit_exponentials, fit_single_exponential,
                       default_s_grid, verify_A_ode, verify_decay_lemma)

__version__ = "0.1.0"

__all__ = [
    "Angular", "AngularKind", "Case", "Convergence", "DiscreteSeriesParam",
    "GeneratingFunction", "Majorant", "QuadratureConfig", "RadialForm",
    "RadonProfile", "RadonSample", "SpaceParams", "Substitution", "Tag",
    "ThetaBound", "ToleranceNotReached", "Verdict", "beta_integral",
    "beta_linear_integral", "classify", "compute_profile", "convergence_criterion",
    "decay_norm", "decide_cuspidality", "default_s_grid", "divergence_witness",
    "enumerate_discrete_series", "exceptional_limit_oracle", "fit_exponentials",
    "fit_single_exponential", "gamma_half_integer", "laplacian_step",
    "limit_at_plus_infinity", "make_bump", "make_discrete_series", "make_psi",
    "make_space", "make_xi", "mu_of", "phi_nm", "radon_at",
    "radon_substituted_B", "recover_coords", "theta", "theta_lower_bound",
    "truncation_plan", "verify_A_ode", "verify_decay_lemma", "zonal",
    "zonal_coeffs",
]
