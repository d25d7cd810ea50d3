"""Waiting-time distributions for two-color sampling, with and without replacement.

The centerpiece is the law of the number of draws beyond 2c needed to see at
least c balls of both colors in an urn of N balls (m of one color), together
with its five relatives, their samplers, mode structure, limiting
approximations, and maximum-likelihood estimation of m from one observation.
"""

from .approximations import (
    ApproxKind,
    ApproxSpec,
    approx_spec,
    convergence_sweep,
    gamma_approx_density,
    halfnormal_approx_density,
    maxnb_limit,
    normal_approx_params,
)
from .distributions import (
    BernoulliParams,
    Dist,
    PmfTable,
    UrnParams,
    cdf,
    exact_pmf,
    maxnb_pmf,
    maxnh_p0,
    maxnh_pmf,
    mean,
    minnb_pmf,
    minnh_pmf,
    nb_pmf,
    nh_pmf,
    pmf,
    pmf_table,
    quantile,
    support,
)
from .errors import DomainError, ParameterError
from .estimation import (
    Classification,
    CriticalPointReport,
    LikelihoodProfile,
    classify_critical_point,
    loglik_grad,
    loglik_hess,
    loglik_kernel,
    mle,
    phi,
    profile,
)
from .modes import ModeReport, local_modes, p0_p1_ratio, unimodal_m_range
from .urn_simulator import (
    Color,
    DrawOutcome,
    SimConfig,
    Xoshiro256StarStar,
    bernoulli_scheme,
    draw_until_both,
    draw_until_c_successes,
    draw_until_either,
    empirical_pmf,
    tv_distance,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxKind",
    "ApproxSpec",
    "BernoulliParams",
    "Classification",
    "Color",
    "CriticalPointReport",
    "Dist",
    "DomainError",
    "DrawOutcome",
    "LikelihoodProfile",
    "ModeReport",
    "ParameterError",
    "PmfTable",
    "SimConfig",
    "UrnParams",
    "Xoshiro256StarStar",
    "approx_spec",
    "bernoulli_scheme",
    "cdf",
    "classify_critical_point",
    "convergence_sweep",
    "draw_until_both",
    "draw_until_c_successes",
    "draw_until_either",
    "empirical_pmf",
    "exact_pmf",
    "gamma_approx_density",
    "halfnormal_approx_density",
    "local_modes",
    "loglik_grad",
    "loglik_hess",
    "loglik_kernel",
    "maxnb_limit",
    "maxnb_pmf",
    "maxnh_p0",
    "maxnh_pmf",
    "mean",
    "minnb_pmf",
    "minnh_pmf",
    "mle",
    "nb_pmf",
    "nh_pmf",
    "normal_approx_params",
    "p0_p1_ratio",
    "phi",
    "pmf",
    "pmf_table",
    "profile",
    "quantile",
    "support",
    "tv_distance",
    "unimodal_m_range",
]
