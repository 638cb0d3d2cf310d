"""leroy-kit: entire-function evaluators around the Le Roy, Prabhakar,
Lerch, Legendre-chi and polygamma families, Borel-type transforms with
resummation of the divergent Euler series, and a machine-checkable registry
of the identities tying them together."""

from .errors import ConvergenceError, DomainError, LeroyKitError, PoleError
from .gamma_kernel import (
    GroundState,
    Nu,
    PhiPow,
    Psi,
    ground_eval,
    ln_gamma,
    pochhammer,
    rgamma_pow,
)
from .identity_harness import (
    IdentityReport,
    Profile,
    Status,
    gate_passes,
    registry_ids,
    reports_to_json,
    run_all,
    run_identity,
)
from .lerch_family import (
    EvalMethod,
    chi_c,
    chi_c_deriv2n,
    chi_s_deriv2n,
    chi_s_part,
    hermite_kdf,
    hurwitz_zeta,
    legendre_chi,
    lerch,
    lerch_deriv,
    lerch_gen,
    lerch_gen_deriv,
    polygamma,
    polygamma2,
    polylog,
    polylog_half,
    ti_gen,
    ti_gen_deriv,
)
from .leroy_family import leroy, leroy4, leroy_deriv, leroy_gen, prabhakar, prabhakar_deriv
from .quadrature import (
    QuadratureConfig,
    integrate_real_line,
    integrate_semi_inf,
    integrate_semi_inf_2d,
)
from .series_engine import (
    EvalResult,
    ImageKind,
    Method,
    UmbralImage,
    sum_image,
    sum_image_derivative,
)
from .transforms_resummation import (
    DivergentSeriesKind,
    DivergentSeriesSpec,
    borel_leroy_transform_gen,
    borel_transform_leroy,
    divergent_partial_sums,
    euler_d1_bar,
    euler_d2_bar,
    euler_d2_bar_gen,
    euler_ode_residual,
    gauss_transform,
    kolokoltsov_integral,
    prabhakar_gauss_closed_form,
    prabhakar_gauss_integral,
)

__version__ = "0.1.0"
