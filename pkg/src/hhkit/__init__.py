"""hhkit: coefficients and quadrature-backed verification of Hermite-Hadamard
type inequalities for harmonically (s,m)-convex functions."""

from .bounds import (
    CoefficientSet,
    Interval,
    VerificationRecord,
    coeff_C,
    coeff_lambda,
    coeff_mu,
    coeff_nu,
    coeff_rho,
    lemma_residual,
    verify_bound,
    verify_hh_double,
    verify_II1,
)
from .errors import (
    CertificationError,
    ConvergenceError,
    DomainError,
    InconclusiveError,
    ParameterError,
    ToleranceNotMetError,
)
from .functions import (
    CheckReport,
    FunctionSpec,
    SMParams,
    check_harmonic_sm_convex,
    check_prop1_implication,
    check_sm_convex,
    compose_g,
    harmonic_combine,
)
from .harness import (
    Finding,
    SweepConfig,
    SweepResult,
    build_adjudication_report,
    check_reductions,
    default_sweep_config,
    run_sweep,
    search_counterexample,
)
from .quadrature import QuadSpec, harmonic_mean_integral, integrate, kernel_K
from .specfun import Hyp2F1Args, beta, hyp2f1_euler, hyp2f1_series, ln_gamma

__version__ = "0.1.0"
