"""q-gamma / q-digamma special functions with certified truncation
errors, and a seeded verification harness for the inequality and
identity catalog built on them."""

from .context import Approx, QContext
from .errors import (
    BracketFailure,
    DomainViolation,
    InvalidArgument,
    NonConvergent,
    Overflow,
    QsfError,
    UnknownCheck,
)
from .qcore import phi10, q_bracket, qpoch_finite, qpoch_inf
from .qgamma import (
    classical_log_gamma,
    gamma_q,
    gamma_q_constant,
    log_gamma_q,
    psi_q,
    psi_q_deriv,
)
from .roots import RootResult, g_plus_minus_zero, gamma_min, psi_zero
from .identities import (
    IdentityResidual,
    check_jackson,
    check_moebius_product,
    check_pqn,
    check_psi_sum,
    check_q_gauss_product,
    divisors,
    moebius,
    totient,
)
from .catalog import (
    CatalogEntry,
    CheckOutcome,
    convexity_probe,
    list_entries,
    monotonicity_probe,
    run_check,
)
from .sampling import sample_params, substream
from .suite import SuiteConfig, SuiteReport, run_suite, serialize_report

__version__ = "0.1.0"

__all__ = [
    "Approx",
    "QContext",
    "QsfError",
    "InvalidArgument",
    "NonConvergent",
    "Overflow",
    "BracketFailure",
    "UnknownCheck",
    "DomainViolation",
    "q_bracket",
    "qpoch_finite",
    "qpoch_inf",
    "phi10",
    "log_gamma_q",
    "gamma_q",
    "psi_q",
    "psi_q_deriv",
    "gamma_q_constant",
    "classical_log_gamma",
    "RootResult",
    "psi_zero",
    "gamma_min",
    "g_plus_minus_zero",
    "totient",
    "moebius",
    "divisors",
    "IdentityResidual",
    "check_jackson",
    "check_q_gauss_product",
    "check_pqn",
    "check_psi_sum",
    "check_moebius_product",
    "CatalogEntry",
    "CheckOutcome",
    "list_entries",
    "run_check",
    "convexity_probe",
    "monotonicity_probe",
    "sample_params",
    "substream",
    "SuiteConfig",
    "SuiteReport",
    "run_suite",
    "serialize_report",
]
