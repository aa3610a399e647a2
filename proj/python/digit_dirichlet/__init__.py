"""Dirichlet series of base-b digit sums.

Evaluation of Z_b, F_b, G_b on their meromorphic continuations, pole
catalogs with closed-form residues, and the Delange interpolation of the
digit-sum functions to real bases beta > 1.
"""

from ._core import (  # noqa: F401
    InvalidInput,
    NonConvergence,
    OutOfDomain,
    PoleError,
    SbetaTable,
    TableTooShort,
    bernoulli,
    build_sbeta_table,
    count_poles,
    cumulative_digit_sum,
    d_beta,
    delange_coefficient,
    differenced_digit_sum,
    digit_sum,
    f_beta,
    fb,
    g_beta,
    gamma,
    gamma_ratio,
    gb,
    h_beta,
    p_lambert,
    poles,
    s_beta,
    zb,
    zeta,
    zeta_derivative,
)

__all__ = [
    "InvalidInput",
    "NonConvergence",
    "OutOfDomain",
    "PoleError",
    "SbetaTable",
    "TableTooShort",
    "bernoulli",
    "build_sbeta_table",
    "count_poles",
    "cumulative_digit_sum",
    "d_beta",
    "delange_coefficient",
    "differenced_digit_sum",
    "digit_sum",
    "f_beta",
    "fb",
    "g_beta",
    "gamma",
    "gamma_ratio",
    "gb",
    "h_beta",
    "p_lambert",
    "poles",
    "s_beta",
    "zb",
    "zeta",
    "zeta_derivative",
]

__version__ = "0.1.0"
