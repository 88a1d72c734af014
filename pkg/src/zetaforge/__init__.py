"""zetaforge: Zolotarev zeta-distances for finite-support laws.

Finite-support probability laws, their zeta_s distances (s = 1..4) to each
other and to the standard normal, the extremal two-point function B(rho)
with its bound catalog, Krawtchouk/binomial identities, osculatory
third-moment inequalities, extreme-point reduction, and a randomized
verification harness with a CLI front end.
"""

from .bounds import (BoundReport, charfn_bound, improvement_n_min, main_rhs,
                     noniid_binomial_normal_rhs, normal_rhs, partial_sum_gap,
                     prod_cos_margin, random_standardized_law, reports_to_csv,
                     run_suite, taylor_charfn_bound, tyurin_rhs, verify_main)
from .errors import ZetaForgeError
from .extremal import (ClassicalConstants, ExtremalParams, a_value, b_value,
                       classical_constants, extremal_params, g_function,
                       span_value, two_point_mass)
from .krawtchouk import binom_abs3, binom_mass, kraw_eval, kraw_partial_sum
from .laws import (DiscreteLaw, MomentSummary, binomial_half, catalog_rho,
                   convolve, cumulant, dirac, law_from_json, law_to_json,
                   load_law, make_discrete, moments, rademacher, save_law,
                   scale_law, standardize, two_point_law)
from .osculation import (HermitePoly, OsculCoeffs, dominance_check,
                         hermite_two_point, oscul_coeffs,
                         recentered_abs3_bound)
from .reduction import (ConvexDecomposition, SearchResult,
                        extreme_point_decompose, extremal_three_point_search,
                        richter_reduce)
from .zeta import (NORMAL, EpsilonN, PiecewisePoly, SignChangeReport,
                   TailFunction, epsilon_n, hbar, normal_tail, s_convex_le,
                   sign_changes, smoothing_constant, tail_function,
                   weighted_variation, zeta_discrete, zeta_vs_normal)

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "ClassicalConstants", "ConvexDecomposition", "DiscreteLaw",
    "EpsilonN", "ExtremalParams", "HermitePoly", "MomentSummary", "NORMAL",
    "OsculCoeffs", "PiecewisePoly", "SearchResult", "SignChangeReport",
    "TailFunction", "ZetaForgeError", "a_value", "b_value", "binom_abs3",
    "binom_mass", "binomial_half", "catalog_rho", "charfn_bound",
    "classical_constants", "convolve", "cumulant", "dirac", "dominance_check",
    "epsilon_n", "extremal_params", "extremal_three_point_search",
    "extreme_point_decompose", "g_function", "hbar", "hermite_two_point",
    "improvement_n_min", "kraw_eval", "kraw_partial_sum", "law_from_json",
    "law_to_json", "load_law", "main_rhs", "make_discrete", "moments",
    "noniid_binomial_normal_rhs", "normal_rhs", "normal_tail",
    "oscul_coeffs", "partial_sum_gap", "prod_cos_margin", "rademacher",
    "random_standardized_law", "recentered_abs3_bound", "reports_to_csv",
    "richter_reduce", "run_suite", "s_convex_le", "save_law", "scale_law",
    "sign_changes", "smoothing_constant", "span_value", "standardize",
    "tail_function", "taylor_charfn_bound", "two_point_law",
    "two_point_mass", "tyurin_rhs", "verify_main", "weighted_variation",
    "zeta_discrete", "zeta_vs_normal",
]
