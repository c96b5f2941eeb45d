"""Eventual coefficient positivity for homogeneous polynomials.

Decides and certifies the three positivity conditions (unit-vector
values, facet derivatives, strict modulus inequality off the rotated
orthant), scans powers p^m * q for all-positive coefficients, and
verifies polynomial spectral radius functions of matrices over
nonnegative-integer-coefficient polynomials.
"""

from .conditions import (Condition, ConditionReport, Pos3Mode, Pos3Options,
                         SgcsResult, Verdict, assoc_bihom_eval, check_pos1,
                         check_pos2, check_pos3, check_sgcs, facet_derivative,
                         max_squared_norm_diag)
from .eventual import (PositivityPattern, all_coeffs_positive, polya_exponent,
                       power_scan)
from .geometry import (amgm_check, difference_lattice_is_full, hessian_logf_fd,
                       is_positive_definite, jf_matrix, log_support,
                       newton_affine_dim, smith_invariant_factors)
from .intervals import Interval
from .poly import (MINUS_INFINITY, MultiIndex, ParseError, Polynomial,
                   dehomogenize, eval_complex, eval_complex_exact,
                   eval_interval, eval_rational, from_json, infer_nvars,
                   monomials_of_degree, parse, serialize, to_json)
from .spectral import (BetaReport, BetaVerdict, PolyMatrix, beta_at,
                       charpoly_residual, is_aperiodic, is_irreducible,
                       perron_bounds, verify_beta)

__version__ = "0.1.0"

__all__ = [
    "Condition", "ConditionReport", "Pos3Mode", "Pos3Options", "SgcsResult",
    "Verdict", "assoc_bihom_eval", "check_pos1", "check_pos2", "check_pos3",
    "check_sgcs", "facet_derivative", "max_squared_norm_diag",
    "PositivityPattern", "all_coeffs_positive", "polya_exponent", "power_scan",
    "amgm_check", "difference_lattice_is_full", "hessian_logf_fd",
    "is_positive_definite", "jf_matrix", "log_support", "newton_affine_dim",
    "smith_invariant_factors", "Interval", "MINUS_INFINITY", "MultiIndex",
    "ParseError", "Polynomial", "dehomogenize", "eval_complex",
    "eval_complex_exact", "eval_interval", "eval_rational", "from_json",
    "infer_nvars", "monomials_of_degree", "parse", "serialize", "to_json",
    "BetaReport", "BetaVerdict", "PolyMatrix", "beta_at", "charpoly_residual",
    "is_aperiodic", "is_irreducible", "perron_bounds", "verify_beta",
]
