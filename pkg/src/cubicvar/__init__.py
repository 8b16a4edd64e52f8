"""Exact variance certification for one-parameter cubic families over F_p."""

from .decomp import Eisenstein, TwoSquare, WrongResidueError, eisenstein, two_square
from .families import BothZeroError, FAMILY_TAGS, Family, PARAM_NAMES
from .fp_core import (
    BudgetExceededError,
    NotPrimeError,
    Poly,
    PrimeContext,
    TooSmallError,
    ZeroParameterError,
    ZeroPolynomialError,
    char_sum,
    is_prime,
    root_count,
)
from .jacobsthal import (
    ClosedForm,
    is_cube,
    phi2_brute,
    phi2_closed,
    psi3_brute,
    psi3_closed,
    rho_brute,
)
from .stats import EmptySampleError, mean, variance
from .theorems import (
    ClosedVariance,
    closed_variance,
    perturbed_dual,
    perturbed_pairs,
    var_depressed_const,
    var_perturbed,
    var_twisted_square,
    var_vary_const,
    var_vary_linear,
    var_vary_linear_6_4,
    var_vary_quad,
    var_vary_quad_6_2,
    var_vary_quad_b0,
)

__version__ = "0.1.0"
