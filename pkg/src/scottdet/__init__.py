"""Exact verification of the generalized Scott permanent/determinant identity.

The determinant det[prod_k (x_k y_i - z_j)**-1], with y the n-th roots of
unity and z the roots of z**n - xi**n, factors into sums of monomial
symmetric functions of x.  This package evaluates both sides in exact
cyclotomic arithmetic (or complex floats, or symbolically) and checks them.
"""

from .cyclotomic import (
    CycloField,
    ExactScalar,
    cyclotomic_field,
    cyclotomic_polynomial,
    root_of_unity_power,
)
from .errors import DegenerateInstanceError, UsageError
from .identity import (
    TheoremInstance,
    VerificationReport,
    borchardt_check,
    build_D_matrix,
    diagonal_factor,
    gaudin_G_direct,
    gaudin_matrix,
    gaudin_matrix_spec,
    scott_han_product,
    theorem_lhs,
    theorem_rhs,
    vandermonde,
    verify_theorem,
)
from .linalg import ScalarMatrix, field_det, ryser_permanent
from .poly import MultiPoly, RationalFunction
from .symfunc import (
    DiffAlphabet,
    complete_diff,
    complete_spec,
    monomial_sym,
    phi,
    pi_omega,
    schur_box_spec,
    schur_jacobi_trudi,
)

__version__ = "0.1.0"
