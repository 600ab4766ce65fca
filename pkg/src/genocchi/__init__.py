"""Exact higher-order Bernoulli, Euler and Genocchi polynomials, basis conversion
and an identity audit over the rationals."""

from .appell import (
    Family,
    FamilySpec,
    NumberTable,
    Polynomial,
    X,
    falling_factorial,
    genocchi_from_euler,
    higher_order_numbers,
    higher_order_polynomial,
    poly_derivative,
    poly_eval,
    poly_integrate,
    reflect,
)
from .audit import IdentityId, Tag, evaluate_identity, run_audit
from .basis import BasisExpansion, ProductPolynomialSpec, basis_set, from_basis, product_poly, to_basis
from .series import TruncatedSeries, base_series, series_invert, series_mul, series_pow

__version__ = "0.1.0"
