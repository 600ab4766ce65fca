"""Higher-order polynomial bases, change of basis and the product polynomials.

:func:`to_basis` is the authoritative conversion (top-down triangular
back-substitution).  The derivative-based coefficient formulas and the closed
forms for the product polynomials live beside it as independent operations so
they can be checked against it rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Optional, Tuple, Union

from .appell import (
    X,
    Family,
    FamilySpec,
    InvalidSpecError,
    Polynomial,
    higher_order_numbers,
    higher_order_polynomial,
    poly_derivative,
    poly_eval,
)

__all__ = [
    "BasisExpansion",
    "ProductPolynomialSpec",
    "basis_offset",
    "basis_set",
    "to_basis",
    "from_basis",
    "product_poly",
    "product_poly_derivative_closed_form",
    "coeff_bernoulli_paper",
    "coeff_euler_paper",
    "coeff_genocchi_paper",
    "nth_derivative",
]


def _check_family_order(spec: FamilySpec) -> None:
    if spec.family is Family.GENOCCHI and spec.order_k < 1:
        raise InvalidSpecError("the Genocchi basis needs order k >= 1")


def basis_offset(spec: FamilySpec) -> int:
    return spec.order_k if spec.family is Family.GENOCCHI else 0


def basis_set(spec: FamilySpec, n: int) -> List[Polynomial]:
    """Basis of polynomials of degree <= n, element ``d`` having degree exactly ``d``.

    For Genocchi of order k the elements are ``G_k^k .. G_{n+k}^k``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_family_order(spec)
    off = basis_offset(spec)
    return [higher_order_polynomial(spec, off + d) for d in range(n + 1)]


@dataclass(frozen=True)
class BasisExpansion:
    spec: FamilySpec
    degree_bound: int
    offset: int
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        if len(self.coefficients) != self.degree_bound + 1:
            raise ValueError("coefficient count must be degree_bound + 1")

    def coefficient(self, j: int) -> Fraction:
        """Coefficient attached to the basis polynomial of index ``j`` (offset included)."""
        return self.coefficients[j - self.offset]

    @classmethod
    def from_coefficients(cls, spec: FamilySpec, coefficients) -> "BasisExpansion":
        cs = tuple(coefficients)
        return cls(spec, len(cs) - 1, basis_offset(spec), cs)


def to_basis(p: Polynomial, spec: FamilySpec, degree_bound: Optional[int] = None) -> BasisExpansion:
    n = max(p.degree, 0) if degree_bound is None else degree_bound
    if p.degree > n:
        raise ValueError(f"polynomial of degree {p.degree} exceeds degree bound {n}")
    basis = basis_set(spec, n)
    residual = list(p.coeffs) + [Fraction(0)] * (n + 1 - len(p.coeffs))
    coeffs = [Fraction(0)] * (n + 1)
    for d in range(n, -1, -1):
        b = basis[d]
        c = residual[d] / b.coeffs[d]
        coeffs[d] = c
        if c:
            for i in range(d + 1):
                residual[i] -= c * b.coeffs[i]
    return BasisExpansion(spec, n, basis_offset(spec), coeffs)


def from_basis(e: BasisExpansion) -> Polynomial:
    basis = basis_set(e.spec, e.degree_bound)
    acc = Polynomial()
    for c, b in zip(e.coefficients, basis):
        if c:
            acc = acc + b * c
    return acc


@dataclass(frozen=True)
class ProductPolynomialSpec:
    """``sum_{l=k}^{n+k} w_l G_l^k(x) x^(n+k-l)`` with ``w_l = 1`` or ``1/(l!(n+k-l)!)``."""

    n: int
    k: int
    weighted: bool = False

    def __post_init__(self):
        if self.n < 0 or self.k < 1:
            raise ValueError(f"product polynomial needs n >= 0 and k >= 1, got n={self.n}, k={self.k}")

    def weight(self, l: int) -> Fraction:
        if not self.weighted:
            return Fraction(1)
        return Fraction(1, factorial(l) * factorial(self.n + self.k - l))


def _genocchi(k: int, m: int) -> Polynomial:
    return higher_order_polynomial(FamilySpec(Family.GENOCCHI, k), m)


@lru_cache(maxsize=None)
def _genocchi_at(k: int, m: int, x: Fraction) -> Fraction:
    return poly_eval(_genocchi(k, m), x)


def _genocchi_number(k: int, m: int) -> Fraction:
    return higher_order_numbers(FamilySpec(Family.GENOCCHI, k), m)[m]


@lru_cache(maxsize=None)
def product_poly(spec: ProductPolynomialSpec) -> Polynomial:
    n, k = spec.n, spec.k
    acc = Polynomial()
    for l in range(k, n + k + 1):
        acc = acc + _genocchi(k, l) * (X ** (n + k - l)) * spec.weight(l)
    return acc


def product_poly_derivative_closed_form(spec: ProductPolynomialSpec, j: int) -> Polynomial:
    """Closed form of the j-th derivative of the product polynomial.

    Unweighted: ``(n+k+1)!/(n+k+1-j)! * sum_{l=k+j}^{n+k} G_{l-j}^k(x) x^(n+k-l)``.
    Weighted:   ``2^j * sum_{l=k+j}^{n+k} G_{l-j}^k(x) x^(n+k-l) / ((l-j)!(n+k-l)!)``.
    """
    n, k = spec.n, spec.k
    if not 0 <= j <= n:
        raise ValueError(f"derivative order j={j} outside 0..{n}")
    acc = Polynomial()
    for l in range(k + j, n + k + 1):
        term = _genocchi(k, l - j) * (X ** (n + k - l))
        if spec.weighted:
            term = term * Fraction(1, factorial(l - j) * factorial(n + k - l))
        acc = acc + term
    if spec.weighted:
        return acc * 2**j
    return acc * (factorial(n + k + 1) // factorial(n + k + 1 - j))


def nth_derivative(p: Polynomial, j: int) -> Polynomial:
    for _ in range(j):
        p = poly_derivative(p)
    return p


def _endpoint_derivatives(p: Polynomial, order: int) -> Tuple[Fraction, Fraction]:
    d = nth_derivative(p, order)
    return poly_eval(d, 1), poly_eval(d, 0)


Source = Union[Polynomial, ProductPolynomialSpec]


def coeff_bernoulli_paper(source: Source, j: int, k: Optional[int] = None, *, inner_offset: int = -1) -> Fraction:
    """Coefficient of ``B_j^k(x)`` from the endpoint-difference formula.

    On a plain polynomial this is ``(p^(j-1)(1) - p^(j-1)(0)) / j!`` (j >= 1).
    On a product polynomial spec it is the closed form obtained from that formula
    (factorial-weighted form when ``spec.weighted``); the inner sum starts at
    ``l = k + j + inner_offset``.
    """
    if isinstance(source, Polynomial):
        if j < 1:
            raise ValueError("the derivative formula needs j >= 1")
        one, zero = _endpoint_derivatives(source, j - 1)
        return (one - zero) / factorial(j)
    spec = _product_spec(source, k)
    n, k = spec.n, spec.k
    if not 0 <= j <= n + k:
        raise ValueError(f"j={j} outside 0..{n + k}")
    g = lambda m: _genocchi_at(k, m, Fraction(k - 1))
    inner = Fraction(0)
    if spec.weighted:
        for l in range(k + j + inner_offset, n + k + 1):
            inner += (-1) ** (l - j + 1 + k) * g(l - j + 1) / (factorial(l - j + 1) * factorial(n + k - l))
        inner -= _genocchi_number(k, n + k - j + 1) / factorial(n + k - j + 1)
        return Fraction(2) ** (j - 1) / factorial(j) * inner
    for l in range(k + j + inner_offset, n + k + 1):
        inner += (-1) ** (k + l - j + 1) * g(l - j + 1)
    inner -= _genocchi_number(k, n + k - j + 1)
    return Fraction(comb(n + k + 1, j), n + k - j + 2) * inner


def coeff_euler_paper(
    source: Source, j: int, k: Optional[int] = None, *, inner_offset: int = 0, standalone_sign: int = 0
) -> Fraction:
    """Coefficient of ``E_j^k(x)`` from the endpoint-sum formula.

    On a plain polynomial: ``(p^(j)(1) + p^(j)(0)) / (2 j!)``.
    On a product polynomial spec: the closed form derived from it.  The sign in
    front of the standalone Genocchi number defaults to ``+`` for the unweighted
    form and ``-`` for the weighted one, matching the printed statements;
    pass ``standalone_sign=+1`` or ``-1`` to override.
    """
    if isinstance(source, Polynomial):
        if j < 0:
            raise ValueError("j must be >= 0")
        one, zero = _endpoint_derivatives(source, j)
        return (one + zero) / (2 * factorial(j))
    spec = _product_spec(source, k)
    n, k = spec.n, spec.k
    if not 0 <= j <= n + k:
        raise ValueError(f"j={j} outside 0..{n + k}")
    g = lambda m: _genocchi_at(k, m, Fraction(k - 1))
    inner = Fraction(0)
    start = k + j + inner_offset
    if spec.weighted:
        sign = standalone_sign or -1
        for l in range(start, n + k + 1):
            inner += (-1) ** (l - j + k) * g(l - j) / (factorial(l - j) * factorial(n + k - l))
        inner += sign * _genocchi_number(k, n + k - j) / factorial(n + k - j)
        return Fraction(2) ** (j - 1) / factorial(j) * inner
    sign = standalone_sign or 1
    for l in range(start, n + k + 1):
        inner += (-1) ** (k + l - j) * g(l - j)
    inner += sign * _genocchi_number(k, n + k - j)
    return Fraction(comb(n + k + 1, j), 2) * inner


def coeff_genocchi_paper(source: Source, j: int, k: Optional[int] = None) -> Fraction:
    """Coefficient of ``G_j^k(x)`` from the endpoint-sum formula, ``k <= j``.

    On a plain polynomial: ``(p^(j-k)(1) + p^(j-k)(0)) / (2 j!)``; ``k`` is required.
    On a weighted product polynomial spec: the closed form derived from it.
    """
    if isinstance(source, Polynomial):
        if k is None or k < 1:
            raise ValueError("a Genocchi order k >= 1 is required")
        if j < k:
            raise ValueError(f"j={j} below the basis offset k={k}")
        one, zero = _endpoint_derivatives(source, j - k)
        return (one + zero) / (2 * factorial(j))
    spec = _product_spec(source, k)
    n, k = spec.n, spec.k
    if not k <= j <= n + k:
        raise ValueError(f"j={j} outside {k}..{n + k}")
    if not spec.weighted:
        raise ValueError("no closed form exists for the unweighted product polynomial in the Genocchi basis")
    inner = Fraction(0)
    for l in range(j, n + k + 1):
        m = l + k - j
        inner += (-1) ** (l - j) * _genocchi_at(k, m, Fraction(k - 1)) / (factorial(m) * factorial(n + k - l))
    inner += _genocchi_number(k, n + 2 * k - j) / factorial(n + 2 * k - j)
    return Fraction(2) ** (j - k - 1) / factorial(j) * inner


def _product_spec(source: ProductPolynomialSpec, k: Optional[int]) -> ProductPolynomialSpec:
    if not isinstance(source, ProductPolynomialSpec):
        raise TypeError(f"expected Polynomial or ProductPolynomialSpec, got {type(source).__name__}")
    if k is not None and k != source.k:
        raise ValueError(f"order k={k} disagrees with spec.k={source.k}")
    return source
