"""Higher-order Bernoulli, Euler and Genocchi numbers and polynomials.

All three families are Appell sequences built from :func:`genocchi.series.base_series`:

    A_n^k(x) = sum_{m=0}^{n} C(n, m) A_m^k x^(n-m)

where ``A_m^k`` are the numbers of the family.  Polynomials are dense and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, List, Sequence, Tuple

from .series import Family, base_series

__all__ = [
    "Family",
    "FamilySpec",
    "NumberTable",
    "Polynomial",
    "InvalidSpecError",
    "X",
    "higher_order_numbers",
    "higher_order_polynomial",
    "poly_derivative",
    "poly_antiderivative",
    "poly_integrate",
    "poly_eval",
    "poly_substitute_affine",
    "reflect",
    "shift",
    "genocchi_from_euler",
    "falling_factorial",
    "falling_product",
    "number",
    "linear_combination",
]


class InvalidSpecError(ValueError):
    pass


class Polynomial:
    """Dense polynomial over the rationals, ascending coefficients.

    Trailing zeros are stripped on construction, so the zero polynomial has an
    empty coefficient tuple and equality is plain tuple equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, d: int, c=1) -> "Polynomial":
        return cls([0] * d + [c])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` stands in for minus infinity on the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and d > 0) else str(mag)
            if d >= 1:
                body += "x" if d == 1 else f"x^{d}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[d] + other[d] for d in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Polynomial":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial(c * a for a in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Polynomial":
        return self * (1 / Fraction(c))

    def __pow__(self, e: int) -> "Polynomial":
        result = Polynomial.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)


def _as_poly(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


X = Polynomial([0, 1])


@dataclass(frozen=True)
class FamilySpec:
    """A family together with its order ``k``.

    Order 0 is accepted for every family here because ``A_n^0(x) = x^n`` is
    needed by the difference laws; the Genocchi number table itself rejects it.
    """

    family: Family
    order_k: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        if not isinstance(self.order_k, int) or self.order_k < 0:
            raise InvalidSpecError(f"order must be a non-negative integer, got {self.order_k!r}")

    @property
    def k(self) -> int:
        return self.order_k


@dataclass(frozen=True)
class NumberTable:
    spec: FamilySpec
    values: Tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def _numbers(family: Family, k: int, n_max: int) -> Tuple[Fraction, ...]:
    # slack beyond n_max keeps every retained coefficient exact by construction
    N = n_max + k + 2
    s = base_series(family, k, N)
    return tuple(factorial(n) * s[n] for n in range(n_max + 1))


def higher_order_numbers(spec: FamilySpec, n_max: int) -> NumberTable:
    """Numbers ``A_0^k .. A_{n_max}^k`` of the given family."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if spec.family is Family.GENOCCHI and spec.order_k < 1:
        raise InvalidSpecError("Genocchi numbers are defined for order k >= 1")
    return NumberTable(spec, _numbers(spec.family, spec.order_k, n_max))


def number(family, k: int, n: int) -> Fraction:
    """Single number ``A_n^k``; zero for negative ``n``."""
    if n < 0:
        return Fraction(0)
    return higher_order_numbers(FamilySpec(Family.parse(family), k), n)[n]


@lru_cache(maxsize=None)
def _polynomial(family: Family, k: int, n: int) -> Polynomial:
    if k == 0:
        return Polynomial.monomial(n)
    a = _numbers(family, k, n)
    return Polynomial(comb(n, m) * a[m] for m in range(n, -1, -1))


def higher_order_polynomial(spec: FamilySpec, n: int) -> Polynomial:
    """``A_n^k(x)``; for Genocchi this vanishes identically when ``n < k``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _polynomial(spec.family, spec.order_k, n)


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial(d * c for d, c in enumerate(p.coeffs) if d)


def poly_antiderivative(p: Polynomial) -> Polynomial:
    """Antiderivative with zero constant term."""
    return Polynomial([0] + [c / (d + 1) for d, c in enumerate(p.coeffs)])


def poly_integrate(p: Polynomial, a, b) -> Fraction:
    big = poly_antiderivative(p)
    return poly_eval(big, b) - poly_eval(big, a)


def poly_eval(p: Polynomial, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_substitute_affine(p: Polynomial, a, b) -> Polynomial:
    """``p(a + b*x)`` expanded in the monomial basis (Horner over polynomials)."""
    inner = Polynomial([a, b])
    acc = Polynomial()
    for c in reversed(p.coeffs):
        acc = acc * inner + c
    return acc


def reflect(p: Polynomial, k) -> Polynomial:
    """``p(k - x)``."""
    return poly_substitute_affine(p, k, -1)


def shift(p: Polynomial, h=1) -> Polynomial:
    """``p(x + h)``."""
    return poly_substitute_affine(p, h, 1)


def falling_factorial(m: int, k: int) -> int:
    """``m!/(m-k)!`` for ``0 <= k <= m``."""
    if m < 0 or k < 0:
        raise ValueError("falling_factorial needs m >= 0 and k >= 0")
    if k > m:
        raise ValueError(f"falling_factorial({m}, {k}): k exceeds m")
    return falling_product(m, k)


def falling_product(m: int, k: int) -> int:
    """``m (m-1) ... (m-k+1)`` for any integer ``m``; zero when ``0 <= m < k``."""
    out = 1
    for i in range(k):
        out *= m - i
    return out


def genocchi_from_euler(n: int, k: int) -> Polynomial:
    """``G_n^k(x)`` rebuilt as ``n!/(n-k)! * E_{n-k}^k(x)``."""
    if k < 1:
        raise InvalidSpecError("Genocchi order must be >= 1")
    if n < k:
        raise ValueError(f"genocchi_from_euler needs n >= k, got n={n}, k={k}")
    return falling_factorial(n, k) * higher_order_polynomial(FamilySpec(Family.EULER, k), n - k)


def polynomial_table(spec: FamilySpec, n_max: int) -> List[Polynomial]:
    return [higher_order_polynomial(spec, n) for n in range(n_max + 1)]


def linear_combination(coeffs: Sequence, polys: Sequence[Polynomial]) -> Polynomial:
    acc = Polynomial()
    for c, p in zip(coeffs, polys):
        if c:
            acc = acc + p * Fraction(c)
    return acc
