"""Exact truncated power series in ``t`` over the rationals.

Series hold ordinary coefficients: index ``j`` is the coefficient of ``t**j``.
The exponential-generating-function numbers are recovered at extraction time
as ``n! * c[n]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Tuple

__all__ = [
    "Family",
    "TruncatedSeries",
    "SeriesError",
    "series_mul",
    "series_pow",
    "series_invert",
    "base_series",
]


class SeriesError(ValueError):
    """Raised for order mismatches and non-invertible series."""


class Family(str, Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"
    GENOCCHI = "genocchi"

    @classmethod
    def parse(cls, text: "str | Family") -> "Family":
        if isinstance(text, Family):
            return text
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown family {text!r}") from None


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of a formal power series, exact."""

    coeffs: Tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise SeriesError("a truncated series needs at least the t^0 term")
        object.__setattr__(self, "coeffs", cs)

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1] + [0] * order)

    @classmethod
    def exp(cls, order: int) -> "TruncatedSeries":
        return cls(Fraction(1, factorial(j)) for j in range(order + 1))

    def __getitem__(self, j):
        return self.coeffs[j]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def scale(self, c) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries(c * a for a in self.coeffs)

    def shift(self, m: int) -> "TruncatedSeries":
        """Multiply by ``t**m``, keeping the truncation order."""
        n = self.truncation_order
        return TruncatedSeries(([Fraction(0)] * m + list(self.coeffs))[: n + 1])


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.truncation_order != b.truncation_order:
        raise SeriesError(
            f"truncation order mismatch: {a.truncation_order} != {b.truncation_order}"
        )
    x, y = a.coeffs, b.coeffs
    return TruncatedSeries(
        sum((x[i] * y[j - i] for i in range(j + 1)), Fraction(0)) for j in range(len(x))
    )


def series_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """k-fold product by binary exponentiation."""
    if k < 0:
        raise SeriesError("series_pow needs k >= 0")
    result = TruncatedSeries.one(a.truncation_order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise SeriesError("series with zero constant term is not invertible")
    inv0 = 1 / a0
    r = [inv0]
    for j in range(1, len(a.coeffs)):
        s = sum((a.coeffs[i] * r[j - i] for i in range(1, j + 1)), Fraction(0))
        r.append(-inv0 * s)
    return TruncatedSeries(r)


@lru_cache(maxsize=None)
def _reciprocal_kernel(family: Family, order: int) -> TruncatedSeries:
    # t/(e^t-1) = 1/((e^t-1)/t) and 2/(e^t+1) = 1/((e^t+1)/2)
    if family is Family.BERNOULLI:
        shifted = TruncatedSeries(Fraction(1, factorial(j + 1)) for j in range(order + 1))
        return series_invert(shifted)
    e = TruncatedSeries.exp(order)
    averaged = TruncatedSeries((c + (1 if j == 0 else 0)) / 2 for j, c in enumerate(e.coeffs))
    kernel = series_invert(averaged)
    if family is Family.GENOCCHI:
        return kernel.shift(1)
    return kernel


@lru_cache(maxsize=None)
def base_series(family: "Family | str", order_k: int, N: int) -> TruncatedSeries:
    """Truncation to order ``N`` of ``(t/(e^t-1))^k``, ``(2/(e^t+1))^k`` or ``(2t/(e^t+1))^k``.

    ``order_k == 0`` gives the unit series for every family.
    """
    family = Family.parse(family)
    if N < 0:
        raise SeriesError("truncation order must be >= 0")
    if order_k < 0:
        raise SeriesError("order must be >= 0")
    return series_pow(_reciprocal_kernel(family, N), order_k)
