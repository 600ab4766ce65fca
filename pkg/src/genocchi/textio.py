"""Exact text forms: rationals as ``"p/q"`` strings, polynomials as JSON arrays of them."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, List

from .appell import Polynomial

__all__ = ["emit_rational", "parse_rational", "emit_poly", "parse_poly", "dump_json"]

_RATIONAL = re.compile(r"([+-]?[0-9]+)(?:/([0-9]+))?")


def emit_rational(r) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def poly_to_strings(p: Polynomial) -> List[str]:
    return [emit_rational(c) for c in p.coeffs] or ["0"]


def emit_poly(p: Polynomial) -> str:
    return dump_json(poly_to_strings(p))


def parse_poly(text: str) -> Polynomial:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"polynomial is not valid JSON: {exc}") from None
    if not isinstance(data, list) or not data:
        raise ValueError("polynomial must be a non-empty JSON array of rationals")
    coeffs = []
    for item in data:
        if isinstance(item, bool) or not isinstance(item, (str, int)):
            raise ValueError(f"coefficient {item!r} is not a rational string")
        coeffs.append(parse_rational(str(item)))
    return Polynomial(coeffs)


def dump_json(obj: Any) -> str:
    """Canonical one-line JSON: insertion-ordered keys, no optional whitespace."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)
