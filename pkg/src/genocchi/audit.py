"""Registry of the higher-order Genocchi identities and an exact audit over (n, k).

Every identity has its printed (``as-written``) form and, where the printed
form looks misprinted, a closed list of corrected variants.  Both sides are
built as exact polynomials; a case passes iff they are equal coefficient for
coefficient.  Failures are localized at the lowest mismatching degree.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .appell import (
    X,
    Family,
    FamilySpec,
    Polynomial,
    falling_product,
    genocchi_from_euler,
    higher_order_numbers,
    higher_order_polynomial,
    poly_derivative,
    poly_eval,
    poly_integrate,
    reflect,
    shift,
)
from .basis import (
    ProductPolynomialSpec,
    coeff_bernoulli_paper,
    coeff_euler_paper,
    coeff_genocchi_paper,
    nth_derivative,
    product_poly,
    product_poly_derivative_closed_form,
)

__all__ = [
    "AS_WRITTEN",
    "Tag",
    "IdentityId",
    "Outcome",
    "Mismatch",
    "IdentityVerdict",
    "SummaryRow",
    "AuditReport",
    "OutOfDomain",
    "REGISTRY",
    "identity_ids",
    "build_lhs",
    "build_rhs",
    "evaluate_identity",
    "run_audit",
]

log = logging.getLogger(__name__)

AS_WRITTEN = "as-written"


class Tag(str, Enum):
    EQ11 = "Eq11"
    EQ12 = "Eq12"
    EQ13 = "Eq13"
    EQ14 = "Eq14"
    EQ15 = "Eq15"
    EQ18 = "Eq18"
    EQ19 = "Eq19"
    EQ20 = "Eq20"
    EULER_DIFF_LAW = "EulerDiffLaw"
    LEMMA2_3 = "Lemma2_3"
    LEMMA3_5 = "Lemma3_5"
    THM3_1 = "Thm3_1"
    COR3_2 = "Cor3_2"
    THM3_3 = "Thm3_3"
    COR3_4 = "Cor3_4"
    THM3_6 = "Thm3_6"
    THM3_7 = "Thm3_7"
    COR3_8 = "Cor3_8"
    THM3_9 = "Thm3_9"
    COR3_10 = "Cor3_10"

    @classmethod
    def parse(cls, text: str) -> "Tag":
        for t in cls:
            if t.value.lower() == text.strip().lower():
                return t
        raise ValueError(f"unknown identity tag {text!r}")


_TAG_ORDER = {t: i for i, t in enumerate(Tag)}


class OutOfDomain(ValueError):
    """The (n, k) pair lies outside the identity's domain; the case is skipped."""


@dataclass(frozen=True)
class IdentityId:
    tag: Tag
    variant: str = AS_WRITTEN

    @property
    def corrected(self) -> bool:
        return self.variant != AS_WRITTEN

    def __str__(self) -> str:
        return f"{self.tag.value}[{self.variant}]"


class Outcome(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass(frozen=True)
class Mismatch:
    degree: int
    lhs: Fraction
    rhs: Fraction
    component: Optional[str] = None


@dataclass(frozen=True)
class IdentityVerdict:
    id: IdentityId
    n: int
    k: int
    outcome: Outcome
    mismatch: Optional[Mismatch] = None

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS


# ---------------------------------------------------------------------------
# shared building blocks

def _fam(family: Family, k: int, n: int) -> Polynomial:
    return higher_order_polynomial(FamilySpec(family, k), n)


def G(k: int, n: int) -> Polynomial:
    return _fam(Family.GENOCCHI, k, n)


def E(k: int, n: int) -> Polynomial:
    return _fam(Family.EULER, k, n)


def B(k: int, n: int) -> Polynomial:
    return _fam(Family.BERNOULLI, k, n)


def _num(family: Family, k: int, n: int) -> Fraction:
    return higher_order_numbers(FamilySpec(family, k), n)[n]


@lru_cache(maxsize=None)
def _euler_at(k: int, m: int, x: Fraction) -> Fraction:
    return poly_eval(E(k, m), x)


def _ff_euler_at(k: int, m: int, x: Fraction) -> Fraction:
    """``(m)_k E_{m-k}^k(x)``: the Euler-side rewrite of ``G_m^k(x)``; zero when m < k."""
    if m < k:
        return Fraction(0)
    return falling_product(m, k) * _euler_at(k, m - k, x)


def _ff_euler_number(k: int, m: int) -> Fraction:
    if m < k:
        return Fraction(0)
    return falling_product(m, k) * _num(Family.EULER, k, m - k)


def _const(c) -> Polynomial:
    return Polynomial.constant(c)


def _combine(terms: Iterable[Tuple[Fraction, Polynomial]]) -> Polynomial:
    acc = Polynomial()
    for c, p in terms:
        if c:
            acc = acc + p * c
    return acc


def _outer(n: int, k: int, outer: str) -> range:
    # "printed" is the index range j = k..n+k of the weighted theorems
    return range(k, n + k + 1) if outer == "printed" else range(0, n + 1)


# ---------------------------------------------------------------------------
# theorem right-hand sides, built from the basis-engine closed forms

def _thm3_1(n, k, inner_offset=-1):
    s = ProductPolynomialSpec(n, k)
    return _combine((coeff_bernoulli_paper(s, j, inner_offset=inner_offset), B(k, j)) for j in range(n + 1))


def _thm3_3(n, k, inner_offset=0):
    s = ProductPolynomialSpec(n, k)
    return _combine((coeff_euler_paper(s, j, inner_offset=inner_offset), E(k, j)) for j in range(n + 1))


def _thm3_6(n, k, basis_factor):
    s = ProductPolynomialSpec(n, k, weighted=True)
    cs = [(coeff_genocchi_paper(s, j), j) for j in range(k, n + k + 1)]
    if basis_factor:
        return _combine((c, G(k, j)) for c, j in cs)
    return _const(sum((c for c, _ in cs), Fraction(0)))


def _thm3_7(n, k, outer="printed"):
    s = ProductPolynomialSpec(n, k, weighted=True)
    return _combine((coeff_bernoulli_paper(s, j), B(k, j)) for j in _outer(n, k, outer))


def _thm3_9(n, k, standalone_sign=-1, outer="printed"):
    s = ProductPolynomialSpec(n, k, weighted=True)
    return _combine(
        (coeff_euler_paper(s, j, standalone_sign=standalone_sign), E(k, j)) for j in _outer(n, k, outer)
    )


# ---------------------------------------------------------------------------
# corollaries: Euler-number rewrites of the parent theorems

def _cor3_2(n, k, inner_offset=-1, bracket_inside=False):
    x0 = Fraction(k - 1)
    terms = []
    for j in range(n + 1):
        standalone = _ff_euler_number(k, n + k - j + 1)
        inner = Fraction(0)
        for l in range(k + j + inner_offset, n + k + 1):
            inner += (-1) ** (k + l - j + 1) * _ff_euler_at(k, l - j + 1, x0)
            if bracket_inside:
                inner -= standalone
        if not bracket_inside:
            inner -= standalone
        terms.append((Fraction(comb(n + k + 1, j), n + k - j + 2) * inner, B(k, j)))
    return _combine(terms)


def _cor3_4(n, k, inner_offset=0, sign_shift=0, bracket_inside=False):
    x0 = Fraction(k - 1)
    terms = []
    for j in range(n + 1):
        standalone = _ff_euler_number(k, n + k - j)
        inner = Fraction(0)
        for l in range(k + j + inner_offset, n + k + 1):
            inner += (-1) ** (k + l - j + sign_shift) * _ff_euler_at(k, l - j, x0)
            if bracket_inside:
                inner += standalone
        if not bracket_inside:
            inner += standalone
        terms.append((Fraction(comb(n + k + 1, j), 2) * inner, E(k, j)))
    return _combine(terms)


def _cor3_8(n, k, outer="printed"):
    x0 = Fraction(k - 1)
    terms = []
    for j in _outer(n, k, outer):
        inner = Fraction(0)
        for l in range(k + j - 1, n + k + 1):
            m = l - j + 1
            inner += (-1) ** (l - j + 1 + k) * _ff_euler_at(k, m, x0) / (factorial(m) * factorial(n + k - l))
        inner -= _ff_euler_number(k, n + k - j + 1) / factorial(n + k - j + 1)
        terms.append((Fraction(2) ** (j - 1) / factorial(j) * inner, B(k, j)))
    return _combine(terms)


def _cor3_10(n, k, inner_offset=0, sign_shift=0, standalone_sign=-1, outer="printed"):
    x0 = Fraction(k - 1)
    terms = []
    for j in _outer(n, k, outer):
        inner = Fraction(0)
        for l in range(k + j + inner_offset, n + k + 1):
            m = l - j
            inner += (-1) ** (l - j + k + sign_shift) * _ff_euler_at(k, m, x0) / (factorial(m) * factorial(n + k - l))
        inner += standalone_sign * _ff_euler_number(k, n + k - j) / factorial(n + k - j)
        terms.append((Fraction(2) ** (j - 1) / factorial(j) * inner, E(k, j)))
    return _combine(terms)


# ---------------------------------------------------------------------------
# registry

INTEGRAL_LIMITS = ((Fraction(0), Fraction(1)), (Fraction(-1), Fraction(2)), (Fraction(1, 2), Fraction(3, 2)))

Builder = Callable[[int, int, Optional[object]], Polynomial]


@dataclass(frozen=True)
class Variant:
    label: str
    rationale: str
    rhs: Builder
    oracle_verified: bool = False


@dataclass(frozen=True)
class IdentityDef:
    tag: Tag
    statement: str
    domain: Callable[[int, int], bool]
    lhs: Builder
    variants: Tuple[Variant, ...]
    components: Callable[[int, int], Sequence] = lambda n, k: (None,)

    def variant(self, label: str) -> Variant:
        for v in self.variants:
            if v.label == label:
                return v
        raise KeyError(f"{self.tag.value} has no variant {label!r}")


def _k_ge_1(n, k):
    return k >= 1 and n >= 0


def _product_lhs(weighted):
    return lambda n, k, c: product_poly(ProductPolynomialSpec(n, k, weighted))


def _lemma_rhs(weighted):
    return lambda n, k, j: product_poly_derivative_closed_form(ProductPolynomialSpec(n, k, weighted), j)


def _lemma_lhs(weighted):
    return lambda n, k, j: nth_derivative(product_poly(ProductPolynomialSpec(n, k, weighted)), j)


def _integral_lhs(n, k, ab):
    a, b = ab
    return _const(poly_integrate(G(k, n), a, b))


def _integral_rhs(n, k, ab):
    a, b = ab
    nxt = G(k, n + 1)
    return _const((poly_eval(nxt, b) - poly_eval(nxt, a)) / (n + 1))


_REGISTRY: List[IdentityDef] = [
    IdentityDef(
        Tag.EQ11, "d/dx G_n^k(x) = n G_{n-1}^k(x)",
        lambda n, k: k >= 1 and n >= 1,
        lambda n, k, c: poly_derivative(G(k, n)),
        (Variant(AS_WRITTEN, "derivative law as printed", lambda n, k, c: G(k, n - 1) * n, True),),
    ),
    IdentityDef(
        Tag.EQ12, "int_a^b G_n^k = (G_{n+1}^k(b) - G_{n+1}^k(a))/(n+1)",
        _k_ge_1, _integral_lhs,
        (Variant(AS_WRITTEN, "integral law as printed, at three (a, b) pairs", _integral_rhs, True),),
        components=lambda n, k: INTEGRAL_LIMITS,
    ),
    IdentityDef(
        Tag.EQ13, "G_n^k(x) as a binomial sum of Genocchi numbers",
        _k_ge_1,
        lambda n, k, c: G(k, n),
        (
            Variant(AS_WRITTEN, "summand G_n^k x^(n-m), constant index as printed in the statement",
                    lambda n, k, c: _num(Family.GENOCCHI, k, n) * (X + 1) ** n),
            Variant("proof-summand", "summand G_{n-m}^k x^(n-m), as in the proof's last line",
                    lambda n, k, c: _combine((comb(n, m) * _num(Family.GENOCCHI, k, n - m), X ** (n - m))
                                             for m in range(n + 1))),
            Variant("standard-summand", "summand G_m^k x^(n-m), the Cauchy-product coefficient",
                    lambda n, k, c: _combine((comb(n, m) * _num(Family.GENOCCHI, k, m), X ** (n - m))
                                             for m in range(n + 1)), True),
        ),
    ),
    IdentityDef(
        Tag.EQ14, "G_n^k(x) = (-1)^(n+k) G_n^k(k-x)",
        _k_ge_1,
        lambda n, k, c: G(k, n),
        (Variant(AS_WRITTEN, "reflection law as printed", lambda n, k, c: reflect(G(k, n), k) * (-1) ** (n + k), True),),
    ),
    IdentityDef(
        Tag.EQ15, "G_n^k(1) = (-1)^(n+k) G_n^k(k-1)",
        _k_ge_1,
        lambda n, k, c: _const(poly_eval(G(k, n), 1)),
        (Variant(AS_WRITTEN, "reflection law at x = 1",
                 lambda n, k, c: _const((-1) ** (n + k) * poly_eval(G(k, n), k - 1)), True),),
    ),
    IdentityDef(
        Tag.EQ18, "G_n^k(x) = n!/(n-k)! E_{n-k}^k(x)",
        lambda n, k: k >= 1 and n >= k,
        lambda n, k, c: G(k, n),
        (Variant(AS_WRITTEN, "Genocchi-Euler bridge as printed", lambda n, k, c: genocchi_from_euler(n, k), True),),
    ),
    IdentityDef(
        Tag.EQ19, "G_{n+k}^k / (n+k)_k = E_n^k",
        _k_ge_1,
        lambda n, k, c: _const(_num(Family.GENOCCHI, k, n + k) / falling_product(n + k, k)),
        (Variant(AS_WRITTEN, "bridge at z = 0", lambda n, k, c: _const(_num(Family.EULER, k, n)), True),),
    ),
    IdentityDef(
        Tag.EQ20, "G_{n+k}^k(k-1) / (n+k)_k = E_n^k(k-1)",
        _k_ge_1,
        lambda n, k, c: _const(poly_eval(G(k, n + k), k - 1) / falling_product(n + k, k)),
        (Variant(AS_WRITTEN, "bridge at z = k-1", lambda n, k, c: _const(poly_eval(E(k, n), k - 1)), True),),
    ),
    IdentityDef(
        Tag.EULER_DIFF_LAW, "E_n^k(x+1) + E_n^k(x) = 2 E_?^(k-1)(x)",
        lambda n, k: k >= 1 and n >= 1,
        lambda n, k, c: shift(E(k, n)) + E(k, n),
        (
            Variant(AS_WRITTEN, "right side 2 E_{n-1}^{k-1}(x) as printed", lambda n, k, c: E(k - 1, n - 1) * 2),
            Variant("standard-index", "right side 2 E_n^{k-1}(x); degree count forces index n",
                    lambda n, k, c: E(k - 1, n) * 2, True),
        ),
    ),
    IdentityDef(
        Tag.LEMMA2_3, "j-th derivative of sum G_l^k(x) x^(n+k-l)",
        _k_ge_1, _lemma_lhs(False),
        (Variant(AS_WRITTEN, "closed form as printed, all 0 <= j <= n", _lemma_rhs(False), True),),
        components=lambda n, k: tuple(range(n + 1)),
    ),
    IdentityDef(
        Tag.LEMMA3_5, "j-th derivative of sum G_l^k(x) x^(n+k-l) / (l!(n+k-l)!)",
        _k_ge_1, _lemma_lhs(True),
        (Variant(AS_WRITTEN, "closed form as printed, all 0 <= j <= n", _lemma_rhs(True), True),),
        components=lambda n, k: tuple(range(n + 1)),
    ),
    IdentityDef(
        Tag.THM3_1, "product polynomial in the order-k Bernoulli basis",
        _k_ge_1, _product_lhs(False),
        (
            Variant(AS_WRITTEN, "inner sum from l = k+j-1 as printed", lambda n, k, c: _thm3_1(n, k, -1)),
            Variant("inner-from-k+j", "inner sum from l = k+j, the limit printed in the Euler analogue",
                    lambda n, k, c: _thm3_1(n, k, 0)),
        ),
    ),
    IdentityDef(
        Tag.COR3_2, "Bernoulli-basis expansion with Euler numbers",
        _k_ge_1, _product_lhs(False),
        (
            Variant(AS_WRITTEN, "literal print: standalone Euler term sits inside the l-sum",
                    lambda n, k, c: _cor3_2(n, k, -1, bracket_inside=True)),
            Variant("via-Thm3_1", "Eq19/Eq20 substituted into the printed parent theorem",
                    lambda n, k, c: _cor3_2(n, k, -1)),
            Variant("via-Thm3_1-inner-from-k+j", "Eq19/Eq20 substituted into the parent's inner-from-k+j variant",
                    lambda n, k, c: _cor3_2(n, k, 0)),
        ),
    ),
    IdentityDef(
        Tag.THM3_3, "product polynomial in the order-k Euler basis",
        _k_ge_1, _product_lhs(False),
        (
            Variant(AS_WRITTEN, "inner sum from l = k+j as printed", lambda n, k, c: _thm3_3(n, k, 0)),
            Variant("inner-from-k+j-1", "inner sum from l = k+j-1, the limit printed in the Bernoulli analogue",
                    lambda n, k, c: _thm3_3(n, k, -1)),
        ),
    ),
    IdentityDef(
        Tag.COR3_4, "Euler-basis expansion with Euler numbers",
        _k_ge_1, _product_lhs(False),
        (
            Variant(AS_WRITTEN, "literal print: l from k+j-1, sign (-1)^(k+l-j+1), standalone term inside the l-sum",
                    lambda n, k, c: _cor3_4(n, k, -1, sign_shift=1, bracket_inside=True)),
            Variant("via-Thm3_3", "Eq19/Eq20 substituted into the printed parent theorem",
                    lambda n, k, c: _cor3_4(n, k, 0)),
            Variant("via-Thm3_3-inner-from-k+j-1", "Eq19/Eq20 substituted into the parent's inner-from-k+j-1 variant",
                    lambda n, k, c: _cor3_4(n, k, -1)),
        ),
    ),
    IdentityDef(
        Tag.THM3_6, "weighted product polynomial in the order-k Genocchi basis",
        _k_ge_1, _product_lhs(True),
        (
            Variant(AS_WRITTEN, "literal print: no basis polynomial on the right, a scalar sum",
                    lambda n, k, c: _thm3_6(n, k, basis_factor=False)),
            Variant("basis-factor", "each c_j multiplies G_j^k(x), as the proof's expansion requires",
                    lambda n, k, c: _thm3_6(n, k, basis_factor=True)),
        ),
    ),
    IdentityDef(
        Tag.THM3_7, "weighted product polynomial in the order-k Bernoulli basis",
        _k_ge_1, _product_lhs(True),
        (
            Variant(AS_WRITTEN, "outer sum j = k..n+k as printed", lambda n, k, c: _thm3_7(n, k, "printed")),
            Variant("basis-range", "outer sum j = 0..n, the index range of a degree-n Bernoulli expansion",
                    lambda n, k, c: _thm3_7(n, k, "basis")),
        ),
    ),
    IdentityDef(
        Tag.COR3_8, "weighted Bernoulli-basis expansion with Euler numbers",
        _k_ge_1, _product_lhs(True),
        (
            Variant(AS_WRITTEN, "literal print", lambda n, k, c: _cor3_8(n, k, "printed")),
            Variant("via-Thm3_7-basis-range", "Eq19/Eq20 substituted into the parent's basis-range variant",
                    lambda n, k, c: _cor3_8(n, k, "basis")),
        ),
    ),
    IdentityDef(
        Tag.THM3_9, "weighted product polynomial in the order-k Euler basis",
        _k_ge_1, _product_lhs(True),
        (
            Variant(AS_WRITTEN, "minus sign on the standalone Genocchi term, j = k..n+k, as printed",
                    lambda n, k, c: _thm3_9(n, k, -1, "printed")),
            Variant("plus-sign", "plus sign on the standalone term, as the endpoint sum p(1) + p(0) gives",
                    lambda n, k, c: _thm3_9(n, k, +1, "printed")),
            Variant("basis-range", "outer sum j = 0..n", lambda n, k, c: _thm3_9(n, k, -1, "basis")),
            Variant("plus-sign-basis-range", "plus sign and outer sum j = 0..n",
                    lambda n, k, c: _thm3_9(n, k, +1, "basis")),
        ),
    ),
    IdentityDef(
        Tag.COR3_10, "weighted Euler-basis expansion with Euler numbers",
        _k_ge_1, _product_lhs(True),
        (
            Variant(AS_WRITTEN, "literal print: l from k+j-1, sign (-1)^(l-j+1+k)",
                    lambda n, k, c: _cor3_10(n, k, -1, sign_shift=1)),
            Variant("via-Thm3_9", "Eq19/Eq20 substituted into the printed parent theorem",
                    lambda n, k, c: _cor3_10(n, k)),
            Variant("via-Thm3_9-plus-sign", "Eq19/Eq20 substituted into the parent's plus-sign variant",
                    lambda n, k, c: _cor3_10(n, k, standalone_sign=+1)),
            Variant("via-Thm3_9-basis-range", "Eq19/Eq20 substituted into the parent's basis-range variant",
                    lambda n, k, c: _cor3_10(n, k, outer="basis")),
            Variant("via-Thm3_9-plus-sign-basis-range",
                    "Eq19/Eq20 substituted into the parent's plus-sign-basis-range variant",
                    lambda n, k, c: _cor3_10(n, k, standalone_sign=+1, outer="basis")),
        ),
    ),
]

REGISTRY: Dict[Tag, IdentityDef] = {d.tag: d for d in _REGISTRY}

ORACLE_VERIFIED = frozenset(
    IdentityId(d.tag, v.label) for d in _REGISTRY for v in d.variants if v.oracle_verified
)


def identity_ids(tags: Optional[Iterable[Tag]] = None, variants: str = "both") -> List[IdentityId]:
    """Identity ids in canonical order.

    ``variants`` is ``as-written``, ``corrected`` or ``both``.  With
    ``corrected``, a tag that has no corrected variant contributes its printed
    form, since that is the only form it has.
    """
    if variants not in ("as-written", "corrected", "both"):
        raise ValueError(f"variants must be as-written, corrected or both, got {variants!r}")
    wanted = set(Tag) if tags is None else {Tag.parse(t) if isinstance(t, str) else t for t in tags}
    out = []
    for d in _REGISTRY:
        if d.tag not in wanted:
            continue
        has_corrected = len(d.variants) > 1
        for v in d.variants:
            is_aw = v.label == AS_WRITTEN
            if variants == "as-written" and not is_aw:
                continue
            if variants == "corrected" and is_aw and has_corrected:
                continue
            out.append(IdentityId(d.tag, v.label))
    return out


def _resolve(id: IdentityId, n: int, k: int, component):
    d = REGISTRY[id.tag]
    v = d.variant(id.variant)
    if not d.domain(n, k):
        raise OutOfDomain(f"{id} is not defined at n={n}, k={k}")
    comps = d.components(n, k)
    if component is None and comps != (None,):
        raise ValueError(f"{id.tag.value} needs one of the components {list(comps)}")
    return d, v


def build_lhs(id: IdentityId, n: int, k: int, component=None) -> Polynomial:
    d, _ = _resolve(id, n, k, component)
    return d.lhs(n, k, component)


def build_rhs(id: IdentityId, n: int, k: int, component=None) -> Polynomial:
    _, v = _resolve(id, n, k, component)
    return v.rhs(n, k, component)


def _first_mismatch(lhs: Polynomial, rhs: Polynomial) -> Optional[Tuple[int, Fraction, Fraction]]:
    for d in range(max(len(lhs.coeffs), len(rhs.coeffs))):
        if lhs[d] != rhs[d]:
            return d, lhs[d], rhs[d]
    return None


def _component_label(c) -> Optional[str]:
    if c is None:
        return None
    if isinstance(c, tuple):
        a, b = c
        return f"a={a},b={b}"
    return f"j={c}"


def evaluate_identity(id: IdentityId, n: int, k: int) -> IdentityVerdict:
    d = REGISTRY[id.tag]
    v = d.variant(id.variant)
    if not d.domain(n, k):
        return IdentityVerdict(id, n, k, Outcome.SKIP)
    for c in d.components(n, k):
        miss = _first_mismatch(d.lhs(n, k, c), v.rhs(n, k, c))
        if miss is not None:
            deg, a, b = miss
            return IdentityVerdict(id, n, k, Outcome.FAIL, Mismatch(deg, a, b, _component_label(c)))
    return IdentityVerdict(id, n, k, Outcome.PASS)


@dataclass(frozen=True)
class SummaryRow:
    id: IdentityId
    rationale: str
    oracle_verified: bool
    passed: int
    failed: int
    skipped: int


@dataclass(frozen=True)
class AuditReport:
    k_range: Tuple[int, int]
    n_range: Tuple[int, int]
    variants: str
    verdicts: Tuple[IdentityVerdict, ...]
    summary: Tuple[SummaryRow, ...] = field(default=())

    @property
    def oracle_failures(self) -> List[IdentityVerdict]:
        return [v for v in self.verdicts if v.outcome is Outcome.FAIL and v.id in ORACLE_VERIFIED]

    @property
    def exit_code(self) -> int:
        """0 when no oracle-verified identity fails; theorem outcomes are findings only."""
        return 1 if self.oracle_failures else 0


def _sort_key(v: IdentityVerdict):
    d = REGISTRY[v.id.tag]
    vi = [x.label for x in d.variants].index(v.id.variant)
    return (_TAG_ORDER[v.id.tag], vi, v.k, v.n)


def run_audit(
    tags: Optional[Iterable[Tag]] = None,
    k_range: Tuple[int, int] = (1, 3),
    n_range: Tuple[int, int] = (0, 8),
    variants: str = "both",
    workers: int = 1,
) -> AuditReport:
    """Evaluate every (identity, variant, k, n) case; ranges are inclusive."""
    (k0, k1), (n0, n1) = k_range, n_range
    if k0 > k1 or n0 > n1:
        raise ValueError(f"empty range: k={k0}..{k1}, n={n0}..{n1}")
    if k0 < 0 or n0 < 0:
        raise ValueError("ranges must be non-negative")
    ids = identity_ids(tags, variants)
    cases = [(i, n, k) for i in ids for k in range(k0, k1 + 1) for n in range(n0, n1 + 1)]
    log.debug("auditing %d cases with %d worker(s)", len(cases), workers)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: evaluate_identity(*c), cases))
    else:
        results = [evaluate_identity(*c) for c in cases]

    verdicts = sorted((r for r in results if r.outcome is not Outcome.SKIP), key=_sort_key)
    rows = []
    for i in ids:
        mine = [r for r in results if r.id == i]
        v = REGISTRY[i.tag].variant(i.variant)
        rows.append(SummaryRow(
            i, v.rationale, i in ORACLE_VERIFIED,
            sum(r.outcome is Outcome.PASS for r in mine),
            sum(r.outcome is Outcome.FAIL for r in mine),
            sum(r.outcome is Outcome.SKIP for r in mine),
        ))
    return AuditReport((k0, k1), (n0, n1), variants, tuple(verdicts), tuple(rows))
