import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genocchi.appell import X, Polynomial
from genocchi.textio import dump_json, emit_poly, emit_rational, parse_poly, parse_rational


def big_rationals(seed, count, digits=64):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        num = rng.randint(-(10**digits) + 1, 10**digits - 1)
        den = rng.randint(1, 10**digits - 1)
        out.append(F(num, den))
    return out


def test_emit_examples():
    assert emit_rational(F(-1, 2)) == "-1/2"
    assert emit_rational(F(6, 3)) == "2"
    assert emit_rational(0) == "0"


def test_parse_examples():
    assert parse_rational("-1/2") == F(-1, 2)
    assert parse_rational("4/6") == F(2, 3)
    assert parse_rational("+7") == 7


@pytest.mark.parametrize("bad", ["", "1/0", "1.5", "1/-2", "a", "1//2", "1 / 2", "1e3", "--1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_seeded_rational_round_trip():
    values = big_rationals(8, 1000)
    assert any(len(str(abs(v.numerator))) > 60 for v in values)
    for r in values:
        s = emit_rational(r)
        assert parse_rational(s) == r
        assert emit_rational(parse_rational(s)) == s


@given(st.fractions())
def test_rational_round_trip_property(r):
    assert parse_rational(emit_rational(r)) == r


def test_poly_examples():
    assert emit_poly(X**2 - F(1, 2)) == '["-1/2","0","1"]'
    assert emit_poly(Polynomial()) == '["0"]'
    assert parse_poly('["0"]') == Polynomial()
    assert parse_poly('["1", 2, "-3/4"]') == Polynomial([1, 2, F(-3, 4)])


def test_poly_round_trip():
    rng = random.Random(99)
    vals = big_rationals(3, 400)
    for _ in range(100):
        p = Polynomial(rng.sample(vals, rng.randint(1, 8)))
        s = emit_poly(p)
        assert parse_poly(s) == p
        assert emit_poly(parse_poly(s)) == s


@pytest.mark.parametrize("bad", ["", "[]", "{}", '"1"', "[1.5]", "[true]", '["1/0"]', "[null]", "[1,"])
def test_parse_poly_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


def test_dump_json_is_compact_and_stable():
    obj = {"b": ["1/2", 3], "a": None}
    assert dump_json(obj) == '{"b":["1/2",3],"a":null}'
    assert dump_json(obj) == dump_json(dict(obj))
