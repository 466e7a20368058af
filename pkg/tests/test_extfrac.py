from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ratknot.extfrac import INF, ZERO, ExtRational, add_int, negate, normalize, parse_fraction, reciprocal


def test_normalize_examples():
    assert normalize(4, 6) == ExtRational(2, 3)
    assert normalize(-3, 0) == INF
    assert normalize(0, -5) == ExtRational(0, 1)


def test_normalize_rejects_zero_over_zero():
    with pytest.raises(ZeroDivisionError):
        normalize(0, 0)


def test_unreduced_construction_rejected():
    with pytest.raises(ValueError):
        ExtRational(4, 6)
    with pytest.raises(ValueError):
        ExtRational(-1, 0)


def test_add_int():
    assert add_int(INF, 5) == INF
    assert add_int(normalize(1, 2), 2) == normalize(5, 2)
    assert add_int(normalize(-16, 7), 0) == normalize(-16, 7)


def test_reciprocal():
    assert reciprocal(ZERO) == INF
    assert reciprocal(INF) == ZERO
    assert reciprocal(normalize(-7, 2)) == normalize(-2, 7)


@pytest.mark.parametrize("text,want", [("3/4", (3, 4)), ("-6/4", (-3, 2)), ("5", (5, 1)), ("inf", (1, 0)), ("∞", (1, 0)), (" -2 ", (-2, 1))])
def test_parse(text, want):
    f = parse_fraction(text)
    assert (f.num, f.den) == want


@pytest.mark.parametrize("text", ["", "1/0/2", "a/b", "3/"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_fraction(text)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6).filter(bool))
def test_agrees_with_fraction(a, b):
    f = normalize(a, b)
    assert f.to_fraction() == Fraction(a, b)
    assert f.den > 0
    if a:
        assert reciprocal(f).to_fraction() == Fraction(b, a)
    assert negate(f).to_fraction() == -Fraction(a, b)


@given(st.integers(-1000, 1000), st.integers(1, 1000))
def test_reciprocal_involution(a, b):
    f = normalize(a, b)
    assert reciprocal(reciprocal(f)) == f
