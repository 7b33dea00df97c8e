from fractions import Fraction

import pytest

from hwav.rational import (
    RationalParseError,
    format_rational,
    inverse_exact,
    parse_rational,
    parse_vector,
    scale_to_integers,
    solve_exact,
)


@pytest.mark.parametrize("text,value", [("3", Fraction(3)), ("-7/2", Fraction(-7, 2)), (" 4 / 6 ", Fraction(2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "abc", "", "1/-2"])
def test_parse_rejects(text):
    with pytest.raises(RationalParseError):
        parse_rational(text)


def test_vector_round_trip():
    v = parse_vector("25/2,-3,0")
    assert v == (Fraction(25, 2), Fraction(-3), Fraction(0))
    assert [format_rational(x) for x in v] == ["25/2", "-3", "0"]


def test_scale_to_integers_even_denominator():
    V, D = scale_to_integers([Fraction(1, 3), Fraction(2)])
    assert D % 2 == 0
    assert [Fraction(x, D) for x in V] == [Fraction(1, 3), Fraction(2)]


def test_solve_and_invert():
    m = [[Fraction(2), Fraction(-1)], [Fraction(-1), Fraction(2)]]
    x = solve_exact(m, [Fraction(1), Fraction(0)])
    assert x == (Fraction(2, 3), Fraction(1, 3))
    inv = inverse_exact(m)
    assert inv == [[Fraction(2, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(2, 3)]]


def test_solve_rejects_inconsistent_and_singular():
    with pytest.raises(ValueError):
        solve_exact([[Fraction(1)], [Fraction(1)]], [Fraction(0), Fraction(1)])
    with pytest.raises(ValueError):
        inverse_exact([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
