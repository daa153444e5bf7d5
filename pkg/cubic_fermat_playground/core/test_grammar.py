from fractions import Fraction

import pytest

from .exceptions import ElementParseError
from .grammar import format_element
from .grammar import parse_element
from .grammar import parse_rational
from .quadratic import quadratic_field


@pytest.mark.parametrize(
    "text,d,a,b",
    [
        ("18+17*sqrt(2)", 2, 18, 17),
        ("-1/2+3/2*sqrt(5)", 5, Fraction(-1, 2), Fraction(3, 2)),
        ("7", 2, 7, 0),
        (" 18 - 17 * sqrt( 2 ) ", 2, 18, -17),
        ("sqrt(-1)", -1, 0, 1),
        ("-sqrt(2)+3", 2, 3, -1),
        ("sqrt(8)", 2, 0, 2),
        ("sqrt(2)*3/4", 2, 0, Fraction(3, 4)),
        ("1+sqrt(4)", 2, 3, 0),
        ("36−34·sqrt(2)", 2, 36, -34),
    ],
)
def test_parse(text: str, d: int, a, b) -> None:
    element = parse_element(text, quadratic_field(d))
    assert element == quadratic_field(d).element(a, b)


def test_parse_infers_field() -> None:
    assert parse_element("14+34*sqrt(2)").field.d == 2
    assert parse_element("sqrt(12)").field.d == 3


@pytest.mark.parametrize(
    "text",
    ["", "18+", "18*17", "1/0", "sqrt(2)+sqrt(3)", "2.5", "x+1", "18++17*sqrt(2)"],
)
def test_parse_errors(text: str) -> None:
    with pytest.raises(ElementParseError):
        parse_element(text, quadratic_field(2))


def test_parse_needs_field_without_radical() -> None:
    with pytest.raises(ElementParseError):
        parse_element("7")


def test_sqrt_of_other_field() -> None:
    with pytest.raises(ElementParseError):
        parse_element("sqrt(3)", quadratic_field(2))


@pytest.mark.parametrize(
    "d,a,b,expected",
    [
        (2, 18, 17, "18+17*sqrt(2)"),
        (2, 18, -17, "18-17*sqrt(2)"),
        (5, Fraction(-1, 2), Fraction(3, 2), "-1/2+3/2*sqrt(5)"),
        (2, 42, 0, "42"),
        (-1, 0, -1, "-sqrt(-1)"),
        (2, 0, 34, "34*sqrt(2)"),
        (3, 0, 0, "0"),
    ],
)
def test_format(d: int, a, b, expected: str) -> None:
    element = quadratic_field(d).element(a, b)
    assert format_element(element) == expected
    assert str(element) == expected
    assert parse_element(expected, element.field) == element


@pytest.mark.parametrize(
    "text,expected",
    [("28", 28), ("-15", -15), ("+3/4", Fraction(3, 4)), (" −129 / 100 ", Fraction(-129, 100))],
)
def test_parse_rational(text: str, expected) -> None:
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "1/0", "sqrt(2)", "1+1", "2.5"])
def test_parse_rational_errors(text: str) -> None:
    with pytest.raises(ElementParseError):
        parse_rational(text)
