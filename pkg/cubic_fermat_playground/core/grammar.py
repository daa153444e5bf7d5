"""
Text form of field elements: `a/b + c/e*sqrt(d)`.

Either term is optional, signs are allowed on each term and whitespace is
ignored. Examples: `18+17*sqrt(2)`, `-1/2+3/2*sqrt(5)`, `7`, `sqrt(-1)`.
Printing produces the canonical form that the parser reads back.
"""
import re
from fractions import Fraction
from typing import Optional

from cubic_fermat_playground.core.exceptions import ElementParseError
from cubic_fermat_playground.core.integers import squarefree_part
from cubic_fermat_playground.core.quadratic import QuadElem
from cubic_fermat_playground.core.quadratic import QuadField
from cubic_fermat_playground.core.quadratic import quadratic_field


_NUMBER = r"\d+(?:/\d+)?"
_SQRT_AFTER = r"sqrt\((?P<radicand>[+-]?\d+)\)"
_SQRT_FIRST = r"sqrt\((?P<radicand_first>[+-]?\d+)\)"

_TERM = re.compile(
    rf"""
    (?P<sign>[+-])?
    (?:
        (?P<coef>{_NUMBER})(?:\*{_SQRT_AFTER})?
      | {_SQRT_FIRST}(?:\*(?P<coef_after>{_NUMBER}))?
    )
    """,
    re.VERBOSE,
)


def _parse_number(text: str) -> Fraction:
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise ElementParseError(f"Zero denominator in {text!r}.")
    return Fraction(int(numerator), int(denominator or 1))


def parse_element(text: str, field: Optional[QuadField] = None) -> QuadElem:
    """
    Parses an element. Without `field` the field is read off the `sqrt(...)`
    term, which then has to be present.
    """
    compact = re.sub(r"\s+", "", text).replace("−", "-").replace("·", "*")
    if not compact:
        raise ElementParseError("Empty element.")

    rational = Fraction(0)
    irrational = Fraction(0)
    radicand_core: Optional[int] = field.d if field is not None else None
    position = 0
    while position < len(compact):
        match = _TERM.match(compact, position)
        if match is None or match.end() == position:
            raise ElementParseError(
                f"Cannot parse {text!r} at position {position}: {compact[position:]!r}."
            )
        if position > 0 and match.group("sign") is None:
            raise ElementParseError(f"Missing '+' or '-' between terms in {text!r}.")
        sign = -1 if match.group("sign") == "-" else 1
        coefficient_text = match.group("coef") or match.group("coef_after") or "1"
        coefficient = sign * _parse_number(coefficient_text)
        radicand_text = match.group("radicand") or match.group("radicand_first")
        if radicand_text is None:
            rational += coefficient
        elif int(radicand_text) != 0:
            radicand = int(radicand_text)
            core, scale = squarefree_part(radicand)
            if core == 1:
                rational += coefficient * scale
            else:
                if radicand_core is None:
                    radicand_core = core
                elif radicand_core != core:
                    raise ElementParseError(
                        f"sqrt({radicand}) does not lie in Q(sqrt({radicand_core}))."
                    )
                irrational += coefficient * scale
        position = match.end()

    if radicand_core is None:
        raise ElementParseError(
            f"Cannot infer the field of {text!r}, it has no sqrt(d) term."
        )
    target = field if field is not None else quadratic_field(radicand_core)
    return target.element(rational, irrational)


def format_element(element: QuadElem) -> str:
    a, b = element.a, element.b
    if b == 0:
        return str(a)
    radical = f"sqrt({element.field.d})"
    magnitude = abs(b)
    irrational = radical if magnitude == 1 else f"{magnitude}*{radical}"
    if a == 0:
        return f"-{irrational}" if b < 0 else irrational
    return f"{a}{'-' if b < 0 else '+'}{irrational}"


_RATIONAL = re.compile(rf"(?P<sign>[+-])?(?P<number>{_NUMBER})")


def parse_rational(text: str) -> Fraction:
    """A signed integer or fraction such as `-15` or `129/100`."""
    compact = re.sub(r"\s+", "", text).replace("−", "-")
    match = _RATIONAL.fullmatch(compact)
    if match is None:
        raise ElementParseError(f"{text!r} is not a rational number.")
    value = _parse_number(match.group("number"))
    return -value if match.group("sign") == "-" else value
