"""
Arithmetic in K = Q(√d) and its ring of integers.

Elements are stored on the basis ⟨1, √d⟩. The ω-basis ⟨1, (1+√d)/2⟩ used for
d ≡ 1 (mod 4) only appears as a view through `IntegralForm`.
"""
import dataclasses
import functools
import logging
import math
from fractions import Fraction
from typing import Union

from cubic_fermat_playground.core.exceptions import FieldMismatchError
from cubic_fermat_playground.core.exceptions import NotOnVarietyError
from cubic_fermat_playground.core.exceptions import PreconditionError
from cubic_fermat_playground.core.integers import is_squarefree
from cubic_fermat_playground.core.integers import squarefree_part


logger = logging.getLogger(__name__)

BASIS_SQRT = "1,sqrt(d)"
BASIS_OMEGA = "1,omega"


@dataclasses.dataclass(frozen=True)
class QuadField:
    d: int

    def __post_init__(self) -> None:
        if self.d in (0, 1) or not is_squarefree(self.d):
            raise PreconditionError(
                f"Q(sqrt({self.d})) is not a quadratic field with squarefree d."
            )

    @property
    def basis(self) -> str:
        return BASIS_OMEGA if self.d % 4 == 1 else BASIS_SQRT

    def element(self, a=0, b=0) -> "QuadElem":
        return QuadElem(Fraction(a), Fraction(b), self)

    @property
    def sqrt_d(self) -> "QuadElem":
        return self.element(0, 1)

    @property
    def omega(self) -> "QuadElem":
        return self.element(Fraction(1, 2), Fraction(1, 2))

    def coerce(self, value) -> "QuadElem":
        if isinstance(value, QuadElem):
            if value.field != self:
                raise FieldMismatchError(
                    f"{value} lives in {value.field}, expected {self}."
                )
            return value
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise FieldMismatchError(f"Cannot interpret {value!r} as element of {self}.")
        return self.element(value, 0)

    def contains(self, value) -> bool:
        if isinstance(value, QuadElem):
            return value.field == self
        return isinstance(value, (int, Fraction)) and not isinstance(value, bool)

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"


@functools.cache
def quadratic_field(d: int) -> QuadField:
    """The field Q(√d) for any integer `d`, square factors are dropped."""
    if d == 0:
        raise PreconditionError("d = 0 does not define a quadratic field.")
    core, scale = squarefree_part(d)
    if scale != 1:
        logger.info(f"Normalizing d={d} to its squarefree part {core}.")
    return QuadField(core)


Scalar = Union[int, Fraction, "QuadElem"]


def _is_scalar(value) -> bool:
    """Elements of another field count, coercion rejects them."""
    if isinstance(value, QuadElem):
        return True
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


@dataclasses.dataclass(frozen=True)
class QuadElem:
    a: Fraction
    b: Fraction
    field: QuadField

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def _lift(self, other: Scalar) -> "QuadElem":
        return self.field.coerce(other)

    def __add__(self, other: Scalar) -> "QuadElem":
        if not _is_scalar(other):
            return NotImplemented
        o = self._lift(other)
        return QuadElem(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.a, -self.b, self.field)

    def __sub__(self, other: Scalar) -> "QuadElem":
        if not _is_scalar(other):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other: Scalar) -> "QuadElem":
        if not _is_scalar(other):
            return NotImplemented
        return self._lift(other) - self

    def __mul__(self, other: Scalar) -> "QuadElem":
        if not _is_scalar(other):
            return NotImplemented
        o = self._lift(other)
        d = self.field.d
        return QuadElem(
            self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, self.field
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "QuadElem":
        if not _is_scalar(other):
            return NotImplemented
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other: Scalar) -> "QuadElem":
        if not _is_scalar(other):
            return NotImplemented
        return self._lift(other) * self.inverse()

    def __pow__(self, exponent: int) -> "QuadElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.element(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElem):
            return (self.a, self.b, self.field) == (other.a, other.b, other.field)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.field.d))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __str__(self) -> str:
        from cubic_fermat_playground.core.grammar import format_element

        return format_element(self)

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.a, -self.b, self.field)

    def norm(self) -> Fraction:
        return self.a**2 - self.field.d * self.b**2

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> "QuadElem":
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError(f"The zero element of {self.field} has no inverse.")
        conjugate = self.conjugate()
        return QuadElem(conjugate.a / norm, conjugate.b / norm, self.field)

    def cube(self) -> "QuadElem":
        a, b, d = self.a, self.b, self.field.d
        return QuadElem(a**3 + 3 * a * b**2 * d, 3 * a**2 * b + b**3 * d, self.field)

    def is_rational(self) -> bool:
        return self.b == 0

    def is_pure(self) -> bool:
        """Whether the element has the shape s√d."""
        return self.a == 0

    def is_integral(self) -> bool:
        if self.field.d % 4 == 1:
            return (2 * self.b).denominator == 1 and (self.a - self.b).denominator == 1
        return self.a.denominator == 1 and self.b.denominator == 1

    def to_integral_form(self) -> "IntegralForm":
        if not self.is_integral():
            raise PreconditionError(f"{self} is not an algebraic integer.")
        if self.field.basis == BASIS_OMEGA:
            r, s = self.a - self.b, 2 * self.b
        else:
            r, s = self.a, self.b
        return IntegralForm(self.field.basis, (int(r), int(s)))


@dataclasses.dataclass(frozen=True)
class IntegralForm:
    basis: str
    coordinates: tuple[int, int]

    def to_element(self, field: QuadField) -> QuadElem:
        if field.basis != self.basis:
            raise FieldMismatchError(f"{field} does not use the basis {self.basis}.")
        r, s = self.coordinates
        if self.basis == BASIS_OMEGA:
            return r + s * field.omega
        return field.element(r, s)

    def __str__(self) -> str:
        r, s = self.coordinates
        generator = "omega" if self.basis == BASIS_OMEGA else "sqrt(d)"
        return f"{r} + {s}*{generator}"


Triple = tuple[QuadElem, QuadElem, QuadElem]


def satisfies_fermat(x: QuadElem, y: QuadElem, z: QuadElem, k: int) -> bool:
    return x.cube() + y.cube() == k * z.cube()


def clear_denominators(
    x: QuadElem, y: QuadElem, z: QuadElem, k: int
) -> tuple[Triple, int]:
    """
    Scales a solution of x³+y³=kz³ over K to one over the ring of integers.

    The scale is the lcm of all denominators of the coordinates on ⟨1, √d⟩.
    A triple that is integral already comes back unchanged with scale 1.
    """
    if not satisfies_fermat(x, y, z, k):
        raise NotOnVarietyError(f"({x}, {y}, {z}) does not solve x³+y³={k}z³.")
    if not (x or y or z):
        raise PreconditionError("The zero triple cannot be rescaled.")
    if all(e.is_integral() for e in (x, y, z)):
        return (x, y, z), 1
    scale = math.lcm(*(c.denominator for e in (x, y, z) for c in (e.a, e.b)))
    logger.debug(f"Clearing denominators with b={scale}.")
    result = (scale * x, scale * y, scale * z)
    assert all(e.is_integral() for e in result)
    assert satisfies_fermat(*result, k)
    return result, scale


def primitive_triple(x: QuadElem, y: QuadElem, z: QuadElem) -> tuple[Triple, int]:
    """
    Divides an integral triple by the gcd of its integral coordinates.
    """
    coordinates = [c for e in (x, y, z) for c in e.to_integral_form().coordinates]
    content = math.gcd(*coordinates)
    if content in (0, 1):
        return (x, y, z), 1
    return (x / content, y / content, z / content), content
