"""
Mordell curves y² = x³ + D over Q or over a quadratic field.

The group law uses the chord and tangent formulas for a Weierstrass model
without x-term, so the same code serves rational and quadratic coordinates.
"""
import dataclasses
import enum
import logging
from fractions import Fraction
from typing import Optional
from typing import Union

from cubic_fermat_playground.core.exceptions import FieldMismatchError
from cubic_fermat_playground.core.exceptions import NotOnCurveError
from cubic_fermat_playground.core.exceptions import PreconditionError
from cubic_fermat_playground.core.integers import exact_cbrt
from cubic_fermat_playground.core.integers import exact_sqrt
from cubic_fermat_playground.core.integers import is_cubefree
from cubic_fermat_playground.core.integers import is_squarefree
from cubic_fermat_playground.core.integers import powerfree_decompose
from cubic_fermat_playground.core.integers import QQ
from cubic_fermat_playground.core.integers import RationalField
from cubic_fermat_playground.core.quadratic import QuadElem
from cubic_fermat_playground.core.quadratic import QuadField


logger = logging.getLogger(__name__)

BaseField = Union[RationalField, QuadField]
Coordinate = Union[Fraction, QuadElem]


class TorsionGroup(enum.Enum):
    Z6 = "Z/6Z"
    Z3 = "Z/3Z"
    Z2 = "Z/2Z"
    TRIVIAL = "0"

    @property
    def order(self) -> int:
        return {"Z/6Z": 6, "Z/3Z": 3, "Z/2Z": 2, "0": 1}[self.value]

    @classmethod
    def from_structure(cls, structure: list[int]) -> "TorsionGroup":
        """From the list of cyclic factor orders, `[]` being the trivial group."""
        order = 1
        for factor in structure:
            order *= factor
        by_order = {group.order: group for group in cls}
        if len(structure) > 1 or order not in by_order:
            raise ValueError(f"Torsion structure {structure} is impossible on y²=x³+D.")
        return by_order[order]

    def __str__(self) -> str:
        return self.value


@dataclasses.dataclass(frozen=True)
class CurvePoint:
    x: Optional[Coordinate] = None
    y: Optional[Coordinate] = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        if self.is_infinity:
            return "infinity"
        return f"({self.x}, {self.y})"


INFINITY = CurvePoint()


@dataclasses.dataclass(frozen=True)
class MordellCurve:
    D: int
    base: BaseField = QQ

    def __post_init__(self) -> None:
        if self.D == 0:
            raise PreconditionError("y² = x³ is singular, D must be nonzero.")

    def over(self, base: BaseField) -> "MordellCurve":
        return MordellCurve(self.D, base)

    def point(self, x, y) -> CurvePoint:
        result = CurvePoint(self.base.coerce(x), self.base.coerce(y))
        if not self.contains(result):
            raise NotOnCurveError(f"{result} is not on {self}.")
        return result

    def _check_field(self, point: CurvePoint) -> None:
        for coordinate in (point.x, point.y):
            if not self.base.contains(coordinate):
                raise FieldMismatchError(
                    f"Coordinate {coordinate} of {point} does not lie in {self.base}."
                )

    def contains(self, point: CurvePoint) -> bool:
        if point.is_infinity:
            return True
        self._check_field(point)
        x = self.base.coerce(point.x)
        y = self.base.coerce(point.y)
        return y * y == x * x * x + self.D

    def require(self, point: CurvePoint) -> CurvePoint:
        """The point with coordinates in the base field, or `NotOnCurveError`."""
        if not self.contains(point):
            raise NotOnCurveError(f"{point} is not on {self}.")
        if point.is_infinity:
            return point
        return CurvePoint(self.base.coerce(point.x), self.base.coerce(point.y))

    def negate(self, point: CurvePoint) -> CurvePoint:
        point = self.require(point)
        if point.is_infinity:
            return point
        return CurvePoint(point.x, -point.y)

    def add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        p = self.require(p)
        q = self.require(q)
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        if p.x == q.x:
            if p.y + q.y == 0:
                return INFINITY
            slope = 3 * p.x * p.x / (2 * p.y)
        else:
            slope = (q.y - p.y) / (q.x - p.x)
        x = slope * slope - p.x - q.x
        y = slope * (p.x - x) - p.y
        return CurvePoint(x, y)

    def subtract(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        return self.add(p, self.negate(q))

    def double(self, point: CurvePoint) -> CurvePoint:
        return self.add(point, point)

    def multiply(self, n: int, point: CurvePoint) -> CurvePoint:
        if n < 0:
            return self.multiply(-n, self.negate(point))
        result = INFINITY
        addend = self.require(point)
        while n:
            if n & 1:
                result = self.add(result, addend)
            addend = self.double(addend)
            n >>= 1
        return result

    def order_of(self, point: CurvePoint, limit: int = 12) -> Optional[int]:
        """The order of `point` if it is at most `limit`."""
        current = self.require(point)
        for n in range(1, limit + 1):
            if current.is_infinity:
                return n
            current = self.add(current, point)
        return None

    def scaled(self, b: Union[int, Fraction]) -> "MordellCurve":
        """The target E_{D/b⁶} of φ_b, which has to have an integral D."""
        if b == 0:
            raise PreconditionError("φ_b needs b ≠ 0.")
        target = Fraction(self.D) / Fraction(b) ** 6
        if target.denominator != 1:
            raise PreconditionError(f"{self.D}/({b})⁶ is not an integer.")
        return MordellCurve(int(target), self.base)

    def __str__(self) -> str:
        sign = "-" if self.D < 0 else "+"
        return f"y^2 = x^3 {sign} {abs(self.D)} over {self.base}"


def on_curve(point: CurvePoint, curve: MordellCurve) -> bool:
    return curve.contains(point)


def iso_phi(point: CurvePoint, curve: MordellCurve, b: Union[int, Fraction]) -> CurvePoint:
    """
    φ_b: (x, y) ↦ (x/b², y/b³) from E_A to E_{A/b⁶}.

    A fractional `b` gives the inverse direction, φ_{1/b} undoes φ_b.
    """
    target = curve.scaled(b)
    point = curve.require(point)
    if point.is_infinity:
        return INFINITY
    b = Fraction(b)
    image = CurvePoint(point.x / b**2, point.y / b**3)
    assert target.contains(image)
    return image


def sixth_free_model(a: int) -> tuple[int, int]:
    """Returns (D, b) with A = D·b⁶ and D sixth-power-free."""
    return powerfree_decompose(a, 6)


def torsion_of_D(D: int) -> TorsionGroup:
    if D == 0:
        raise PreconditionError("D must be nonzero.")
    reduced, _ = sixth_free_model(D)
    if reduced == 1:
        return TorsionGroup.Z6
    if exact_sqrt(reduced) is not None or reduced == -432:
        return TorsionGroup.Z3
    if exact_cbrt(reduced) is not None:
        return TorsionGroup.Z2
    return TorsionGroup.TRIVIAL


def check_fermat_parameters(d: int, k: int) -> None:
    if not is_squarefree(d):
        raise PreconditionError(f"d={d} is not a squarefree integer.")
    if k <= 0 or not is_cubefree(k):
        raise PreconditionError(f"k={k} is not a positive cubefree integer.")


def torsion_of_dk(d: int, k: int) -> TorsionGroup:
    """Torsion of E_{−432d³k²}(Q) read off from d and k alone."""
    check_fermat_parameters(d, k)
    if d == -3 and k == 2:
        return TorsionGroup.Z6
    if d == -3 or (d, k) == (1, 1):
        return TorsionGroup.Z3
    if k == 2:
        return TorsionGroup.Z2
    return TorsionGroup.TRIVIAL


def three_torsion_check(point: CurvePoint, curve: MordellCurve) -> bool:
    point = curve.require(point)
    if point.is_infinity:
        return False
    return curve.double(point) == curve.negate(point)


def torsion_points_enumerate(D: int) -> list[CurvePoint]:
    """
    All nontrivial rational torsion points of y² = x³ + D.

    The points are written down on the sixth-power-free model and carried back
    with the inverse of φ_b.
    """
    reduced, b = sixth_free_model(D)
    model = MordellCurve(reduced)
    if reduced == 1:
        points = [(0, 1), (0, -1), (-1, 0), (2, 3), (2, -3)]
    elif reduced == -432:
        points = [(12, 36), (12, -36)]
    elif (t := exact_sqrt(reduced)) is not None:
        points = [(0, t), (0, -t)]
    elif (c := exact_cbrt(reduced)) is not None:
        points = [(-c, 0)]
    else:
        points = []
    return [iso_phi(model.point(x, y), model, Fraction(1, b)) for x, y in points]


def reduce_minus_three(k: int) -> tuple[MordellCurve, MordellCurve, int]:
    """
    For d = −3 the curve E_{−432k²(−3)³} = E_{11664k²} is isomorphic to
    E_{16k²} via φ_b with b = −3. Returns source, target and b.
    """
    source = MordellCurve(-432 * k**2 * (-3) ** 3)
    b = -3
    return source, source.scaled(b), b
