"""
Maps between solutions of x³ + y³ = kz³ over K = Q(√d), K-points on
y² = x³ − 432k² and Q-points on y² = x³ − 432d³k².

    solution  ──►  K-point       (12kz/(x+y), 36k(x−y)/(x+y))
    K-point   ──►  solution      (y₀+36k, 36k−y₀, 6x₀)
    K-point   ──►  Q-point       (rd, sd²) for (r, s√d), else via P − σ(P)
    Q-point   ──►  K-point       (x₀/d, (y₀/d²)√d)
"""
import dataclasses
import enum
import logging

from cubic_fermat_playground.core.curves import check_fermat_parameters
from cubic_fermat_playground.core.curves import CurvePoint
from cubic_fermat_playground.core.curves import MordellCurve
from cubic_fermat_playground.core.exceptions import DegenerateConjugateError
from cubic_fermat_playground.core.exceptions import ExcludedParameterError
from cubic_fermat_playground.core.exceptions import FieldMismatchError
from cubic_fermat_playground.core.exceptions import NotOnVarietyError
from cubic_fermat_playground.core.exceptions import PreconditionError
from cubic_fermat_playground.core.exceptions import ProofInvariantError
from cubic_fermat_playground.core.exceptions import TrivialSolutionError
from cubic_fermat_playground.core.quadratic import QuadElem
from cubic_fermat_playground.core.quadratic import QuadField
from cubic_fermat_playground.core.quadratic import quadratic_field
from cubic_fermat_playground.core.quadratic import satisfies_fermat
from cubic_fermat_playground.core.quadratic import Triple


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class FermatSolution:
    x: QuadElem
    y: QuadElem
    z: QuadElem
    k: int

    def __post_init__(self) -> None:
        fields = {e.field for e in (self.x, self.y, self.z)}
        if len(fields) != 1:
            raise FieldMismatchError(
                f"Coordinates of ({self.x}, {self.y}, {self.z}) live in different fields."
            )
        if self.k <= 0:
            raise PreconditionError(f"k={self.k} must be positive.")
        if not satisfies_fermat(self.x, self.y, self.z, self.k):
            raise NotOnVarietyError(
                f"({self.x}, {self.y}, {self.z}) does not solve x³+y³={self.k}z³."
            )

    @classmethod
    def of(cls, field: QuadField, x, y, z, k: int) -> "FermatSolution":
        return cls(field.coerce(x), field.coerce(y), field.coerce(z), k)

    @property
    def field(self) -> QuadField:
        return self.x.field

    @property
    def triple(self) -> Triple:
        return self.x, self.y, self.z

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"


class TrivialityClass(enum.Enum):
    SUM_ZERO = "SumZero"
    PRODUCT_ZERO = "ProductZero"
    NONTRIVIAL = "Nontrivial"

    def __str__(self) -> str:
        return self.value


def classify_solution(solution: FermatSolution) -> TrivialityClass:
    if solution.x + solution.y == 0:
        return TrivialityClass.SUM_ZERO
    if solution.x * solution.y == 0:
        if solution.k != 1:
            # y³ = kz³ would make k a cube in K.
            raise ProofInvariantError(
                f"{solution} has xy=0 and x+y≠0, impossible for cubefree k={solution.k}≠1."
            )
        return TrivialityClass.PRODUCT_ZERO
    return TrivialityClass.NONTRIVIAL


def fermat_k_curve(k: int, field: QuadField) -> MordellCurve:
    return MordellCurve(-432 * k**2, field)


def fermat_q_curve(d: int, k: int) -> MordellCurve:
    return MordellCurve(-432 * d**3 * k**2)


def solution_to_kpoint(solution: FermatSolution) -> CurvePoint:
    x, y, z, k = solution.x, solution.y, solution.z, solution.k
    total = x + y
    if total == 0:
        raise TrivialSolutionError(f"{solution} has x+y=0 and yields no point.")
    curve = fermat_k_curve(k, solution.field)
    return curve.point(12 * k * z / total, 36 * k * (x - y) / total)


def kpoint_to_solution(point: CurvePoint, k: int, field: QuadField) -> FermatSolution:
    """
    (y₀+36k, 36k−y₀, 6x₀). A rational point is read as a point over `field`.
    """
    curve = fermat_k_curve(k, field)
    point = curve.require(point)
    if point.is_infinity:
        raise PreconditionError("The point at infinity has no solution attached.")
    return FermatSolution(point.y + 36 * k, 36 * k - point.y, 6 * point.x, k)


def _conjugate_point(point: CurvePoint) -> CurvePoint:
    return CurvePoint(point.x.conjugate(), point.y.conjugate())


def kpoint_to_qpoint(point: CurvePoint, d: int, k: int) -> CurvePoint:
    field = quadratic_field(d)
    d = field.d
    curve = fermat_k_curve(k, field)
    point = curve.require(point)
    if point.is_infinity:
        raise PreconditionError("The point at infinity has no rational image.")
    shaped = point
    if not (point.x.is_rational() and point.y.is_pure()):
        shaped = curve.subtract(point, _conjugate_point(point))
        if shaped.is_infinity:
            raise DegenerateConjugateError(
                f"{point} is fixed by conjugation, P − σ(P) is the point at infinity.",
                point,
            )
        if not (shaped.x.is_rational() and shaped.y.is_pure()):
            raise ProofInvariantError(f"P − σ(P) = {shaped} is not of the shape (r, s√d).")
        logger.debug(f"Replaced {point} by P − σ(P) = {shaped}.")
    r, s = shaped.x.a, shaped.y.b
    return fermat_q_curve(d, k).point(r * d, s * d**2)


def qpoint_to_kpoint(point: CurvePoint, d: int, k: int) -> CurvePoint:
    field = quadratic_field(d)
    d = field.d
    point = fermat_q_curve(d, k).require(point)
    if point.is_infinity:
        raise PreconditionError("The point at infinity has no K-point attached.")
    return fermat_k_curve(k, field).point(point.x / d, point.y / d**2 * field.sqrt_d)


def qpoint_to_solution(point: CurvePoint, d: int, k: int) -> FermatSolution:
    """
    The solution (36k + (y₀/d²)√d, 36k − (y₀/d²)√d, 6x₀/d) over Q(√d).

    It is nontrivial for every d other than 1 and −3; the check is repeated on
    every result.
    """
    check_fermat_parameters(d, k)
    if d in (1, -3):
        raise ExcludedParameterError(
            f"d={d} is excluded, points on y²=x³−432d³k² need not give nontrivial solutions."
        )
    field = quadratic_field(d)
    point = fermat_q_curve(d, k).require(point)
    if point.is_infinity:
        raise PreconditionError("The point at infinity has no solution attached.")
    t = point.y / d**2 * field.sqrt_d
    solution = FermatSolution(36 * k + t, 36 * k - t, field.coerce(6 * point.x / d), k)
    if solution.z == 0 or classify_solution(solution) != TrivialityClass.NONTRIVIAL:
        raise ProofInvariantError(f"{solution} from {point} is trivial although d={d}.")
    return solution


def solution_to_qpoint(solution: FermatSolution, d: int) -> CurvePoint:
    field = quadratic_field(d)
    if solution.field != field:
        raise FieldMismatchError(f"{solution} does not live in {field}.")
    return kpoint_to_qpoint(solution_to_kpoint(solution), field.d, solution.k)
