from typing import Optional
from typing import Sequence

from cubic_fermat_playground.core.curves import check_fermat_parameters
from cubic_fermat_playground.core.curves import CurvePoint
from cubic_fermat_playground.core.exceptions import ElementParseError
from cubic_fermat_playground.core.exceptions import PreconditionError
from cubic_fermat_playground.core.grammar import parse_element
from cubic_fermat_playground.core.grammar import parse_rational
from cubic_fermat_playground.core.quadratic import QuadField
from cubic_fermat_playground.core.quadratic import quadratic_field
from cubic_fermat_playground.fermat.correspondence import FermatSolution
from cubic_fermat_playground.fermat.pipeline import normalize_parameters


def operand_parameters(d: int, k: int) -> tuple[int, int]:
    """
    (d, k) with d reduced to its squarefree part. Operands are written for the
    given k, so k has to be cubefree already.
    """
    parameters = normalize_parameters(d, k)
    if parameters.k_scale != 1:
        raise PreconditionError(
            f"k={k} is not cubefree, write the operands for k={parameters.k} "
            f"with z multiplied by {parameters.k_scale}."
        )
    return parameters.d, parameters.k


def field_for(d: int, k: int) -> QuadField:
    check_fermat_parameters(d, k)
    return quadratic_field(d)


def parse_solution(d: int, k: int, elements: Sequence[str]) -> FermatSolution:
    if len(elements) != 3:
        raise ElementParseError(f"A solution needs three elements, got {len(elements)}.")
    field = field_for(d, k)
    x, y, z = (parse_element(text, field) for text in elements)
    return FermatSolution(x, y, z, k)


def _require_coordinates(x: Optional[str], y: Optional[str]) -> tuple[str, str]:
    if x is None or y is None:
        raise ElementParseError("A point needs both --x and --y.")
    return x, y


def parse_kpoint(d: int, k: int, x: Optional[str], y: Optional[str]) -> CurvePoint:
    x, y = _require_coordinates(x, y)
    field = field_for(d, k)
    return CurvePoint(parse_element(x, field), parse_element(y, field))


def parse_qpoint(d: int, k: int, x: Optional[str], y: Optional[str]) -> CurvePoint:
    x, y = _require_coordinates(x, y)
    check_fermat_parameters(d, k)
    return CurvePoint(parse_rational(x), parse_rational(y))
