import logging
from typing import Optional
from typing import Sequence

from cubic_fermat_playground.cli.operands import field_for
from cubic_fermat_playground.cli.operands import operand_parameters
from cubic_fermat_playground.cli.operands import parse_kpoint
from cubic_fermat_playground.cli.operands import parse_qpoint
from cubic_fermat_playground.cli.operands import parse_solution
from cubic_fermat_playground.cli.output import point_document
from cubic_fermat_playground.cli.output import solution_document
from cubic_fermat_playground.fermat.correspondence import fermat_k_curve
from cubic_fermat_playground.fermat.correspondence import fermat_q_curve
from cubic_fermat_playground.fermat.correspondence import kpoint_to_qpoint
from cubic_fermat_playground.fermat.correspondence import kpoint_to_solution
from cubic_fermat_playground.fermat.correspondence import qpoint_to_kpoint
from cubic_fermat_playground.fermat.correspondence import qpoint_to_solution
from cubic_fermat_playground.fermat.correspondence import solution_to_kpoint
from cubic_fermat_playground.fermat.correspondence import solution_to_qpoint


logger = logging.getLogger(__name__)

DIRECTIONS = (
    "sol-to-kpoint",
    "sol-to-qpoint",
    "kpoint-to-sol",
    "kpoint-to-qpoint",
    "qpoint-to-kpoint",
    "qpoint-to-sol",
)


class TransformController:
    def render(
        self,
        direction: str,
        d: int,
        k: int,
        elements: Sequence[str] = (),
        x: Optional[str] = None,
        y: Optional[str] = None,
    ) -> dict:
        source, _, target = direction.partition("-to-")
        d, k = operand_parameters(d, k)
        field = field_for(d, k)
        k_curve = fermat_k_curve(k, field)
        q_curve = fermat_q_curve(d, k)

        if source == "sol":
            solution = parse_solution(d, k, elements)
            operand = {"kind": "solution", **solution_document(solution)}
            if target == "kpoint":
                image = solution_to_kpoint(solution)
                curve = k_curve
            else:
                image = solution_to_qpoint(solution, d)
                curve = q_curve
        else:
            if source == "kpoint":
                point = parse_kpoint(d, k, x, y)
                curve = k_curve
            else:
                point = parse_qpoint(d, k, x, y)
                curve = q_curve
            operand = {"kind": "point", "curve": str(curve), **point_document(point)}
            if target == "sol":
                if source == "kpoint":
                    solution = kpoint_to_solution(point, k, field)
                else:
                    solution = qpoint_to_solution(point, d, k)
                logger.debug(f"{direction}: {point} ↦ {solution}.")
                return {
                    "direction": direction,
                    "operand": operand,
                    "image": {"kind": "solution", **solution_document(solution)},
                }
            if source == "kpoint":
                image = kpoint_to_qpoint(point, d, k)
                curve = q_curve
            else:
                image = qpoint_to_kpoint(point, d, k)
                curve = k_curve

        logger.debug(f"{direction}: ↦ {image}.")
        return {
            "direction": direction,
            "operand": operand,
            "image": {"kind": "point", "curve": str(curve), **point_document(image)},
        }
