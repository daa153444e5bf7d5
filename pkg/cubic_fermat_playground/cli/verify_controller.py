from typing import Optional
from typing import Sequence

from cubic_fermat_playground.cli.operands import field_for
from cubic_fermat_playground.cli.operands import operand_parameters
from cubic_fermat_playground.cli.operands import parse_kpoint
from cubic_fermat_playground.cli.operands import parse_qpoint
from cubic_fermat_playground.cli.operands import parse_solution
from cubic_fermat_playground.cli.output import point_document
from cubic_fermat_playground.cli.output import solution_document
from cubic_fermat_playground.core.curves import torsion_points_enumerate
from cubic_fermat_playground.core.exceptions import DegenerateConjugateError
from cubic_fermat_playground.core.exceptions import ExcludedParameterError
from cubic_fermat_playground.core.exceptions import NotOnCurveError
from cubic_fermat_playground.core.exceptions import TrivialSolutionError
from cubic_fermat_playground.fermat.correspondence import fermat_k_curve
from cubic_fermat_playground.fermat.correspondence import fermat_q_curve
from cubic_fermat_playground.fermat.correspondence import kpoint_to_solution
from cubic_fermat_playground.fermat.correspondence import qpoint_to_solution
from cubic_fermat_playground.fermat.correspondence import solution_to_qpoint


class VerifyController:
    def render_solution(self, d: int, k: int, elements: Sequence[str]) -> dict:
        d, k = operand_parameters(d, k)
        solution = parse_solution(d, k, elements)
        result = {
            "object": "solution",
            "valid": True,
            "solution": solution_document(solution),
            "qpoint": None,
            "note": None,
        }
        try:
            result["qpoint"] = point_document(solution_to_qpoint(solution, d))
        except (TrivialSolutionError, DegenerateConjugateError) as e:
            result["note"] = str(e)
        return result

    def render_point(
        self, d: int, k: int, x: Optional[str], y: Optional[str], over: str = "q"
    ) -> dict:
        d, k = operand_parameters(d, k)
        if over == "k":
            point = parse_kpoint(d, k, x, y)
            curve = fermat_k_curve(k, field_for(d, k))
        else:
            point = parse_qpoint(d, k, x, y)
            curve = fermat_q_curve(d, k)
        if not curve.contains(point):
            raise NotOnCurveError(f"({x}, {y}) is not on {curve}.")
        result = {
            "object": "point",
            "valid": True,
            "over": over,
            "curve": str(curve),
            "point": point_document(point),
            "torsion": None,
            "solution": None,
            "note": None,
        }
        if over == "k":
            result["solution"] = solution_document(kpoint_to_solution(point, k, curve.base))
            return result
        result["torsion"] = point in torsion_points_enumerate(curve.D)
        try:
            result["solution"] = solution_document(qpoint_to_solution(point, d, k))
        except ExcludedParameterError as e:
            result["note"] = str(e)
        return result
