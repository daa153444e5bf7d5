from typing import Sequence

from cubic_fermat_playground.cli.operands import operand_parameters
from cubic_fermat_playground.cli.operands import parse_solution
from cubic_fermat_playground.cli.output import exact
from cubic_fermat_playground.cli.output import solution_document
from cubic_fermat_playground.core.quadratic import clear_denominators
from cubic_fermat_playground.core.quadratic import primitive_triple
from cubic_fermat_playground.fermat.correspondence import FermatSolution


class ClearController:
    def render(self, d: int, k: int, elements: Sequence[str]) -> dict:
        d, k = operand_parameters(d, k)
        solution = parse_solution(d, k, elements)
        cleared, scale = clear_denominators(*solution.triple, k)
        primitive, content = primitive_triple(*cleared)
        return {
            "input": solution_document(solution),
            "scale": exact(scale),
            "integral": solution_document(FermatSolution(*cleared, k)),
            "content": exact(content),
            "primitive": solution_document(FermatSolution(*primitive, k)),
        }
