"""
Documents produced by the commands. Every number is an exact string, the same
document feeds the JSON output and the text templates.
"""
import dataclasses
import json
from typing import Any
from typing import Optional

import jinja2

from cubic_fermat_playground.core.curves import CurvePoint
from cubic_fermat_playground.core.exceptions import DegenerateConjugateError
from cubic_fermat_playground.core.root_number import RootNumberReport
from cubic_fermat_playground.fermat.correspondence import classify_solution
from cubic_fermat_playground.fermat.correspondence import FermatSolution
from cubic_fermat_playground.fermat.pipeline import Classification
from cubic_fermat_playground.fermat.pipeline import SearchDiagnostic
from cubic_fermat_playground.fermat.pipeline import Verdict
from cubic_fermat_playground.reference.embedded import ReferenceEntry


SCHEMA_VERSION = 1

environment = jinja2.Environment(
    loader=jinja2.PackageLoader("cubic_fermat_playground", "cli/templates"),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    undefined=jinja2.StrictUndefined,
)


def exact(value: Any) -> Optional[str]:
    if value is None:
        return None
    return str(value)


def point_document(point: CurvePoint) -> dict:
    if point.is_infinity:
        return {"infinity": True}
    return {"x": exact(point.x), "y": exact(point.y)}


def solution_document(solution: FermatSolution) -> dict:
    return {
        "x": exact(solution.x),
        "y": exact(solution.y),
        "z": exact(solution.z),
        "k": exact(solution.k),
        "field": str(solution.field),
        "triviality": str(classify_solution(solution)),
    }


def root_number_document(report: RootNumberReport) -> dict:
    return {
        "D": exact(report.D),
        "a": exact(report.a),
        "D2": exact(report.D2),
        "b": exact(report.b),
        "D3": exact(report.D3),
        "w2": exact(report.w2),
        "w3": exact(report.w3),
        "odd_local_signs": [
            {"p": exact(p), "w": exact(sign)} for p, sign in report.odd_local_signs
        ],
        "W": exact(report.W),
    }


def reference_document(entry: Optional[ReferenceEntry]) -> Optional[dict]:
    if entry is None:
        return None
    return {
        "d": exact(entry.d),
        "k": exact(entry.k),
        "label": entry.curve_label,
        "reduced_D": exact(entry.reduced_D),
        "rank": exact(entry.rank),
        "torsion": str(entry.torsion),
        "conclusion": entry.conclusion,
    }


def classification_document(classification: Classification) -> dict:
    parameters = classification.parameters
    return {
        "d": exact(parameters.d),
        "k": exact(parameters.k),
        "d_scale": exact(parameters.d_scale),
        "k_scale": exact(parameters.k_scale),
        "D": exact(parameters.D),
        "torsion": str(classification.torsion),
        "root_number": root_number_document(classification.root_number),
        "fermat_root_number": exact(classification.fermat_root_number),
        "criterion": classification.criterion,
        "reference": reference_document(classification.reference),
        "exclusion_note": classification.exclusion_note,
    }


def search_document(search: SearchDiagnostic) -> dict:
    return {
        "max_denominator": exact(search.bounds.max_denominator),
        "max_height": exact(search.bounds.max_height),
        "exhausted": search.exhausted,
        "points": [
            dict(point_document(p), torsion=p in search.torsion_points)
            for p in search.points
        ],
    }


def verdict_document(verdict: Verdict) -> dict:
    qpoint, solution, witness = verdict.qpoint, verdict.raw_solution, verdict.witness
    return {
        "verdict": str(verdict.kind),
        "classification": classification_document(verdict.classification),
        "search": search_document(verdict.search),
        "qpoint": point_document(qpoint) if qpoint is not None else None,
        "solution": solution_document(solution) if solution is not None else None,
        "witness": solution_document(witness) if witness is not None else None,
    }


@dataclasses.dataclass
class CommandResult:
    command: str
    document: dict
    status: int = 0

    def to_json(self) -> str:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "status": self.status,
        }
        payload.update(self.document)
        return json.dumps(payload, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        name = "error" if "error" in self.document else self.command
        return environment.get_template(f"{name}.txt.j2").render(**self.document)


def error_result(command: str, error: Exception, status: int) -> CommandResult:
    details: dict[str, Any] = {"type": type(error).__name__, "message": str(error)}
    if isinstance(error, DegenerateConjugateError):
        details["point"] = point_document(error.point)
    return CommandResult(command, {"error": details}, status)
