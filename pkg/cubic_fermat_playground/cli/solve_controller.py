import logging

from cubic_fermat_playground.cli.output import verdict_document
from cubic_fermat_playground.core.search import SearchBounds
from cubic_fermat_playground.fermat.pipeline import full_pipeline


logger = logging.getLogger(__name__)


class SolveController:
    def __init__(self, bounds: SearchBounds, workers: int = 1) -> None:
        self._bounds = bounds
        self._workers = workers

    def render(self, d: int, k: int) -> dict:
        verdict = full_pipeline(d, k, self._bounds, workers=self._workers)
        logger.info(f"Verdict for d={d}, k={k}: {verdict.kind}.")
        return verdict_document(verdict)
