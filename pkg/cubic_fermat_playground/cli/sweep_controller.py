import dataclasses
from typing import Optional

from cubic_fermat_playground.fermat.sweeps import sweep_torsion
from cubic_fermat_playground.fermat.sweeps import sweep_signs


SWEEPS = ("torsion", "signs")


class SweepController:
    def __init__(self, progress: bool = True) -> None:
        self._progress = progress

    def render(self, kind: str, limit: Optional[int] = None) -> dict:
        if kind == "torsion":
            limit = limit or 50
            mismatches = sweep_torsion(limit, 20, progress=self._progress)
        else:
            limit = limit or 2000
            mismatches = sweep_signs(limit, progress=self._progress)
        return {
            "sweep": kind,
            "limit": str(limit),
            "ok": not mismatches,
            "mismatches": [
                {key: str(value) for key, value in dataclasses.asdict(m).items()}
                for m in mismatches
            ],
        }
