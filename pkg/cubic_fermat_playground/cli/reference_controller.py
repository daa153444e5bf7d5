import logging
from typing import Optional

from cubic_fermat_playground.cli.output import exact
from cubic_fermat_playground.cli.output import reference_document
from cubic_fermat_playground.reference.embedded import EMBEDDED_ENTRIES
from cubic_fermat_playground.reference.embedded import lookup
from cubic_fermat_playground.reference.embedded import lookup_label
from cubic_fermat_playground.reference.lmfdb_api import cross_check
from cubic_fermat_playground.reference.lmfdb_api import fetch_remote
from cubic_fermat_playground.reference.lmfdb_api import RemoteRecord


logger = logging.getLogger(__name__)


def remote_document(record: Optional[RemoteRecord]) -> Optional[dict]:
    if record is None:
        return None
    return {
        "label": record.label,
        "rank": exact(record.rank),
        "torsion": str(record.torsion),
        "fetched_at": record.fetched_at,
    }


class ReferenceController:
    def __init__(self, online: bool = False) -> None:
        self._online = online

    def render(
        self, d: Optional[int] = None, k: int = 1, label: Optional[str] = None
    ) -> dict:
        if label is not None:
            found = lookup_label(label)
            entries = [found] if found else []
        elif d is not None:
            found = lookup(d, k)
            entries = [found] if found else []
        else:
            entries = list(EMBEDDED_ENTRIES)

        result: dict = {"online": self._online, "entries": [], "remote_only": None}
        for entry in entries:
            item = {
                "embedded": reference_document(entry),
                "remote": None,
                "mismatches": [],
                "error": None,
            }
            if self._online:
                comparison = cross_check(entry)
                item["remote"] = remote_document(comparison.remote)
                item["mismatches"] = list(comparison.mismatches)
                item["error"] = comparison.error
            result["entries"].append(item)

        if label is not None and not entries and self._online:
            logger.info(f"{label} is not embedded, asking the database only.")
            result["remote_only"] = remote_document(fetch_remote(label))
        return result
