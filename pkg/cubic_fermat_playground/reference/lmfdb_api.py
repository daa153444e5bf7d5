"""
Optional cross-check of the embedded curve facts against the LMFDB REST
interface. Records are cached per label, the embedded table stays
authoritative.
"""
import dataclasses
import datetime
import json
import logging
import os
import pathlib
import tempfile
from typing import Any
from typing import Optional

import requests

from cubic_fermat_playground.core.config import get_cache_dir
from cubic_fermat_playground.core.config import get_config
from cubic_fermat_playground.core.curves import TorsionGroup
from cubic_fermat_playground.core.exceptions import RemoteLookupError
from cubic_fermat_playground.reference.embedded import ReferenceEntry


logger = logging.getLogger(__name__)

USER_AGENT = "cubic-fermat-playground (reference cross-check)"


def get_state(path: pathlib.Path) -> Any:
    if path.exists():
        with open(path) as f:
            return json.load(f)


def set_state(path: pathlib.Path, state: Any) -> None:
    path.parent.mkdir(exist_ok=True, parents=True)
    fd, temporary = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as f:
        json.dump(state, f, indent=2, sort_keys=True, ensure_ascii=False)
    os.replace(temporary, path)


@dataclasses.dataclass(frozen=True)
class RemoteRecord:
    label: str
    rank: int
    torsion: TorsionGroup
    fetched_at: str


def _parse_record(label: str, record: dict, fetched_at: str) -> RemoteRecord:
    try:
        return RemoteRecord(
            label,
            int(record["rank"]),
            TorsionGroup.from_structure(list(record["torsion_structure"])),
            fetched_at,
        )
    except (KeyError, TypeError, ValueError) as e:
        raise RemoteLookupError(f"Cannot parse the record of {label}: {e}") from e


def fetch_remote(
    label: str,
    url: Optional[str] = None,
    timeout: Optional[float] = None,
    cache_dir: Optional[pathlib.Path] = None,
) -> RemoteRecord:
    settings = get_config()["reference"]
    url = url or settings["url"]
    timeout = timeout or settings["timeout"]
    cache_path = (cache_dir or get_cache_dir()) / f"{label}.json"

    if (cached := get_state(cache_path)) is not None:
        logger.debug(f"Using cached record for {label} from {cached['fetched_at']}.")
        return _parse_record(label, cached["record"], cached["fetched_at"])

    logger.info(f"Fetching curve {label} from {url} …")
    try:
        response = requests.get(
            url,
            params={"lmfdb_label": label, "_format": "json"},
            headers={"User-Agent": USER_AGENT},
            timeout=timeout,
        )
    except requests.RequestException as e:
        raise RemoteLookupError(f"Request for {label} failed: {e}") from e
    if not response.ok:
        raise RemoteLookupError(f"Request for {label} failed with HTTP {response.status_code}.")
    try:
        data = response.json()["data"]
    except (ValueError, KeyError, TypeError) as e:
        raise RemoteLookupError(f"Unexpected response for {label}: {e}") from e
    if not data:
        raise RemoteLookupError(f"Curve {label} not found.")

    fetched_at = datetime.datetime.now(datetime.timezone.utc).isoformat()
    record = {key: data[0].get(key) for key in ("rank", "torsion_structure")}
    result = _parse_record(label, record, fetched_at)
    set_state(cache_path, {"label": label, "record": record, "fetched_at": fetched_at})
    return result


@dataclasses.dataclass(frozen=True)
class ReferenceComparison:
    entry: ReferenceEntry
    remote: Optional[RemoteRecord]
    mismatches: tuple[str, ...]
    error: Optional[str] = None


def compare_with_embedded(entry: ReferenceEntry, remote: RemoteRecord) -> tuple[str, ...]:
    mismatches = []
    if remote.rank != entry.rank:
        mismatches.append(f"rank: embedded {entry.rank}, remote {remote.rank}")
    if remote.torsion != entry.torsion:
        mismatches.append(f"torsion: embedded {entry.torsion}, remote {remote.torsion}")
    for mismatch in mismatches:
        logger.warning(f"Curve {entry.curve_label} differs from the database, {mismatch}.")
    return tuple(mismatches)


def cross_check(entry: ReferenceEntry, **fetch_options) -> ReferenceComparison:
    """Network trouble is reported in the result, not raised."""
    try:
        remote = fetch_remote(entry.curve_label, **fetch_options)
    except RemoteLookupError as e:
        logger.warning(f"Keeping embedded data for {entry.curve_label}: {e}")
        return ReferenceComparison(entry, None, (), str(e))
    return ReferenceComparison(entry, remote, compare_with_embedded(entry, remote))
