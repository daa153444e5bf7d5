"""
Curves y² = x³ − 432d³k² whose Fermat cubics are known to have only trivial
solutions, with their database labels.
"""
import dataclasses
import logging
from typing import Optional

from cubic_fermat_playground.core.curves import sixth_free_model
from cubic_fermat_playground.core.curves import torsion_of_dk
from cubic_fermat_playground.core.curves import TorsionGroup
from cubic_fermat_playground.core.exceptions import ProofInvariantError


logger = logging.getLogger(__name__)

TRIVIAL_ONLY = "only trivial solutions"


@dataclasses.dataclass(frozen=True)
class ReferenceEntry:
    d: int
    k: int
    curve_label: str
    reduced_D: int
    rank: int
    torsion: TorsionGroup
    conclusion: str = TRIVIAL_ONLY


EMBEDDED_ENTRIES = (
    ReferenceEntry(1, 1, "27.a3", -432, 0, TorsionGroup.Z3),
    ReferenceEntry(-1, 1, "432.e4", 432, 0, TorsionGroup.TRIVIAL),
    ReferenceEntry(-3, 1, "27.a4", 16, 0, TorsionGroup.Z3),
)


def lookup(d: int, k: int) -> Optional[ReferenceEntry]:
    for entry in EMBEDDED_ENTRIES:
        if (entry.d, entry.k) == (d, k):
            return entry
    return None


EXCLUDED_IN_STATEMENT = frozenset({-1, 3})
EXCLUDED_IN_ARGUMENT = frozenset({1, -3})


def _format_set(values) -> str:
    ordered = sorted(values, key=lambda v: (abs(v), v))
    return "{" + ", ".join(str(v) for v in ordered) + "}"


def exclusion_note(d: int, k: int) -> Optional[str]:
    """
    For the trivial-only rows: the excluded values of d are listed three ways
    and the lists disagree. The row is decided by its rank 0 curve instead.
    """
    entry = lookup(d, k)
    if entry is None:
        return None
    trivial_only = frozenset(e.d for e in EMBEDDED_ENTRIES if e.k == 1)
    return (
        f"d={d} is decided by the rank 0 curve {entry.curve_label}. "
        f"The excluded values of d disagree: the nontriviality statement leaves out "
        f"d in {_format_set(EXCLUDED_IN_STATEMENT)}, its argument breaks down at "
        f"d in {_format_set(EXCLUDED_IN_ARGUMENT)}, the trivial-only curves have "
        f"d in {_format_set(trivial_only)}."
    )


def lookup_label(label: str) -> Optional[ReferenceEntry]:
    for entry in EMBEDDED_ENTRIES:
        if entry.curve_label == label:
            return entry
    return None


def check_embedded_entries() -> None:
    for entry in EMBEDDED_ENTRIES:
        reduced, _ = sixth_free_model(-432 * entry.d**3 * entry.k**2)
        if reduced != entry.reduced_D:
            raise ProofInvariantError(
                f"{entry.curve_label}: reduced D is {reduced}, table says {entry.reduced_D}."
            )
        if torsion_of_dk(entry.d, entry.k) != entry.torsion:
            raise ProofInvariantError(
                f"{entry.curve_label}: torsion is {torsion_of_dk(entry.d, entry.k)}, "
                f"table says {entry.torsion}."
            )


check_embedded_entries()
