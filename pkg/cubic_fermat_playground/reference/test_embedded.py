import dataclasses

import pytest

from ..core.curves import TorsionGroup
from ..core.exceptions import ProofInvariantError
from . import embedded
from .embedded import check_embedded_entries
from .embedded import exclusion_note
from .embedded import lookup
from .embedded import lookup_label


def test_lookup() -> None:
    assert lookup(1, 1).curve_label == "27.a3"
    assert lookup(-1, 1).curve_label == "432.e4"
    assert lookup(-3, 1).torsion == TorsionGroup.Z3
    assert lookup(2, 1) is None
    assert lookup(-3, 2) is None
    assert all(lookup(d, 1).rank == 0 for d in (1, -1, -3))


def test_lookup_label() -> None:
    assert lookup_label("27.a4").d == -3
    assert lookup_label("11.a1") is None


def test_inconsistent_entry_is_rejected(monkeypatch) -> None:
    broken = dataclasses.replace(embedded.EMBEDDED_ENTRIES[1], torsion=TorsionGroup.Z3)
    monkeypatch.setattr(embedded, "EMBEDDED_ENTRIES", (broken,))
    with pytest.raises(ProofInvariantError):
        check_embedded_entries()


def test_exclusion_note() -> None:
    for entry in embedded.EMBEDDED_ENTRIES:
        note = exclusion_note(entry.d, entry.k)
        assert f"d={entry.d} " in note
        assert entry.curve_label in note
        assert "{-1, 3}" in note and "{1, -3}" in note and "{-1, 1, -3}" in note
    assert exclusion_note(3, 1) is None
    assert exclusion_note(-1, 2) is None
