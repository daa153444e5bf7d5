from fractions import Fraction

import pytest

from ..core.curves import CurvePoint
from ..core.curves import TorsionGroup
from ..core.exceptions import ExcludedParameterError
from ..core.exceptions import PreconditionError
from ..core.exceptions import ProofInvariantError
from ..core.quadratic import quadratic_field
from ..core.search import SearchBounds
from .correspondence import FermatSolution
from .pipeline import classify_parameters
from .pipeline import full_pipeline
from .pipeline import integral_witness
from .pipeline import normalize_parameters
from .pipeline import Verdict
from .pipeline import VerdictKind


K2 = quadratic_field(2)


def test_golden_witness() -> None:
    verdict = full_pipeline(2, 1, SearchBounds(1, 100))
    assert verdict.kind == VerdictKind.PROVEN_NONTRIVIAL
    assert verdict.qpoint == CurvePoint(Fraction(28), Fraction(136))
    assert verdict.witness.triple == (K2.element(18, 17), K2.element(18, -17), 42)
    assert verdict.raw_solution.triple == (K2.element(36, 34), K2.element(36, -34), 84)
    assert verdict.search.points == (verdict.qpoint,)
    assert not verdict.search.exhausted


def test_golden_witness_with_default_bounds() -> None:
    verdict = full_pipeline(2, 1)
    assert verdict.witness.triple == (K2.element(18, 17), K2.element(18, -17), 42)
    assert verdict.classification.root_number.W == -1
    assert verdict.classification.criterion is True
    assert verdict.classification.torsion == TorsionGroup.TRIVIAL


def test_witness_for_two_torsion() -> None:
    verdict = full_pipeline(2, 2, SearchBounds(1, 100))
    assert verdict.qpoint == CurvePoint(Fraction(24), Fraction(0))
    assert verdict.witness.triple == (1, 1, 1)
    assert verdict.witness.k == 2


@pytest.mark.parametrize("d,label", [(1, "27.a3"), (-1, "432.e4"), (-3, "27.a4")])
def test_trivial_only_curves(d: int, label: str) -> None:
    verdict = full_pipeline(d, 1, SearchBounds(10, 1000))
    assert verdict.kind == VerdictKind.TRIVIAL_ONLY_KNOWN
    assert verdict.classification.reference.curve_label == label
    assert verdict.search.exhausted
    assert verdict.search.off_torsion == ()
    assert verdict.witness is None
    note = verdict.classification.exclusion_note
    assert label in note
    for listed in ("{-1, 3}", "{1, -3}", "{-1, 1, -3}"):
        assert listed in note


def test_trivial_only_search_sees_torsion() -> None:
    verdict = full_pipeline(1, 1, SearchBounds(1, 50))
    assert set(verdict.search.points) == {
        CurvePoint(Fraction(12), Fraction(36)),
        CurvePoint(Fraction(12), Fraction(-36)),
    }


def test_unknown_verdict() -> None:
    verdict = full_pipeline(7, 1, SearchBounds(2, 100))
    assert verdict.kind == VerdictKind.UNKNOWN
    assert verdict.classification.fermat_root_number == 1
    assert verdict.classification.root_number.W == 1
    assert verdict.search.points == ()


def test_expected_nontrivial_verdict() -> None:
    verdict = full_pipeline(5, 1, SearchBounds(1, 10))
    assert verdict.kind == VerdictKind.EXPECTED_NONTRIVIAL_BSD
    assert verdict.classification.fermat_root_number == -1


def test_criterion_is_not_extrapolated_to_other_k() -> None:
    verdict = full_pipeline(5, 2, SearchBounds(1, 10))
    assert verdict.kind == VerdictKind.UNKNOWN
    assert verdict.classification.criterion is None
    assert verdict.classification.fermat_root_number is None


def test_normalize_parameters() -> None:
    parameters = normalize_parameters(8, 16)
    assert (parameters.d, parameters.k, parameters.d_scale, parameters.k_scale) == (2, 2, 2, 2)
    assert parameters.D == -432 * 8 * 4
    with pytest.raises(PreconditionError):
        normalize_parameters(0, 1)
    with pytest.raises(PreconditionError):
        normalize_parameters(2, 0)


def test_excluded_parameters() -> None:
    with pytest.raises(ExcludedParameterError):
        full_pipeline(1, 2, SearchBounds(1, 10))
    with pytest.raises(ExcludedParameterError):
        full_pipeline(-3, 2, SearchBounds(1, 10))


def test_classify_parameters() -> None:
    classification = classify_parameters(-3, 2)
    assert classification.torsion == TorsionGroup.Z6
    assert classification.reference is None
    classification = classify_parameters(-1, 1)
    assert classification.reference.curve_label == "432.e4"
    assert classification.root_number.D == 432


def test_workers_agree() -> None:
    bounds = SearchBounds(2, 100)
    assert full_pipeline(2, 1, bounds, workers=2).witness == full_pipeline(2, 1, bounds).witness


def test_integral_witness() -> None:
    solution = FermatSolution.of(
        K2,
        K2.element(Fraction(1, 2), Fraction(17, 36)),
        K2.element(Fraction(1, 2), Fraction(-17, 36)),
        Fraction(7, 6),
        1,
    )
    witness = integral_witness(solution)
    assert witness.triple == (K2.element(18, 17), K2.element(18, -17), 42)


def test_verdict_invariants() -> None:
    classification = classify_parameters(2, 1)
    verdict = full_pipeline(2, 1, SearchBounds(1, 100))
    with pytest.raises(ProofInvariantError):
        Verdict(VerdictKind.PROVEN_NONTRIVIAL, classification, verdict.search)
    with pytest.raises(ProofInvariantError):
        Verdict(VerdictKind.TRIVIAL_ONLY_KNOWN, classification, verdict.search)


@pytest.mark.parametrize("d,k", [(2, 1), (-1, 2), (3, 1), (-3, 2)])
def test_exclusion_note_only_on_reference_rows(d: int, k: int) -> None:
    assert classify_parameters(d, k).exclusion_note is None
