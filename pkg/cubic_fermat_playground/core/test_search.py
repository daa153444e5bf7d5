import itertools
from fractions import Fraction

import pytest

from .curves import CurvePoint
from .curves import MordellCurve
from .curves import torsion_points_enumerate
from .exceptions import PreconditionError
from .search import iter_qpoints
from .search import search_qpoints
from .search import SearchBounds


def as_pairs(points: list[CurvePoint]) -> list[tuple[Fraction, Fraction]]:
    return [(p.x, p.y) for p in points]


def test_finds_three_torsion_of_432() -> None:
    points = search_qpoints(-432, SearchBounds(1, 20))
    assert as_pairs(points) == [(12, 36), (12, -36)]


def test_finds_generator_of_3456() -> None:
    points = search_qpoints(-3456, SearchBounds(1, 30))
    assert as_pairs(points) == [(28, 136), (28, -136)]


def test_nothing_on_432() -> None:
    assert search_qpoints(432, SearchBounds(10, 100)) == []


def test_two_torsion_is_emitted_once() -> None:
    assert as_pairs(search_qpoints(8, SearchBounds(1, 5))) == [(-2, 0), (1, 3), (1, -3), (2, 4), (2, -4)]


def test_fractional_points() -> None:
    points = search_qpoints(-2, SearchBounds(3, 20))
    assert (Fraction(3), Fraction(5)) in as_pairs(points)
    assert (Fraction(129, 100), Fraction(383, 1000)) not in as_pairs(points)
    curve = MordellCurve(-2)
    doubled = curve.double(curve.point(3, 5))
    assert doubled.x.denominator == 100
    points = search_qpoints(-2, SearchBounds(10, 2))
    assert (doubled.x, doubled.y) in as_pairs(points)
    assert (doubled.x, -doubled.y) in as_pairs(points)


@pytest.mark.parametrize("D", [-432, -3456, 1, 8, -2, 17, -54000])
def test_points_are_on_curve_and_closed_under_negation(D: int) -> None:
    curve = MordellCurve(D)
    points = search_qpoints(D, SearchBounds(4, 200))
    assert all(curve.contains(p) for p in points)
    assert len(set(points)) == len(points)
    assert {curve.negate(p) for p in points} == set(points)


@pytest.mark.parametrize("D", [-432, -2, 17, 1])
def test_larger_bounds_keep_points(D: int) -> None:
    small = set(search_qpoints(D, SearchBounds(2, 50)))
    large = set(search_qpoints(D, SearchBounds(4, 100)))
    assert small <= large


def test_order_is_deterministic() -> None:
    points = search_qpoints(17, SearchBounds(3, 100))
    keys = [(p.x.denominator, p.x, 0 if p.y >= 0 else 1) for p in points]
    assert keys == sorted(keys)
    assert len({p.x.denominator for p in points}) > 1


def test_iteration_is_lazy() -> None:
    head = list(itertools.islice(iter_qpoints(-3456, SearchBounds(10**6, 10**6)), 2))
    assert as_pairs(head) == [(28, 136), (28, -136)]


def test_torsion_only_on_reference_curves() -> None:
    for D in (-432, 432, 11664):
        torsion = set(torsion_points_enumerate(D))
        assert set(search_qpoints(D, SearchBounds(10, 1000))) <= torsion


def test_workers_give_identical_output() -> None:
    bounds = SearchBounds(4, 100)
    assert search_qpoints(17, bounds, workers=2) == search_qpoints(17, bounds)


def test_rejects_bad_input() -> None:
    with pytest.raises(PreconditionError):
        SearchBounds(0, 10)
    with pytest.raises(PreconditionError):
        search_qpoints(0, SearchBounds(1, 1))
    with pytest.raises(PreconditionError):
        next(iter_qpoints(0, SearchBounds(1, 1)))
