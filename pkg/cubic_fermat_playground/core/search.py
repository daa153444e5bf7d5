"""
Bounded search for rational points on y² = x³ + D.

Rational points on the integral model have the shape (m/e², n/e³) with
gcd(m, e) = gcd(n, e) = 1, so the search walks over (e, m) and tests whether
m³ + D·e⁶ is a perfect square.
"""
import concurrent.futures
import dataclasses
import itertools
import logging
import math
from fractions import Fraction
from typing import Iterator

import gmpy2

from cubic_fermat_playground.core.curves import CurvePoint
from cubic_fermat_playground.core.exceptions import PreconditionError


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SearchBounds:
    max_denominator: int = 12
    max_height: int = 10_000

    def __post_init__(self) -> None:
        if self.max_denominator < 1 or self.max_height < 1:
            raise PreconditionError(f"Search bounds must be positive: {self}.")


def _smallest_admissible_numerator(D: int, e6: int) -> int:
    """Smallest m with m³ + D·e⁶ ≥ 0."""
    target = -D * e6
    root, exact = gmpy2.iroot(abs(target), 3)
    root = int(root)
    if target >= 0:
        return root if exact else root + 1
    return -root


def _iter_denominator(D: int, e: int, max_height: int) -> Iterator[CurvePoint]:
    e2 = e * e
    e3 = e2 * e
    e6 = e3 * e3
    De6 = D * e6
    start = max(-max_height * e2, _smallest_admissible_numerator(D, e6))
    for m in range(start, max_height * e2 + 1):
        if e > 1 and math.gcd(m, e) != 1:
            continue
        value = m * m * m + De6
        if not gmpy2.is_square(value):
            continue
        n = int(gmpy2.isqrt(value))
        x = Fraction(m, e2)
        yield CurvePoint(x, Fraction(n, e3))
        if n:
            yield CurvePoint(x, Fraction(-n, e3))


def _points_for_denominator(D: int, e: int, max_height: int) -> list[CurvePoint]:
    return list(_iter_denominator(D, e, max_height))


def iter_qpoints(D: int, bounds: SearchBounds) -> Iterator[CurvePoint]:
    """Points in the deterministic order (e, m ascending, positive y first)."""
    if D == 0:
        raise PreconditionError("D must be nonzero.")
    for e in range(1, bounds.max_denominator + 1):
        yield from _iter_denominator(D, e, bounds.max_height)


def search_qpoints(D: int, bounds: SearchBounds, workers: int = 1) -> list[CurvePoint]:
    """
    All points in the box. With several workers the denominators are spread
    over a process pool, results are concatenated in denominator order.
    """
    if D == 0:
        raise PreconditionError("D must be nonzero.")
    logger.info(f"Searching points on y²=x³{D:+d} within {bounds} …")
    if workers <= 1:
        points = list(iter_qpoints(D, bounds))
    else:
        denominators = range(1, bounds.max_denominator + 1)
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            chunks = executor.map(
                _points_for_denominator,
                itertools.repeat(D),
                denominators,
                itertools.repeat(bounds.max_height),
            )
            points = [point for chunk in chunks for point in chunk]
    logger.info(f"Found {len(points)} points on y²=x³{D:+d}.")
    return points
