"""
Exhaustive consistency checks over ranges of (d, k). Each sweep returns the
list of mismatches, empty on success.
"""
import dataclasses
import logging
from typing import Iterator

from tqdm import tqdm

from cubic_fermat_playground.core.curves import sixth_free_model
from cubic_fermat_playground.core.curves import torsion_of_D
from cubic_fermat_playground.core.curves import torsion_of_dk
from cubic_fermat_playground.core.integers import is_cubefree
from cubic_fermat_playground.core.integers import is_squarefree
from cubic_fermat_playground.core.root_number import l_vanishing_criterion
from cubic_fermat_playground.core.root_number import root_number_fermat
from cubic_fermat_playground.core.root_number import root_number_mordell


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SweepMismatch:
    check: str
    d: int
    k: int
    expected: str
    actual: str


def squarefree_values(limit: int) -> Iterator[int]:
    """Squarefree d with 2 ≤ |d| ≤ limit, ordered by |d| and negative first."""
    for n in range(2, limit + 1):
        for d in (-n, n):
            if is_squarefree(d):
                yield d


def sweep_torsion(
    d_limit: int = 50, k_limit: int = 20, progress: bool = True
) -> list[SweepMismatch]:
    """Torsion read off from (d, k) against the torsion of y² = x³ − 432d³k²."""
    logger.info(f"Comparing torsion tables for |d| ≤ {d_limit}, k ≤ {k_limit} …")
    pairs = [
        (d, k)
        for d in squarefree_values(d_limit)
        for k in range(1, k_limit + 1)
        if is_cubefree(k)
    ]
    mismatches = []
    for d, k in tqdm(pairs, desc="Torsion", disable=not progress):
        predicted = torsion_of_dk(d, k)
        actual = torsion_of_D(-432 * d**3 * k**2)
        if predicted != actual:
            mismatches.append(SweepMismatch("torsion", d, k, str(predicted), str(actual)))
    return mismatches


def sweep_signs(limit: int = 2000, progress: bool = True) -> list[SweepMismatch]:
    """
    The closed sign formula against the local-sign computation, and the
    vanishing criterion against W = −1.
    """
    logger.info(f"Comparing root numbers for |d| ≤ {limit} …")
    mismatches = []
    for d in tqdm(list(squarefree_values(limit)), desc="Root numbers", disable=not progress):
        reduced, _ = sixth_free_model(-432 * d**3)
        W = root_number_mordell(reduced).W
        closed = root_number_fermat(d)
        if W != closed:
            mismatches.append(SweepMismatch("sign", d, 1, str(W), str(closed)))
        if l_vanishing_criterion(d) and W != -1:
            mismatches.append(SweepMismatch("criterion", d, 1, "-1", str(W)))
    return mismatches
