"""
The sign W of the functional equation of y² = x³ + D, computed from the local
signs at 2, 3 and the primes p ≡ 2 (mod 3) dividing D.

No L-series is evaluated anywhere. W = −1 forces L(E, 1) = 0, which is all the
vanishing criterion claims.
"""
import dataclasses
import logging
import math

from cubic_fermat_playground.core.curves import sixth_free_model
from cubic_fermat_playground.core.exceptions import PreconditionError
from cubic_fermat_playground.core.exceptions import ProofInvariantError
from cubic_fermat_playground.core.integers import factorize
from cubic_fermat_playground.core.integers import is_squarefree


logger = logging.getLogger(__name__)

VANISHING_RESIDUES = frozenset({2, 5, 6, 8})


@dataclasses.dataclass(frozen=True)
class RootNumberReport:
    D: int
    a: int
    D2: int
    b: int
    D3: int
    w2: int
    w3: int
    odd_local_signs: tuple[tuple[int, int], ...]
    W: int

    def __post_init__(self) -> None:
        if self.D != 2**self.a * self.D2 or self.D2 % 2 == 0:
            raise ProofInvariantError(f"D={self.D} ≠ 2^{self.a}·{self.D2} with odd D₂.")
        if self.D != 3**self.b * self.D3 or self.D3 % 3 == 0:
            raise ProofInvariantError(f"D={self.D} ≠ 3^{self.b}·{self.D3} with 3∤D₃.")
        product = math.prod(sign for _, sign in self.odd_local_signs)
        if self.W != -self.w2 * self.w3 * product or self.W not in (-1, 1):
            raise ProofInvariantError(f"W={self.W} is not −w₂w₃Πw_p.")


def _split_off(n: int, prime: int) -> tuple[int, int]:
    exponent = 0
    while n % prime == 0:
        n //= prime
        exponent += 1
    return exponent, n


def local_sign_at_2(a: int, D2: int) -> int:
    if a % 2 == 1:
        return -1
    if D2 % 4 == 1 and a != 4:
        return -1
    return 1


def local_sign_at_3(b: int, D3: int) -> int:
    if b % 3 == 2:
        return -1
    if b % 3 == 0 and D3 % 9 in {2, 7, (-1) ** (b + 1) % 9}:
        return -1
    return 1


def root_number_mordell(D: int) -> RootNumberReport:
    if D == 0:
        raise PreconditionError("D must be nonzero.")
    reduced, scale = sixth_free_model(D)
    if scale != 1:
        logger.debug(f"Root number of y²=x³+{D} computed on the model D={reduced}.")
    a, D2 = _split_off(reduced, 2)
    b, D3 = _split_off(reduced, 3)
    odd_local_signs = tuple(
        (p, -1 if p % 3 == 2 else 1)
        for p in factorize(reduced).primes()
        if p not in (2, 3)
    )
    w2 = local_sign_at_2(a, D2)
    w3 = local_sign_at_3(b, D3)
    W = -w2 * w3 * math.prod(sign for _, sign in odd_local_signs)
    return RootNumberReport(reduced, a, D2, b, D3, w2, w3, odd_local_signs, W)


def _require_squarefree(d: int) -> None:
    if not is_squarefree(d):
        raise PreconditionError(f"d={d} is not a squarefree integer.")


def root_number_fermat(d: int) -> int:
    """W of y² = x³ − 432d³ from |d|/gcd(d, 6) modulo 3."""
    _require_squarefree(d)
    g = math.gcd(d, 6)
    residue = (abs(d) // g) % 3
    if g % 2 == 1:
        return -1 if residue == 2 else 1
    return -1 if residue == 1 else 1


def l_vanishing_criterion(d: int) -> bool:
    """
    |d| ≡ −1, 2, −4, 6 (mod 9), which forces W = −1 and hence a vanishing
    central value of the L-function of y² = x³ − 432d³.
    """
    _require_squarefree(d)
    return abs(d) % 9 in VANISHING_RESIDUES


def sign_residue_table(limit: int) -> dict[int, set[int]]:
    """For each residue of |d| mod 9, the root numbers W(−432d³) that occur."""
    table: dict[int, set[int]] = {r: set() for r in range(9)}
    for d in range(-limit, limit + 1):
        if abs(d) < 2 or not is_squarefree(d):
            continue
        table[abs(d) % 9].add(root_number_fermat(d))
    return table
