"""
Integer plumbing: factorization, power-free parts and the rational base field.

Rationals are `fractions.Fraction` throughout, which keeps them in lowest
terms with a positive denominator.
"""
import dataclasses
import functools
import logging
import math
from fractions import Fraction
from typing import Iterator
from typing import Optional
from typing import Union

import gmpy2

from cubic_fermat_playground.core.exceptions import FieldMismatchError
from cubic_fermat_playground.core.exceptions import PreconditionError


logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[int, Fraction]

TRIAL_DIVISION_LIMIT = 10**6

# Deterministic for n < 3.3 · 10²⁴.
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class RationalField:
    """Base-field tag for curves and points over Q."""

    def coerce(self, value) -> Fraction:
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise FieldMismatchError(f"{value!r} is not a rational number.")
        return Fraction(value)

    def contains(self, value) -> bool:
        return isinstance(value, (int, Fraction)) and not isinstance(value, bool)

    def __str__(self) -> str:
        return "Q"

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


QQ = RationalField()


@dataclasses.dataclass(frozen=True)
class Factorization:
    unit: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return self.unit * math.prod(p**e for p, e in self.factors)

    def exponent(self, prime: int) -> int:
        return dict(self.factors).get(prime, 0)

    def primes(self) -> list[int]:
        return [p for p, e in self.factors]

    def __str__(self) -> str:
        if not self.factors:
            return str(self.unit)
        body = "·".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        return f"-{body}" if self.unit < 0 else body


def is_probable_prime(n: int) -> bool:
    """
    Strong probable-prime tests over a fixed base set, deterministic below
    3.3·10²⁴.
    """
    if n < 2:
        return False
    for p in MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    return all(gmpy2.is_strong_prp(n, a) for a in MILLER_RABIN_BASES)


def pollard_rho(n: int) -> int:
    """
    Brent's variant of Pollard rho. Returns a nontrivial divisor of the odd
    composite `n`.
    """
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        logger.debug(f"Pollard rho with c={c} failed on {n}, retrying …")
    raise ArithmeticError(f"Pollard rho did not split {n}.")


def _split_prime_factors(n: int) -> Iterator[int]:
    if n == 1:
        return
    if is_probable_prime(n):
        yield n
        return
    divisor = pollard_rho(n)
    yield from _split_prime_factors(divisor)
    yield from _split_prime_factors(n // divisor)


@functools.lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    if n == 0:
        raise PreconditionError("Cannot factorize zero.")
    unit = -1 if n < 0 else 1
    rest = abs(n)
    exponents: dict[int, int] = {}

    def strip(p: int) -> None:
        nonlocal rest
        while rest % p == 0:
            rest //= p
            exponents[p] = exponents.get(p, 0) + 1

    strip(2)
    p = 3
    while p <= TRIAL_DIVISION_LIMIT and p * p <= rest:
        strip(p)
        p += 2
    if rest > 1:
        for prime in _split_prime_factors(rest):
            strip(prime)
    assert rest == 1
    return Factorization(unit, tuple(sorted(exponents.items())))


def powerfree_decompose(n: int, e: int) -> tuple[int, int]:
    """
    Writes `n = core · scale**e` with `core` free of `e`-th powers.

    The sign stays with the core, the scale is positive.
    """
    if e < 2:
        raise PreconditionError(f"Exponent must be at least 2, got {e}.")
    factorization = factorize(n)
    core = factorization.unit
    scale = 1
    for p, exponent in factorization.factors:
        core *= p ** (exponent % e)
        scale *= p ** (exponent // e)
    return core, scale


def squarefree_part(n: int) -> tuple[int, int]:
    return powerfree_decompose(n, 2)


def is_squarefree(n: int) -> bool:
    return n != 0 and squarefree_part(n)[1] == 1


def is_cubefree(n: int) -> bool:
    return n != 0 and powerfree_decompose(n, 3)[1] == 1


def exact_sqrt(n: int) -> Optional[int]:
    """The non-negative square root of `n` if it is a perfect square."""
    if n < 0 or not gmpy2.is_square(n):
        return None
    return int(gmpy2.isqrt(n))


def exact_cbrt(n: int) -> Optional[int]:
    root, exact = gmpy2.iroot(abs(n), 3)
    if not exact:
        return None
    return int(root) if n >= 0 else -int(root)


def is_square(n: int) -> bool:
    return exact_sqrt(n) is not None


def is_cube(n: int) -> bool:
    return exact_cbrt(n) is not None


def reduce_equation(a: RationalLike, c: RationalLike) -> tuple[int, Fraction]:
    """
    Rewrites `a x³ + a y³ = c z³` as `x³ + y³ = k (z / z_scale)³`.

    Returns the positive cubefree `k` and the rational `z_scale` with
    `c / a = k · z_scale³`.
    """
    if a == 0 or c == 0:
        raise PreconditionError("Both coefficients must be nonzero.")
    ratio = Fraction(c) / Fraction(a)
    # p/q = p q² / q³
    numerator = ratio.numerator * ratio.denominator**2
    core, scale = powerfree_decompose(numerator, 3)
    sign = -1 if core < 0 else 1
    return abs(core), Fraction(sign * scale, ratio.denominator)
