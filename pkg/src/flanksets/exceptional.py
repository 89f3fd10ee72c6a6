"""Structural enumeration of the exceptional sets.

For each power index k, the composite solutions of
n*sigma_k(n) == 2 (mod phi(n)) are exactly 4 together with the numbers
n = 2p for odd primes p = 2r + 1 (r odd) such that r divides 2^(k+1) + 1.
So the whole set falls out of one factorization: walk the divisors r of
2^(k+1) + 1 and keep those with 2r + 1 prime. The r = 1 divisor contributes
p = 3, i.e. 6 is a member for every k (any residue mod 1 is 0).

This route never evaluates the congruence itself; `congruence` provides the
independent brute-force check of the same sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import DEFAULT_FACTOR_BUDGET, divisors, factorize, is_prime
from .errors import CapExceeded, NotPrime

# Enumeration above this index means factoring 2^(k+1) + 1 past 65 bits;
# allowed, but only when the caller raises the cap knowingly.
DEFAULT_FAST_PATH_CAP = 64


@dataclass(frozen=True)
class ExceptionalSet:
    """All composite solutions at power index k, in increasing order."""

    k: int
    members: tuple[int, ...]


def membership_2p(p: int, k: int) -> bool:
    """Does 2p belong to the exceptional set at index k? p must be an odd prime.

    Criterion: p == 3 (mod 4) and, writing p - 1 = 2r with r odd,
    2^(k+1) == -1 (mod r). For p = 3 the modulus is r = 1 and the criterion
    holds vacuously, so 6 is in every set.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise NotPrime(f"membership criterion needs an odd prime, got {p}")
    if k < 0:
        raise ValueError(f"power index must be >= 0, got k={k}")
    if p % 4 != 3:
        return False
    r = (p - 1) // 2
    # r == 1 works out on its own: pow(..., 1) == 0 == r - 1
    return pow(2, k + 1, r) == r - 1


def exceptional_set(
    k: int,
    cap: int = DEFAULT_FAST_PATH_CAP,
    budget: int = DEFAULT_FACTOR_BUDGET,
) -> ExceptionalSet:
    """Enumerate the full exceptional set at index k via divisors of 2^(k+1) + 1.

    Complete without any bound filtering: every divisor r with 2r + 1 prime
    yields the member 2(2r + 1), and 4 is always a member. Raises CapExceeded
    for k above `cap`.
    """
    if k < 0:
        raise ValueError(f"power index must be >= 0, got k={k}")
    if k > cap:
        raise CapExceeded(f"enumeration for k={k} exceeds the cap {cap}")
    target = 2 ** (k + 1) + 1
    members = [4]
    for r in divisors(factorize(target, budget)):
        p = 2 * r + 1
        if is_prime(p):
            members.append(2 * p)
    members.sort()
    return ExceptionalSet(k, tuple(members))


def theoretical_bound(k: int) -> int:
    """Proven upper bound 2^(k+3) + 6 for any member of the set at index k."""
    if k < 0:
        raise ValueError(f"power index must be >= 0, got k={k}")
    return 2 ** (k + 3) + 6


def is_bound_sharp(k: int) -> bool:
    """True iff the bound is attained, i.e. 2^(k+2) + 3 is prime."""
    if k < 0:
        raise ValueError(f"power index must be >= 0, got k={k}")
    return is_prime(2 ** (k + 2) + 3)
