"""Occurrence patterns across the family of exceptional sets, and flanking.

A member n = 2p (p = 2r + 1, r odd) sits in the set at index k exactly when
2^(k+1) == -1 (mod r), so its occurrence indexes are k == t0 - 1 (mod 2*t0)
where t0 is the least t with 2^t == -1 (mod r) -- an arithmetic progression.
Whether such a t0 exists, and its parity when it does, splits the odd primes
p == 3 (mod 4) into three classes:

  * no t0            -> 2p never appears in any set
  * t0 odd           -> 2p appears, at even indexes only, and is never
                        flanked by 14 (14 itself occupies the even indexes)
  * t0 even          -> 2p appears at odd indexes and 14 sits in both
                        neighbouring sets at every single occurrence

`verify_flank` checks one flanking event directly from memberships, and the
scans below regenerate the classification tables and the Hardy-Littlewood
style pair family (r = 8n + 5, p = 16n + 11 both prime) whose members are
forced into the flanked class.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import Iterable, NamedTuple, Optional

from .arith import DEFAULT_FACTOR_BUDGET, _sieve, divisors, factorize, is_prime, multiplicative_order
from .errors import BadShape, CapExceeded, MechanismViolation
from .exceptional import DEFAULT_FAST_PATH_CAP, membership_2p


class FlankingVariant(Enum):
    NEVER_APPEARS = "NeverAppears"
    APPEARS_UNFLANKED = "AppearsUnflanked"
    FLANKED_BY_FOURTEEN = "FlankedByFourteen"


@dataclass(frozen=True)
class OccurrencePattern:
    """The arithmetic progression of indexes k at which 2p is a member."""

    t0: int
    k_min: int
    period: int


@dataclass(frozen=True)
class FlankingClass:
    variant: FlankingVariant
    pattern: Optional[OccurrencePattern]


class FlankerCandidate(NamedTuple):
    p1: int
    r1: int
    distance: int


class FlankedRow(NamedTuple):
    n: int
    p: int
    r: int
    t0: int
    k_min: int
    period: int


class HlPair(NamedTuple):
    n: int
    r: int
    p: int


def least_negation_exponent(r: int, budget: int = DEFAULT_FACTOR_BUDGET) -> Optional[int]:
    """Least t >= 1 with 2^t == -1 (mod r), or None when no power of 2 is -1.

    r must be odd and >= 3. Such a t exists iff the order m of 2 mod r is
    even and 2^(m/2) == -1; then t = m/2 and the full solution set is the odd
    multiples of t.
    """
    if r < 3 or r % 2 == 0:
        raise ValueError(f"need an odd modulus >= 3, got {r}")
    m = multiplicative_order(2, r, budget)
    if m % 2:
        return None
    half = m // 2
    return half if pow(2, half, r) == r - 1 else None


def _require_shape(p: int) -> int:
    # Returns r = (p - 1) / 2 after checking p is a prime == 3 (mod 4), >= 5.
    if p < 5 or p % 4 != 3 or not is_prime(p):
        raise BadShape(f"need a prime == 3 (mod 4) and >= 5, got {p}")
    return (p - 1) // 2


def occurrence_pattern(p: int, budget: int = DEFAULT_FACTOR_BUDGET) -> Optional[OccurrencePattern]:
    """Occurrence progression of n = 2p, or None when 2p is in no set at all."""
    r = _require_shape(p)
    t0 = least_negation_exponent(r, budget)
    if t0 is None:
        return None
    return OccurrencePattern(t0=t0, k_min=t0 - 1, period=2 * t0)


def classify_flanking(p: int, budget: int = DEFAULT_FACTOR_BUDGET) -> FlankingClass:
    """Trichotomy for p == 3 (mod 4), p >= 5; see the module docstring."""
    pattern = occurrence_pattern(p, budget)
    if pattern is None:
        return FlankingClass(FlankingVariant.NEVER_APPEARS, None)
    if pattern.t0 % 2:
        return FlankingClass(FlankingVariant.APPEARS_UNFLANKED, pattern)
    return FlankingClass(FlankingVariant.FLANKED_BY_FOURTEEN, pattern)


def _in_set(n: int, k: int) -> bool:
    # Structural membership of an arbitrary integer: 4 always belongs; the
    # only other members are doubled odd primes, decided by the criterion.
    if n == 4:
        return True
    if n < 6 or n % 2:
        return False
    p = n // 2
    if p % 2 == 0 or not is_prime(p):
        return False
    return membership_2p(p, k)


def verify_flank(
    n_star: int, n: int, distance: int, k: int, cap: int = DEFAULT_FAST_PATH_CAP
) -> bool:
    """Does n_star flank n at the given distance at index k?

    True iff n is in the set at index k while n_star is in the sets at
    indexes k - distance and k + distance, every membership decided by the
    structural criterion. Requires 1 <= distance <= k.
    """
    if distance < 1:
        raise ValueError(f"distance must be >= 1, got {distance}")
    if k < distance:
        raise ValueError(f"need k >= distance, got k={k}, distance={distance}")
    if k + distance > cap:
        raise CapExceeded(f"index {k + distance} exceeds the cap {cap}")
    return (
        _in_set(n, k)
        and _in_set(n_star, k - distance)
        and _in_set(n_star, k + distance)
    )


def flanker_candidates(
    distance: int, budget: int = DEFAULT_FACTOR_BUDGET
) -> list[FlankerCandidate]:
    """All p1 that can flank anything at the given distance.

    If 2p1 lies in the sets at indexes k - distance and k + distance then its
    occurrence period divides 2*distance, forcing r1 | 2^(2*distance) - 1.
    Walking those divisors and keeping 2r1 + 1 prime is therefore a complete
    candidate list (p1 = 3, r1 = 1 included: 6 flanks mechanically).
    """
    if distance < 1:
        raise ValueError(f"distance must be >= 1, got {distance}")
    out = []
    for r1 in divisors(factorize(2 ** (2 * distance) - 1, budget)):
        p1 = 2 * r1 + 1
        if is_prime(p1):
            out.append(FlankerCandidate(p1=p1, r1=r1, distance=distance))
    out.sort()
    return out


def _iter_primes(limit: int, block: int = 1 << 15):
    # Incremental segmented sieve; block size has no observable effect.
    if limit < 2:
        return
    root = isqrt(limit)
    base = _sieve(root)
    yield from base
    lo = root + 1
    while lo <= limit:
        hi = min(lo + block - 1, limit)
        flags = bytearray([1]) * (hi - lo + 1)
        for p in base:
            start = max(p * p, lo + (-lo) % p)
            if start <= hi:
                flags[start - lo :: p] = bytearray(len(range(start, hi + 1, p)))
        for i, keep in enumerate(flags):
            if keep:
                yield lo + i
        lo = hi + 1


def flanked_values_scan(
    max_p: int, budget: int = DEFAULT_FACTOR_BUDGET
) -> list[FlankedRow]:
    """One row per prime p <= max_p in the flanked class, ascending by n = 2p."""
    rows = []
    for p in _iter_primes(max_p):
        if p < 5 or p % 4 != 3:
            continue
        fc = classify_flanking(p, budget)
        if fc.variant is FlankingVariant.FLANKED_BY_FOURTEEN:
            pat = fc.pattern
            rows.append(
                FlankedRow(
                    n=2 * p,
                    p=p,
                    r=(p - 1) // 2,
                    t0=pat.t0,
                    k_min=pat.k_min,
                    period=pat.period,
                )
            )
    return rows


def mod8_audit(rows: Iterable[FlankedRow]) -> bool:
    """Check the residue forced on flanked rows with prime r: p == 3 (mod 8).

    For prime r the flanked class is exactly 4 | order of 2 mod r, which
    makes 2 a non-residue mod r and pins p mod 8. Rows with composite r are
    ignored. Returns True when no row violates the forced residue.
    """
    return all(row.p % 8 == 3 for row in rows if is_prime(row.r))


def hl_pair_scan(max_n: int, budget: int = DEFAULT_FACTOR_BUDGET) -> list[HlPair]:
    """All n <= max_n with 8n + 5 and 16n + 11 simultaneously prime.

    Every hit gives a prime p = 16n + 11 with prime r = 8n + 5 == 5 (mod 8),
    so 4 divides the order of 2 mod r and p must land in the flanked class.
    That forcing is re-checked for each pair; a counterexample would mean the
    implementation is broken, and raises MechanismViolation.
    """
    if max_n < 0:
        raise ValueError(f"need max_n >= 0, got {max_n}")
    pairs = []
    for n in range(max_n + 1):
        r = 8 * n + 5
        p = 16 * n + 11
        if not (is_prime(r) and is_prime(p)):
            continue
        fc = classify_flanking(p, budget)
        if fc.variant is not FlankingVariant.FLANKED_BY_FOURTEEN:
            raise MechanismViolation(
                f"pair n={n} (r={r}, p={p}) classified {fc.variant.value}; "
                "expected FlankedByFourteen"
            )
        pairs.append(HlPair(n=n, r=r, p=p))
    return pairs
