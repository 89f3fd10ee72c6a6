"""Direct evaluation of the defining congruence n*sigma_k(n) == 2 (mod phi(n)).

The brute-force enumerator here is the ground-truth route: it scans every
composite n up to the proven bound and tests the congruence head-on. It is
kept deliberately independent of the structural fast path in `exceptional` --
inside the scan, totients come from a block sieve, divisors from a stride
sweep (bulk trial division), and divisor-power sums are accumulated term by
term. The scan does not even share a primality test with the rest of the
package: n is composite exactly when phi(n) != n - 1.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt

from .arith import euler_phi, sigma_k_mod
from .errors import CapExceeded

# Scanning cost is ~2^(k+3) per index, so the oracle refuses indexes above
# this cap unless the caller raises it explicitly.
DEFAULT_ORACLE_CAP = 16

_MIN_BLOCK = 1 << 12


@dataclass(frozen=True)
class CongruenceInstance:
    """One evaluation point (n, k) of the congruence; requires n >= 3, k >= 0."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"congruence is evaluated for n >= 3 only, got n={self.n}")
        if self.k < 0:
            raise ValueError(f"power index must be >= 0, got k={self.k}")


def satisfies_congruence(inst: CongruenceInstance) -> bool:
    """True iff inst.n * sigma_k(inst.n) leaves remainder 2 mod phi(inst.n)."""
    phi = euler_phi(inst.n)
    s = sigma_k_mod(inst.n, inst.k, phi)
    return (inst.n * s - 2) % phi == 0


def _phi_block(lo: int, hi: int) -> list[int]:
    # Totients for every n in [lo, hi] via a segmented multiplicative sieve.
    width = hi - lo + 1
    rem = list(range(lo, hi + 1))
    phi = [1] * width
    base = bytearray([1]) * (isqrt(hi) + 1)
    for p in range(2, len(base)):
        if not base[p]:
            continue
        base[p * p :: p] = bytearray(len(base[p * p :: p]))
        start = lo + (-lo) % p
        for i in range(start - lo, width, p):
            v = rem[i] // p
            e = 1
            while v % p == 0:
                v //= p
                e += 1
            rem[i] = v
            phi[i] *= (p - 1) * p ** (e - 1)
    for i in range(width):
        if rem[i] > 1:
            phi[i] *= rem[i] - 1
    return phi


def _scan_block(k: int, lo: int, hi: int) -> list[int]:
    # All composite n in [lo, hi] satisfying the congruence at power index k.
    if lo < 2:
        lo = 2
    if hi < lo:
        return []
    width = hi - lo + 1
    phi = _phi_block(lo, hi)
    acc = [0] * width
    # stride sweep: d runs over every candidate divisor, touching its multiples
    for d in range(1, hi + 1):
        start = d if d >= lo else lo + (-lo) % d
        for n in range(start, hi + 1, d):
            i = n - lo
            acc[i] += pow(d, k, phi[i])
    hits = []
    for i in range(width):
        n = lo + i
        m = phi[i]
        if n >= 4 and m != n - 1 and (n * acc[i] - 2) % m == 0:
            hits.append(n)
    return hits


def brute_force_exceptional_set(
    k: int, cap: int = DEFAULT_ORACLE_CAP, workers: int = 1
) -> list[int]:
    """Every composite solution n with 4 <= n <= 2^(k+3) + 6, in increasing order.

    Exhaustive by construction; no structural shortcut is consulted. Raises
    CapExceeded for k above `cap`. `workers` > 1 splits the range into
    contiguous blocks scanned in separate processes; the merged result is
    identical regardless of the split.
    """
    if k < 0:
        raise ValueError(f"power index must be >= 0, got k={k}")
    if k > cap:
        raise CapExceeded(f"oracle scan for k={k} exceeds the cap {cap}")
    bound = 2 ** (k + 3) + 6
    if workers > 1 and bound >= 2 * _MIN_BLOCK:
        pieces = min(workers, bound // _MIN_BLOCK)
        step = (bound - 3) // pieces + 1
        spans = [(4 + j * step, min(4 + (j + 1) * step - 1, bound)) for j in range(pieces)]
        with ProcessPoolExecutor(max_workers=pieces) as pool:
            chunks = list(pool.map(_scan_block, [k] * pieces, *zip(*spans)))
        hits = [n for chunk in chunks for n in chunk]
        hits.sort()
        return hits
    return _scan_block(k, 4, bound)
