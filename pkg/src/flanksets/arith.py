"""Deterministic integer arithmetic: primality, factoring, divisors, orders.

Everything here is exact and reproducible: no randomized choices, no
probabilistic answers. Primality uses fixed Miller-Rabin witness sets that are
proven exact below 3,317,044,064,679,887,385,961,981 (~3.3e24), which covers
every value the default enumeration caps can produce; above that bound a
deterministic Baillie-PSW check (strong base-2 test plus a strong Lucas test
with Selfridge parameters) is used, for which no counterexample is known.

Factoring is trial division by the primes below 10^4 followed by Brent's
variant of Pollard rho with a deterministic polynomial-constant schedule
c = 1, 2, 3, ... and a fixed starting point. The total number of rho
iterations per call is capped by an effort budget; exhausting it raises
FactorizationTimeout rather than silently degrading.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, lcm

from .errors import FactorizationTimeout, NotCoprime

DEFAULT_FACTOR_BUDGET = 10**8  # rho iterations per factorize() call

_TRIAL_LIMIT = 10**4


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i in range(limit + 1) if flags[i]]


_SMALL_PRIMES: tuple[int, ...] = tuple(_sieve(_TRIAL_LIMIT))
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES)

# Deterministic Miller-Rabin witness ladder. Each entry (bound, witnesses)
# means: for n < bound the listed witnesses give an exact answer. Standard
# verified thresholds (Jaeschke; Sorenson-Webster; miller-rabin.appspot.com).
_MR_LADDER: tuple[tuple[int, tuple[int, ...]], ...] = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (9_080_191, (31, 73)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (4_759_123_141, (2, 7, 61)),
    (1_122_004_669_633, (2, 13, 23, 1662803)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318_665_857_834_031_151_167_461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
    (3_317_044_064_679_887_385_961_981, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
)

_TINY = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


@dataclass(frozen=True)
class Factorization:
    """A complete prime factorization: value == prod(p**e for p, e in factors).

    factors is sorted by prime, each exponent >= 1; the factorization of 1 is
    the empty tuple.
    """

    value: int
    factors: tuple[tuple[int, int], ...]


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus, with residues mod 1 defined to be 0."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    if base < 0:
        raise ValueError(f"base must be >= 0, got {base}")
    return pow(base, exponent, modulus)


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    # True iff n passes the strong test for witness a.
    a %= n
    if a == 0:
        return True
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    # Jacobi symbol (a/n) for odd n >= 1.
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Strong Lucas test with Selfridge's parameter choice. n is odd, > 5,
    # and has no prime factor below 100.
    d_param = 5
    while True:
        j = _jacobi(d_param, n)
        if j == -1:
            break
        if j == 0:
            return False
        if abs(d_param) >= 13 and isqrt(n) ** 2 == n:
            return False
        d_param = -(d_param + 2) if d_param > 0 else -(d_param - 2)
    q = (1 - d_param) // 4
    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    inv2 = (n + 1) // 2
    u, v, qk = 1, 1, q % n
    for bit in bin(d)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            # index 2m -> 2m+1 with P = 1
            u, v = (u + v) * inv2 % n, (d_param * u + v) * inv2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime(n: int) -> bool:
    """Exact deterministic primality test; see the module docstring for the policy."""
    if n < 100:
        return n in _TINY
    for p in _TINY:
        if n % p == 0:
            return False
    if n < 10201:  # 101**2: no composite below it survives the loop above
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for bound, witnesses in _MR_LADDER:
        if n < bound:
            return all(_mr_witness(n, a, d, s) for a in witnesses)
    return _mr_witness(n, 2, d, s) and _strong_lucas(n)


class _Budget:
    __slots__ = ("remaining", "target", "limit")

    def __init__(self, target: int, limit: int):
        self.remaining = limit
        self.target = target
        self.limit = limit

    def spend(self, amount: int) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise FactorizationTimeout(self.target, self.limit)


def _brent_cycle(n: int, c: int, budget: _Budget) -> int:
    # One run of Brent's cycle-finding with f(x) = x^2 + c, start 2.
    # Returns a nontrivial divisor, or 0 if this c fails.
    y, r, q = 2, 1, 1
    g = 1
    x = ys = y
    while g == 1:
        x = y
        budget.spend(r)
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            batch = min(128, r - k)
            budget.spend(batch)
            for _ in range(batch):
                y = (y * y + c) % n
                q = q * (x - y) % n
            g = gcd(q, n)
            k += 128
        r <<= 1
    if g == n:
        g = 1
        y = ys
        while g == 1:
            budget.spend(1)
            y = (y * y + c) % n
            g = gcd(x - y, n)
    return g if g != n else 0


def _split_composite(n: int, budget: _Budget) -> int:
    # n odd composite with no prime factor <= 10^4.
    c = 1
    while True:
        g = _brent_cycle(n, c, budget)
        if g:
            return g
        c += 1


def factorize(n: int, budget: int = DEFAULT_FACTOR_BUDGET) -> Factorization:
    """Complete prime factorization of n >= 1.

    Raises FactorizationTimeout if the rho stage cannot finish within
    `budget` iterations of its polynomial map.
    """
    if n < 1:
        raise ValueError(f"can only factor integers >= 1, got {n}")
    counts: dict[int, int] = {}
    m = n
    if m % 2 == 0:
        e = (m & -m).bit_length() - 1
        counts[2] = e
        m >>= e
    for p in _SMALL_PRIMES[1:]:
        if p * p > m:
            break
        if m % p == 0:
            e = 1
            m //= p
            while m % p == 0:
                e += 1
                m //= p
            counts[p] = e
    if m > 1:
        if m < _TRIAL_LIMIT * _TRIAL_LIMIT:
            # no factor below sqrt(m) remains, so m is prime
            counts[m] = counts.get(m, 0) + 1
        else:
            state = _Budget(n, budget)
            stack = [m]
            while stack:
                v = stack.pop()
                if is_prime(v):
                    counts[v] = counts.get(v, 0) + 1
                    continue
                d = _split_composite(v, state)
                stack.append(d)
                stack.append(v // d)
    return Factorization(n, tuple(sorted(counts.items())))


def divisors(f: Factorization) -> list[int]:
    """All positive divisors of f.value in increasing order."""
    divs = [1]
    for p, e in f.factors:
        powers = [p**j for j in range(e + 1)]
        divs = [d * w for d in divs for w in powers]
    divs.sort()
    return divs


def euler_phi(n: int, budget: int = DEFAULT_FACTOR_BUDGET) -> int:
    """Euler's totient of n >= 1."""
    if n < 1:
        raise ValueError(f"totient needs n >= 1, got {n}")
    result = 1
    for p, e in factorize(n, budget).factors:
        result *= (p - 1) * p ** (e - 1)
    return result


def _group_exponent(modulus: int, budget: int) -> int:
    # Carmichael's lambda: the exponent of the unit group mod `modulus`.
    result = 1
    for p, e in factorize(modulus, budget).factors:
        if p == 2:
            lam = 1 if e == 1 else 2 if e == 2 else 1 << (e - 2)
        else:
            lam = (p - 1) * p ** (e - 1)
        result = lcm(result, lam)
    return result


def multiplicative_order(base: int, modulus: int, budget: int = DEFAULT_FACTOR_BUDGET) -> int:
    """Least e >= 1 with base**e == 1 mod modulus.

    Computed by factoring the unit-group exponent and stripping primes, never
    by stepping through powers one at a time. Raises NotCoprime when base and
    modulus share a factor.
    """
    if modulus < 2:
        raise ValueError(f"order needs modulus >= 2, got {modulus}")
    b = base % modulus
    if gcd(b, modulus) != 1:
        raise NotCoprime(f"{base} is not a unit mod {modulus}")
    order = _group_exponent(modulus, budget)
    for q, e in factorize(order, budget).factors:
        for _ in range(e):
            reduced = order // q
            if pow(b, reduced, modulus) == 1:
                order = reduced
                if order % q:
                    break
            else:
                break
    return order


def sigma_k_mod(n: int, k: int, modulus: int, budget: int = DEFAULT_FACTOR_BUDGET) -> int:
    """Sum of the k-th powers of all divisors of n, reduced mod modulus.

    Evaluated term by term over the divisor list (each term via modular
    exponentiation), so intermediate values never leave [0, modulus).
    """
    if n < 1:
        raise ValueError(f"divisor-power sum needs n >= 1, got {n}")
    if k < 0:
        raise ValueError(f"power must be >= 0, got {k}")
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if modulus == 1:
        return 0
    total = 0
    for d in divisors(factorize(n, budget)):
        total += pow(d, k, modulus)
    return total % modulus
