"""Acceptance suite: every release-blocking check, one test per criterion.

Run with `pytest -v -s tests/test_acceptance.py` to see one PASS/FAIL line
per criterion with its elapsed time (with plain -v, the per-test PASSED or
FAILED verdicts carry the same information).
"""

import math
import random
import time
from contextlib import contextmanager

import pytest

from flanksets.arith import divisors, euler_phi, factorize, multiplicative_order, sigma_k_mod
from flanksets.cli import main
from flanksets.congruence import brute_force_exceptional_set
from flanksets.exceptional import (
    exceptional_set,
    is_bound_sharp,
    membership_2p,
    theoretical_bound,
)
from flanksets.flanking import (
    FlankingVariant,
    classify_flanking,
    flanked_values_scan,
    flanker_candidates,
    hl_pair_scan,
    mod8_audit,
    verify_flank,
)
from flanksets.report import parse_sets_csv

from golden import FLANKED_N_KMIN, SETS_BY_K


@contextmanager
def _criterion(num, description):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {num} ({time.perf_counter() - start:.2f}s): {description}")
        raise
    print(f"PASS criterion {num} ({time.perf_counter() - start:.2f}s): {description}")


@pytest.fixture(scope="module")
def sets_through_41():
    return {k: exceptional_set(k) for k in range(42)}


@pytest.fixture(scope="module")
def flanked_10k():
    return flanked_values_scan(10000)


def test_criterion_1_full_member_table(capsys):
    with _criterion(1, "structural route reproduces all 36 member rows (k <= 35)"):
        assert main(["sets", "--max-k", "35"]) == 0
        parsed = parse_sets_csv(capsys.readouterr().out)
        assert len(parsed) == 36
        assert {s.k: s.members for s in parsed} == SETS_BY_K


def test_criterion_2_oracle_equivalence():
    with _criterion(2, "brute-force congruence scan equals fast path for k <= 14 (run to 16)"):
        for k in range(15):
            assert brute_force_exceptional_set(k) == list(exceptional_set(k).members), k
        # default oracle cap reaches 16; the cross-check must hold there too
        for k in (15, 16):
            assert brute_force_exceptional_set(k) == list(exceptional_set(k).members), k


def test_criterion_3_flanked_table():
    with _criterion(3, "flanked-class scan to 10^4: exactly 67 rows, first ten pinned"):
        rows = flanked_values_scan(10000)
        assert len(rows) == 67
        first_ten = [(r.n, r.k_min) for r in rows[:10]]
        assert first_ten == [
            (22, 1), (118, 13), (166, 9), (214, 25), (262, 5),
            (454, 13), (502, 49), (694, 85), (1174, 145), (2038, 253),
        ]
        assert [(r.n, r.k_min) for r in rows] == list(FLANKED_N_KMIN)


def test_criterion_4_membership_progressions():
    with _criterion(4, "membership of 14 at even k and of 22 at k == 1 (mod 4), k <= 200"):
        for k in range(201):
            assert membership_2p(7, k) == (k % 2 == 0), k
            assert membership_2p(11, k) == (k % 4 == 1), k


def test_criterion_5_distance_one_flankers(sets_through_41):
    with _criterion(5, "distance-1 candidates are {3, 7}; observed flankers beyond {4, 6} are {14}"):
        assert [c.p1 for c in flanker_candidates(1)] == [3, 7]
        observed = set()
        for k in range(1, 41):
            pool = sets_through_41[k - 1].members
            for n in sets_through_41[k].members:
                for n_star in pool:
                    if verify_flank(n_star, n, 1, k):
                        observed.add(n_star)
        assert observed - {4, 6} == {14}


def test_criterion_6_mod8_residue_audit(flanked_10k):
    with _criterion(6, "every flanked row with prime r has p == 3 (mod 8), up to 10^4"):
        assert mod8_audit(flanked_10k) is True


def test_criterion_7_pair_scan_mechanism():
    with _criterion(7, "prime pairs (8n+5, 16n+11) for n <= 1000 all land in the flanked class"):
        pairs = hl_pair_scan(1000)  # raises MechanismViolation on any counterexample
        assert pairs
        hits = {pair.n for pair in pairs}
        assert {0, 3, 6} <= hits
        for pair in pairs:
            fc = classify_flanking(pair.p)
            assert fc.variant is FlankingVariant.FLANKED_BY_FOURTEEN, pair


def test_criterion_8_bound_and_sharpness(sets_through_41):
    with _criterion(8, "members respect 2^(k+3)+6 for k <= 35; bound attained at k in {0,1,2,4}"):
        for k in range(36):
            assert max(sets_through_41[k].members) <= theoretical_bound(k), k
        for k, expected_max in ((0, 14), (1, 22), (2, 38), (4, 134)):
            assert is_bound_sharp(k) is True
            assert max(sets_through_41[k].members) == expected_max == theoretical_bound(k)


def test_criterion_9_arithmetic_property_suite():
    with _criterion(9, "factor round-trip to 10^6; 10^4 order-minimality pairs; divisor-power sums vs wide oracle"):
        # complete factorizations reassemble their input
        for n in range(1, 10**6 + 1):
            value = 1
            for p, e in factorize(n).factors:
                value *= p**e
            assert value == n, n

        # orders are minimal and divide the totient
        rng = random.Random(0x5E75)
        checked = 0
        while checked < 10**4:
            m = rng.randrange(2, 10**5 + 1)
            b = rng.randrange(1, m)
            if math.gcd(b, m) != 1:
                continue
            e = multiplicative_order(b, m)
            assert pow(b, e, m) == 1
            for q, _ in factorize(e).factors:
                assert pow(b, e // q, m) != 1, (b, m, e, q)
            assert euler_phi(m) % e == 0
            checked += 1

        # modular divisor-power sums vs a wide-integer oracle with divisors
        # enumerated by direct trial division (independent of arith.divisors)
        rng = random.Random(0xD1F5)
        for n in range(1, 10**4 + 1):
            divs = []
            for i in range(1, math.isqrt(n) + 1):
                if n % i == 0:
                    divs.append(i)
                    if i != n // i:
                        divs.append(n // i)
            for k in (n % 21, rng.randrange(0, 21)):
                m = rng.randrange(1, 10**4 + 1)
                wide = sum(d**k for d in divs) % m
                assert sigma_k_mod(n, k, m) == wide, (n, k, m)
        assert sorted(divs) == divisors(factorize(10**4))
