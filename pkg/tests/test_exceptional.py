import pytest

from flanksets.congruence import CongruenceInstance, satisfies_congruence
from flanksets.errors import CapExceeded, NotPrime
from flanksets.exceptional import (
    exceptional_set,
    is_bound_sharp,
    membership_2p,
    theoretical_bound,
)

from golden import SETS_BY_K


def test_membership_values():
    assert membership_2p(7, 2) is True
    assert membership_2p(7, 3) is False
    assert membership_2p(3, 7) is True
    assert membership_2p(5, 4) is False


def test_membership_validation():
    with pytest.raises(NotPrime):
        membership_2p(9, 1)
    with pytest.raises(NotPrime):
        membership_2p(2, 1)
    with pytest.raises(NotPrime):
        membership_2p(1, 1)
    with pytest.raises(ValueError):
        membership_2p(7, -1)


def test_membership_is_periodic():
    # occurrence indexes form arithmetic progressions: period 2*t0 where
    # t0 is the least exponent with 2^t0 == -1 mod r (when it exists)
    for p in (7, 11, 19, 23, 59, 83):
        pattern = [membership_2p(p, k) for k in range(301)]
        hits = [k for k, m in enumerate(pattern) if m]
        assert hits, p
        k_min = hits[0]
        period = hits[1] - hits[0] if len(hits) > 1 else None
        assert period is not None
        assert hits == list(range(k_min, 301, period))


def test_membership_equivalent_divisibility_form():
    # 2^(k+1) == -1 (mod r) with p - 1 = 2r is the same as (p-1) | 2^(k+2)+2
    from flanksets.arith import _sieve

    for p in _sieve(10**4):
        if p < 3:
            continue
        for k in range(41):
            direct = membership_2p(p, k)
            assert direct == (p % 4 == 3 and (2 ** (k + 2) + 2) % (p - 1) == 0), (p, k)


def test_exceptional_set_values():
    assert exceptional_set(14).members == (4, 6, 14, 38, 46, 134, 398, 3974, 14566, 131078)
    assert exceptional_set(35).members == (4, 6, 29446, 2634118)
    assert exceptional_set(7).members == (4, 6)


def test_exceptional_set_table():
    for k, members in SETS_BY_K.items():
        assert exceptional_set(k).members == members, k


def test_exceptional_set_members_check_the_congruence():
    for k in range(21):
        for n in exceptional_set(k).members:
            assert satisfies_congruence(CongruenceInstance(n, k)), (n, k)


def test_four_and_six_always_present():
    for k in list(range(41)) + [50, 64]:
        members = exceptional_set(k).members
        assert members[0] == 4 and members[1] == 6
        assert len(members) == len(set(members))
        assert list(members) == sorted(members)


def test_cap_and_validation():
    with pytest.raises(CapExceeded):
        exceptional_set(65)
    with pytest.raises(ValueError):
        exceptional_set(-1)
    assert exceptional_set(65, cap=65).members[:2] == (4, 6)


def test_theoretical_bound_values():
    assert theoretical_bound(0) == 14
    assert theoretical_bound(1) == 22
    assert theoretical_bound(10) == 8198


def test_bound_sharpness_values():
    assert is_bound_sharp(0) is True
    assert is_bound_sharp(2) is True
    assert is_bound_sharp(3) is False  # 2^5 + 3 = 35 = 5 * 7


def test_bound_holds_and_sharpness_attains_it():
    for k in range(41):
        members = exceptional_set(k).members
        assert max(members) <= theoretical_bound(k)
        if is_bound_sharp(k):
            assert max(members) == theoretical_bound(k)
