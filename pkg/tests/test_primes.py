import math

import numpy as np
import pytest

from zetalab.errors import CapacityError, DomainError
from zetalab.primes import (frequencies, frequency, is_prime, nearest_relation,
                            primes_in_log_interval, sieve, verify_log_independence)


def trial_division_primes(limit):
    return [n for n in range(2, limit + 1) if is_prime(n)]


def test_sieve_small():
    assert sieve(10).primes.tolist() == [2, 3, 5, 7]
    assert sieve(2).primes.tolist() == [2]


def test_sieve_count_10000():
    assert sieve(10_000).count() == 1229


def test_sieve_matches_trial_division():
    t = sieve(5000)
    assert t.primes.tolist() == trial_division_primes(5000)


def test_sieve_recheck_random_limits():
    rng = np.random.default_rng(11)
    for limit in rng.integers(2, 3000, size=6):
        t = sieve(int(limit))
        assert all(is_prime(int(p)) for p in t.primes)
        assert np.all(np.diff(t.primes) > 0)


def test_sieve_segmented_consistency():
    # limit above the internal segment size exercises the segmented path
    big = sieve(5_000_000)
    assert big.count() == 348_513  # pi(5e6)
    assert int(big.primes[-1]) == 4_999_999


def test_sieve_domain_and_capacity():
    with pytest.raises(DomainError):
        sieve(1)
    with pytest.raises(CapacityError):
        sieve(10**10)


def test_frequency_values():
    assert frequency(1).value == pytest.approx(0.11031780007632579, abs=1e-12)
    assert frequency(4).value == pytest.approx(math.log(7) / (2 * math.pi), abs=1e-12)
    assert frequency(4).value == pytest.approx(0.3097012190348399, abs=1e-10)


def test_frequency_monotone_unbounded():
    lam = frequencies(500)
    assert np.all(np.diff(lam) > 0)
    assert lam[-1] > lam[0] * 5


def test_log_interval_10_to_20():
    out = primes_in_log_interval(math.log(10.0), math.log(2.0))
    assert out.count == 4  # 11, 13, 17, 19
    assert out.ratio > 0


def test_log_interval_alpha3():
    # oracle: direct enumeration over [e^3, e^3.5]
    lo, hi = math.exp(3.0), math.exp(3.5)
    expected = [p for p in trial_division_primes(int(hi) + 1) if lo <= p <= hi]
    out = primes_in_log_interval(3.0, 0.5)
    assert out.count == len(expected) == 3  # 23, 29, 31
    assert out.ratio > 0


def test_log_interval_errors():
    with pytest.raises(CapacityError):
        primes_in_log_interval(20.0, 2.0)
    with pytest.raises(DomainError):
        primes_in_log_interval(1.0, -0.5)


def test_independence_small():
    assert verify_log_independence(3, 5) == []
    assert verify_log_independence(5, 3) == []


def test_independence_full_range():
    assert verify_log_independence(8, 20) == []


def test_independence_capacity():
    with pytest.raises(CapacityError):
        verify_log_independence(9, 5)
    with pytest.raises(CapacityError):
        verify_log_independence(4, 25)


def test_nearest_relation_2_primes():
    vec, val = nearest_relation(2, 3)
    # |3 ln 2 - 2 ln 3| is the closest approach with coefficients up to 3
    assert val == pytest.approx(abs(3 * math.log(2) - 2 * math.log(3)), rel=1e-12)
    assert val == pytest.approx(0.11778303565638345, abs=1e-10)
    assert sorted(np.abs(vec).tolist()) == [2, 3]
