from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sidonlab._intmath import iroot
from sidonlab.primes import (
    PrimeTable,
    bertrand_prime,
    default_table,
    gap_prime,
    gap_prime_failures,
    gap_width,
    sieve,
)

from oracles import primes_trial


def test_sieve_matches_trial_division():
    assert sieve(5000).tolist() == primes_trial(5000)
    assert sieve(1).tolist() == [] and sieve(2).tolist() == [2]


def test_table_extends_by_doubling():
    t = PrimeTable(limit=100)
    assert t.next_prime_above(100) == 101
    assert t.is_prime(7919) and not t.is_prime(7917)
    assert t.largest_at_most(1) is None
    assert t.largest_at_most(1000) == 997


def test_table_snapshot_roundtrip(tmp_path):
    a = PrimeTable(limit=1000, cache_dir=tmp_path)
    assert any(tmp_path.iterdir())
    b = PrimeTable(limit=1000, cache_dir=tmp_path)
    assert [b.is_prime(n) for n in range(1000)] == [a.is_prime(n) for n in range(1000)]


@pytest.mark.parametrize("n,p", [(1, 2), (2, 3), (4, 5), (25, 29), (89, 97)])
def test_bertrand_prime_examples(n, p):
    assert bertrand_prime(n) == p


def test_bertrand_prime_sweep_to_a_million():
    # vectorised: next prime above n from the sieve, compared against 2n
    limit = 2 * 10 ** 6 + 10
    primes = sieve(limit)
    n = np.arange(1, 10 ** 6 + 1)
    nxt = primes[np.searchsorted(primes, n, side="right")]
    assert np.all(nxt > n) and np.all(nxt <= 2 * n)
    for k in (1, 2, 3, 500, 65536, 10 ** 6):
        assert bertrand_prime(k) == nxt[k - 1]


def test_bertrand_prime_domain():
    with pytest.raises(ValueError):
        bertrand_prime(0)


def test_gap_prime_examples():
    assert gap_prime(100, Fraction(1, 2)) == 97
    assert gap_prime(126, Fraction(1, 4)) is None
    assert gap_width(126, Fraction(1, 4)) == 3
    for p in (2, 3, 97, 7919):
        for delta in (Fraction(1, 5), Fraction(1, 2), 1):
            assert gap_prime(p, delta) == p


def test_gap_prime_domain():
    with pytest.raises(ValueError):
        gap_prime(1, Fraction(1, 2))
    with pytest.raises(ValueError):
        gap_prime(10, 0)
    with pytest.raises(ValueError):
        gap_prime(10, Fraction(3, 2))


def test_delta_one_always_succeeds():
    assert gap_prime_failures(1, 2, 20000) == []


def test_small_delta_fails_sometimes():
    fails = gap_prime_failures(Fraction(1, 4), 2, 2000)
    assert 126 in fails
    assert all(gap_prime(x, Fraction(1, 4)) is None for x in fails)


@given(st.integers(0, 10 ** 40), st.integers(1, 7))
def test_iroot_is_floor_root(n, k):
    r = iroot(n, k)
    assert r ** k <= n < (r + 1) ** k


@settings(deadline=None)
@given(st.integers(2, 10 ** 6), st.integers(1, 6), st.integers(1, 6))
def test_gap_prime_is_largest_in_window(x, a, b):
    delta = Fraction(min(a, b), max(a, b))
    w = gap_width(x, delta)
    assert w ** delta.denominator <= x ** delta.numerator < (w + 1) ** delta.denominator
    p = gap_prime(x, delta)
    table = default_table()
    window = [y for y in range(x - w + 1, x + 1) if table.is_prime(y)]
    assert p == (max(window) if window else None)
