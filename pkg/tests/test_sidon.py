import json
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sidonlab.sidon import (
    additive_energy,
    check_identities,
    diffset,
    is_interval_sidon,
    is_sidon,
    is_sidon_mod,
    no_wraparound,
    rep_profile,
    sidon_iff_card_add,
    sumset,
)

from oracles import energy_quadruples, is_sidon_diffs, is_sidon_sums

small_sets = st.lists(st.integers(-40, 40), max_size=12, unique=True)


def test_is_sidon_examples():
    assert is_sidon({1, 2, 4})
    cert = is_sidon({1, 2, 3})
    assert not cert and cert.violation == (1, 3, 2, 2)
    assert is_sidon([])
    assert is_sidon([5])


def test_is_sidon_mod_examples():
    assert is_sidon_mod(7, {1, 2, 4})
    cert = is_sidon_mod(5, {1, 2, 4})
    assert not cert and cert.violation == (1, 2, 4, 4)
    with pytest.raises(ValueError):
        is_sidon_mod(0, {1})


def test_is_interval_sidon_examples():
    assert is_interval_sidon(4, {1, 2, 4})
    cert = is_interval_sidon(3, {1, 2, 4})
    assert not cert and cert.violation is None and "outside" in cert.reason
    for N in range(1, 30):
        assert is_interval_sidon(N, {1})


def test_no_wraparound_examples():
    assert no_wraparound({1, 2, 4}, 4, 7).level == "modular"
    assert no_wraparound({1, 2}, 2, 3)
    with pytest.raises(ValueError):
        no_wraparound({1, 2, 4}, 4, 6)
    with pytest.raises(ValueError):
        no_wraparound({1, 2, 3}, 3, 5)


def test_three_characterizations_on_all_subsets_of_1_to_12():
    U = range(1, 13)
    for r in range(13):
        for A in combinations(U, r):
            s = is_sidon(A).verified
            assert s == is_sidon_diffs(A) == is_sidon_sums(A)
            assert s == (len(sumset(A)) == r * (r + 1) // 2)


@given(small_sets)
def test_three_characterizations_random(A):
    s = is_sidon(A).verified
    assert s == is_sidon_diffs(A) == is_sidon_sums(A)
    assert sidon_iff_card_add(A) == (s, s)


@given(small_sets, st.integers(1, 200))
def test_modular_implies_integer(A, M):
    if is_sidon_mod(M, A):
        assert is_sidon(A)


@given(st.lists(st.integers(1, 30), max_size=10, unique=True), st.integers(0, 20))
def test_interval_implies_modular_without_wraparound(A, extra):
    N = 30
    if is_interval_sidon(N, A):
        assert no_wraparound(A, N, 2 * N - 1 + extra)


def test_sumset_diffset_energy_examples():
    A = {1, 2, 4}
    assert len(sumset(A)) == 6
    assert len(diffset(A)) == 7
    assert additive_energy(A) == 15


@given(st.lists(st.integers(-15, 15), max_size=7, unique=True))
def test_energy_matches_quadruple_count(A):
    assert additive_energy(A) == energy_quadruples(A)


def test_rep_profile():
    prof = rep_profile({1, 2, 4})
    assert prof.pairs == {2: 1, 3: 2, 4: 1, 5: 2, 6: 2, 8: 1}
    assert sum(prof.pairs.values()) == 9


def test_check_identities_examples():
    assert check_identities({1, 2, 4}).ok
    empty = check_identities([])
    assert empty.ok and empty.checks["card_sub"] is None
    rep = check_identities({1, 2, 5, 10, 12})
    assert rep.ok and all(v is True for v in rep.checks.values())
    assert len(diffset({1, 2, 5, 10, 12})) == 21 and len(sumset({1, 2, 5, 10, 12})) == 15
    with pytest.raises(ValueError):
        check_identities({1, 2, 3})


def test_sidon_iff_card_add_examples():
    assert sidon_iff_card_add({1, 2, 3}) == (False, False)
    assert sidon_iff_card_add({1, 2, 4}) == (True, True)
    assert sidon_iff_card_add([]) == (True, True)


def test_cert_json():
    rec = json.loads(is_sidon_mod(5, {1, 2, 4}).to_json())
    assert rec == {"kind": "sidon-cert", "level": "modular", "set": [1, 2, 4], "M": 5,
                   "N": None, "verified": False, "violation": [1, 2, 4, 4]}


def test_overflow_guard():
    with pytest.raises(OverflowError):
        is_sidon([1, 2 ** 62])
