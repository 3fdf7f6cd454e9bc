import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sidonlab.ff import (
    FieldMismatchError,
    PrimePoly,
    discrete_log,
    ff_inv,
    ff_mul,
    find_generator,
    find_irreducible,
    frobenius_pow,
    get_field,
    is_in_subfield,
    quotient_log,
    rel_trace,
)

from oracles import monic_products, mult_order, poly_mulmod

GF8 = get_field(2, 3, 1)
GF9 = get_field(3, 2)

SMALL_SPECS = [(2, 3, 1), (3, 3, 1), (2, 6, 2), (5, 3, 1), (3, 6, 2), (7, 3, 1), (2, 9, 3)]


def test_find_irreducible_examples():
    assert find_irreducible(2, 1) == PrimePoly(2, (0, 1))
    assert find_irreducible(2, 3) == PrimePoly(2, (1, 1, 0, 1))
    assert find_irreducible(3, 2) == PrimePoly(3, (1, 0, 1))
    assert str(find_irreducible(2, 3)) == "x^3 + x + 1"


@pytest.mark.parametrize("p,d", [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)])
def test_find_irreducible_is_first_irreducible(p, d):
    reducible = monic_products(p, d)
    f = find_irreducible(p, d)
    assert f.coeffs not in reducible
    # every smaller encoding is a product of lower-degree monics
    for enc in range(f.encoding):
        tail = [(enc // p ** i) % p for i in range(d)]
        assert tuple(tail + [1]) in reducible


def test_rabin_branch_matches_exhaustive():
    # d = 6 goes through the gcd criterion; cross-check against factor search
    f = find_irreducible(2, 6)
    assert f.coeffs not in monic_products(2, 6)


def test_gf8_products():
    x = GF8(2)
    assert x * (x * x) == GF8.from_coeffs([1, 1])
    assert ff_inv(x) == GF8.from_coeffs([1, 0, 1])
    assert x * ff_inv(x) == GF8.one


@pytest.mark.parametrize("p,d,k", SMALL_SPECS)
def test_identity_and_inverse(p, d, k):
    F = get_field(p, d, k)
    rng = random.Random(p * 100 + d)
    for _ in range(200):
        a = F(rng.randrange(F.order))
        assert a * F.one == a
        assert a + F.zero == a
        assert a - a == F.zero
        if a:
            assert a * ff_inv(a) == F.one
            assert a / a == F.one


@pytest.mark.parametrize("p,d,k", SMALL_SPECS)
def test_mul_matches_long_division(p, d, k):
    F = get_field(p, d, k)
    f = list(F.modulus.coeffs)
    rng = random.Random(d * 7 + p)
    for _ in range(300):
        a, b = F(rng.randrange(F.order)), F(rng.randrange(F.order))
        assert list((a * b).coeffs) == poly_mulmod(list(a.coeffs), list(b.coeffs), f, p)


@given(st.integers(0, 63), st.integers(0, 63), st.integers(0, 63))
def test_field_axioms_gf64(a, b, c):
    F = get_field(2, 6, 2)
    a, b, c = F(a), F(b), F(c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


def test_pow_reduces_exponent():
    F = get_field(3, 3, 1)
    a = F(5)
    assert a ** (F.order - 1) == F.one
    assert a ** -1 == ff_inv(a)
    assert F.zero ** 0 == F.one
    assert F.zero ** 3 == F.zero


def test_errors():
    with pytest.raises(ZeroDivisionError):
        ff_inv(GF8.zero)
    with pytest.raises(FieldMismatchError):
        ff_mul(GF8(1), GF9(1))
    with pytest.raises(ValueError):
        get_field(2, 25)
    with pytest.raises(ValueError):
        get_field(4, 2)
    with pytest.raises(ValueError):
        GF8(8)
    with pytest.raises(ValueError):
        discrete_log(GF8(2), GF8.zero)


def test_frobenius():
    x = GF8(2)
    assert frobenius_pow(x, 0) == x
    assert frobenius_pow(x, 1) == x * x
    F = get_field(2, 6, 2)
    for s in F.elements():
        if is_in_subfield(s, 4):
            assert frobenius_pow(s, 2) == s


def test_rel_trace_examples():
    assert rel_trace(GF8.zero, 2) == GF8.zero
    assert rel_trace(GF8.one, 2) == GF8.one
    assert sum(1 for a in GF8.elements() if not rel_trace(a, 2)) == 4
    with pytest.raises(ValueError):
        rel_trace(GF9(1), 3)


@pytest.mark.parametrize("q,p,k", [(2, 2, 1), (3, 3, 1), (4, 2, 2), (5, 5, 1), (7, 7, 1), (8, 2, 3), (9, 3, 2), (16, 2, 4)])
def test_trace_lands_in_subfield_and_kernel_has_q_squared(q, p, k):
    F = get_field(p, 3 * k, k)
    zeros = 0
    for a in F.elements():
        t = rel_trace(a, q)
        assert is_in_subfield(t, q)
        zeros += not t
    assert zeros == q * q


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4)])
def test_rel_trace_is_subfield_linear(p, k):
    F = get_field(p, 3 * k, k)
    q = p ** k
    sub = [s for s in F.elements() if is_in_subfield(s, q)]
    rng = random.Random(q)
    for _ in range(1000):
        a, b = F(rng.randrange(F.order)), F(rng.randrange(F.order))
        s = rng.choice(sub)
        assert rel_trace(a + b, q) == rel_trace(a, q) + rel_trace(b, q)
        assert rel_trace(s * a, q) == s * rel_trace(a, q)


def test_is_in_subfield_examples():
    assert is_in_subfield(GF8.zero, 2)
    assert is_in_subfield(GF8.one, 2)
    assert not is_in_subfield(GF8(2), 2)


@pytest.mark.parametrize("p,d,k", [(2, 6, 1), (2, 6, 2), (2, 6, 3), (3, 6, 2), (2, 12, 4), (5, 4, 2)])
def test_subfield_has_q_elements(p, d, k):
    F = get_field(p, d, k)
    assert sum(is_in_subfield(a, p ** k) for a in F.elements()) == p ** k


def test_generator_examples():
    assert find_generator(GF8) == GF8(2)
    assert find_generator(GF9) == GF9.from_coeffs([1, 1])
    assert find_generator(get_field(3, 1)) == get_field(3, 1)(2)


@pytest.mark.parametrize("p,d,k", SMALL_SPECS[:5])
def test_generator_is_smallest_of_full_order(p, d, k):
    F = get_field(p, d, k)
    g = find_generator(F)
    n = F.order - 1
    assert mult_order(g.value, F.mul) == n
    for v in range(1, g.value):
        assert mult_order(v, F.mul) < n


def test_discrete_log_examples():
    g = find_generator(GF8)
    assert discrete_log(g, GF8.one) == 0
    assert discrete_log(g, g) == 1
    assert discrete_log(GF8(2), GF8.from_coeffs([1, 1])) == 3


@pytest.mark.parametrize("p,d,k", [(2, 3, 1), (3, 3, 1), (2, 6, 2), (5, 3, 1), (2, 12, 4), (3, 6, 2)])
def test_exponential_is_bijection(p, d, k):
    F = get_field(p, d, k)
    g = find_generator(F)
    seen = set()
    x = 1
    for e in range(F.order - 1):
        seen.add(x)
        assert discrete_log(g, F(x)) == e
        x = F.mul(x, g.value)
    assert seen == set(range(1, F.order))


@settings(max_examples=200)
@given(st.integers(1, 4095), st.integers(1, 4095))
def test_log_is_homomorphism(a, b):
    F = get_field(2, 12, 4)
    g = find_generator(F)
    n = F.order - 1
    assert discrete_log(g, F(a) * F(b)) == (discrete_log(g, F(a)) + discrete_log(g, F(b))) % n


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_quotient_log_matches_full_log(q):
    from sidonlab.singer import singer_field

    F = singer_field(q)
    g = find_generator(F)
    M = q * q + q + 1
    for v in range(1, F.order):
        assert quotient_log(g, F(v), M) == discrete_log(g, F(v)) % M


def test_quotient_log_rejects_non_divisor():
    g = find_generator(GF8)
    with pytest.raises(ValueError):
        quotient_log(g, GF8.one, 3)
