"""Mask polynomial arithmetic checked against naive reimplementations."""

import pytest
from hypothesis import given, strategies as st

from sl2bar.gf2poly import (
    Gf2Poly,
    degree,
    divisors,
    factorize,
    is_irreducible,
    is_primitive,
    pgcd,
    pmod,
    pmul,
    poly_str,
    ppowmod,
    totient,
)

masks = st.integers(min_value=0, max_value=(1 << 12) - 1)


def naive_mul(f, g):
    out = 0
    i = 0
    while f >> i:
        if f >> i & 1:
            out ^= g << i
        i += 1
    return out


def naive_mod(f, m):
    while degree(f) >= degree(m):
        f ^= m << (degree(f) - degree(m))
    return f


def naive_irreducible(f):
    n = degree(f)
    if n < 1:
        return False
    for g in range(2, 1 << n):
        if 1 <= degree(g) < n and naive_mod(f, g) == 0:
            return False
    return True


@given(masks, masks)
def test_pmul_matches_naive(f, g):
    assert pmul(f, g) == naive_mul(f, g)


@given(masks, st.integers(min_value=1, max_value=(1 << 12) - 1))
def test_pmod_matches_naive(f, m):
    assert pmod(f, m) == naive_mod(f, m)


@given(masks, masks)
def test_pgcd_divides_both(f, g):
    d = pgcd(f, g)
    if d:
        assert pmod(f, d) == 0 and pmod(g, d) == 0


def test_degree():
    assert degree(0) == -1
    assert degree(1) == 0
    assert degree(0b111) == 2


def test_ppowmod():
    # x^3 mod x^2+x+1 = 1 because the quotient field has order 4
    assert ppowmod(0b10, 3, 0b111) == 1
    assert ppowmod(0b10, 0, 0b111) == 1


@pytest.mark.parametrize("deg_bound", [8])
def test_irreducible_matches_exhaustive_scan(deg_bound):
    for f in range(2, 1 << (deg_bound + 1)):
        assert is_irreducible(f) == naive_irreducible(f), f"{f:#b}"


def test_primitive_examples():
    assert is_primitive(0b111)  # x^2+x+1
    assert is_primitive(0b1011)  # x^3+x+1
    assert not is_primitive(0b11111)  # x^4+x^3+x^2+x+1 divides x^5-1: order 5 < 15
    assert not is_primitive(0b110)  # reducible
    assert is_primitive(0b11)  # x+1, the degree-1 generator polynomial


def test_primitive_implies_irreducible():
    for f in range(2, 1 << 9):
        if is_primitive(f):
            assert is_irreducible(f)


def test_factorize_and_totient():
    assert factorize(1) == ()
    assert factorize(12) == (2, 3)
    assert factorize(2**30 - 1) == (3, 7, 11, 31, 151, 331)
    for m in range(1, 200):
        assert totient(m) == sum(1 for k in range(1, m + 1) if __import__("math").gcd(k, m) == 1)


def test_divisors():
    assert divisors(1) == (1,)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(30) == (1, 2, 3, 5, 6, 10, 15, 30)


def test_gf2poly_str_and_validation():
    assert str(Gf2Poly(0b111)) == "x^2+x+1"
    assert str(Gf2Poly(0b10)) == "x"
    assert Gf2Poly(0b1011).degree == 3
    assert poly_str(0) == "0"
    with pytest.raises(ValueError):
        Gf2Poly(0)
