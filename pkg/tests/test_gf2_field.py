"""Field arithmetic against frozen small-field oracles and invariants."""

import random

import pytest
from hypothesis import given, strategies as st

from sl2bar import conway
from sl2bar.errors import BoundExceeded, DivisionByZero, LevelMismatch, ParseError
from sl2bar.gf2_field import (
    FieldElt,
    add,
    artin_schreier_solve,
    elt_order,
    elements_of_max_order,
    frobenius,
    frobenius_orbit,
    gen,
    inv,
    minimal_poly,
    mul,
    one,
    parse_elt,
    poly_eval,
    power,
    sqrt,
    trace_abs,
    zero,
)
from sl2bar.gf2poly import totient


def oracle_mul(x, y, n):
    """Independent product: expand, then reduce by long division."""
    mod = conway.get_active().poly(n)
    prod = 0
    for i in range(n):
        if x >> i & 1:
            prod ^= y << i
    for d in range(2 * n - 2, n - 1, -1):
        if prod >> d & 1:
            prod ^= mod << (d - n)
    return prod


def levels_strategy(levels=(1, 2, 3, 4, 6, 8)):
    return st.sampled_from(levels)


@st.composite
def field_elts(draw, levels=(1, 2, 3, 4, 6, 8)):
    n = draw(levels_strategy(levels))
    return FieldElt(n, draw(st.integers(0, (1 << n) - 1)))


# ---------------------------------------------------------------------------
# frozen examples


def test_add_examples():
    g = gen(2)
    assert add(g, g) == zero(2)
    assert add(g, one(2)) == FieldElt(2, 0x3)
    assert add(FieldElt(2, 0x3), g) == one(2)
    with pytest.raises(LevelMismatch):
        add(gen(2), gen(3))


def test_mul_examples():
    g = gen(2)
    assert mul(g, g) == FieldElt(2, 0x3)  # the only irreducible quadratic forces g^2 = g+1
    assert mul(g, one(2)) == g
    assert mul(g, FieldElt(2, 0x3)) == one(2)  # g^3 = 1 in the 3-element unit group


def test_inv_examples():
    assert inv(one(1)) == one(1)
    assert inv(gen(2)) == FieldElt(2, 0x3)
    got = inv(gen(3))
    assert mul(gen(3), got) == one(3)
    # oracle: exhaustive search over the 8 elements
    brute = [m for m in range(8) if oracle_mul(2, m, 3) == 1]
    assert brute == [got.mask]
    with pytest.raises(DivisionByZero):
        inv(zero(4))


def test_frobenius_and_sqrt_examples():
    assert frobenius(zero(3)) == zero(3)
    assert frobenius(one(3)) == one(3)
    assert frobenius(gen(2)) == FieldElt(2, 0x3)
    assert sqrt(one(5)) == one(5)
    assert sqrt(gen(2)) == FieldElt(2, 0x3)  # (g+1)^2 = g by exhaustive squaring
    assert sqrt(gen(3)) == FieldElt(3, 0x6)


def test_power_examples():
    g = gen(2)
    assert power(g, 0) == one(2)
    assert power(g, 3) == one(2)
    assert power(g, 2) == frobenius(g)
    assert power(zero(2), 5) == zero(2)
    assert power(zero(2), 0) == one(2)
    assert power(g, -1) == inv(g)
    with pytest.raises(DivisionByZero):
        power(zero(2), -1)


def test_elt_order_examples():
    assert elt_order(one(4)) == 1
    assert elt_order(gen(2)) == 3
    with pytest.raises(DivisionByZero):
        elt_order(zero(2))
    # oracle: repeated multiplication
    for mask in range(1, 16):
        a = FieldElt(4, mask)
        acc, d = a, 1
        while not acc.is_one:
            acc = mul(acc, a)
            d += 1
        assert d == elt_order(a)


def test_minimal_poly_examples():
    assert minimal_poly(zero(5)).mask == 0b10  # x
    assert minimal_poly(one(5)).mask == 0b11  # x+1
    assert minimal_poly(gen(2)).mask == 0b111


def test_frobenius_orbit_examples():
    assert frobenius_orbit(one(6)) == [one(6)]
    assert [e.mask for e in frobenius_orbit(gen(2))] == [0x2, 0x3]


def test_artin_schreier_examples():
    assert artin_schreier_solve(zero(3)) == zero(3)
    assert artin_schreier_solve(one(1)) is None
    assert artin_schreier_solve(FieldElt(2, 1)) == gen(2)  # g^2+g = 1 over the 4 elements


def test_trace_examples():
    assert trace_abs(zero(4)).is_zero
    assert trace_abs(FieldElt(2, 1)).is_zero  # 1 + 1^2 = 0
    assert trace_abs(one(1)).is_one


def test_elements_of_max_order_examples():
    assert {e.mask for e in elements_of_max_order(2)} == {0x2, 0x3}
    assert len(elements_of_max_order(4)) == 8 == totient(15)
    assert [e.mask for e in elements_of_max_order(1)] == [1]
    with pytest.raises(BoundExceeded):
        elements_of_max_order(21)


def test_literals():
    assert str(FieldElt(2, 3)) == "0x3@2"
    assert parse_elt("0x3@2") == FieldElt(2, 3)
    assert parse_elt(" 0xA@5 ") == FieldElt(5, 10)
    for bad in ("0x4@2", "3@2", "0x3", "0x3@0", "0x3@99", "junk"):
        with pytest.raises(ParseError):
            parse_elt(bad)


# ---------------------------------------------------------------------------
# invariants


@given(field_elts(), field_elts())
def test_char2_and_frobenius_additivity(a, b):
    if a.level != b.level:
        return
    assert add(a, a).is_zero
    assert frobenius(add(a, b)) == add(frobenius(a), frobenius(b))


def test_char2_exhaustive_small_levels():
    for n in range(1, 9):
        for x in range(1 << n):
            a = FieldElt(n, x)
            assert add(a, a).is_zero
            assert sqrt(frobenius(a)) == a
            assert frobenius(sqrt(a)) == a
            t = a
            for _ in range(n):
                t = frobenius(t)
            assert t == a  # the squaring map has order dividing n


def test_randomized_high_levels():
    rng = random.Random(20260809)
    for n in (12, 17, 23, 30):
        seen = set()
        for _ in range(50):
            a = FieldElt(n, rng.randrange(1 << n))
            b = FieldElt(n, rng.randrange(1 << n))
            assert add(a, a).is_zero
            assert frobenius(add(a, b)) == add(frobenius(a), frobenius(b))
            assert sqrt(frobenius(a)) == a
            seen.add(frobenius(a).mask)
        assert len(seen) >= 45  # squaring keeps points apart: it is injective


@given(field_elts())
def test_mul_matches_oracle(a):
    b = FieldElt(a.level, (a.mask * 0x9E37 + 0x79B9) % (1 << a.level))
    assert mul(a, b).mask == oracle_mul(a.mask, b.mask, a.level)


@given(field_elts())
def test_order_divides_group_order_and_is_odd(a):
    if a.is_zero:
        return
    d = elt_order(a)
    q1 = (1 << a.level) - 1
    assert q1 % d == 0
    assert d % 2 == 1
    assert power(a, q1).is_one


@given(field_elts())
def test_minimal_poly_properties(a):
    f = minimal_poly(a)
    orbit = frobenius_orbit(a)
    assert f.degree == len(orbit)
    assert f.is_irreducible()
    for r in orbit:
        assert poly_eval(f, r).is_zero
    assert a.level % len(orbit) == 0
    from sl2bar.closure import reduce_elt

    if not a.is_zero:
        assert f.degree == reduce_elt(a).level  # degree equals the minimal level


def test_artin_schreier_iff_trace_exhaustive():
    for n in range(1, 9):
        for mask in range(1 << n):
            c = FieldElt(n, mask)
            z = artin_schreier_solve(c)
            assert (z is not None) == trace_abs(c).is_zero
            if z is not None:
                assert add(frobenius(z), z) == c
                other = FieldElt(n, z.mask ^ 1)
                assert add(frobenius(other), other) == c
