"""The union of the binary field tower as a direct limit.

A closure element is stored at its minimal level: the smallest m such
that the element lies in GF(2^m).  The compatible modulus table makes the
embedding GF(2^m) -> GF(2^n) for m | n canonical (send the level-m
generator to the level-n generator raised to (2^n - 1)/(2^m - 1)), so
equality, hashing, and printing of minimal representatives are all
well-defined.

Binary operations join both operands to the lcm of their levels, operate
there, and reduce the result back to minimal level.  Joins past N_MAX
fail loudly with the offending lcm named; the finite window is explicit,
never approximated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import conway
from .errors import LevelOverflow, NotADivisor
from .gf2_field import (
    N_MAX,
    FieldElt,
    add,
    divisors,
    elt_order,
    frobenius,
    gen,
    inv,
    mul,
    one,
    parse_elt,
    power,
    sqrt,
)


@dataclass(frozen=True)
class ClosureElt:
    """A closure element held by its minimal-level representative.

    Construct through ``reduce_elt`` (or ``celt``/``parse``); the raw
    constructor trusts that ``elt`` is already minimal.
    """

    elt: FieldElt

    @property
    def level(self) -> int:
        return self.elt.level

    @property
    def mask(self) -> int:
        return self.elt.mask

    @property
    def is_zero(self) -> bool:
        return self.elt.is_zero

    @property
    def is_one(self) -> bool:
        return self.elt.is_one

    def __add__(self, other: "ClosureElt") -> "ClosureElt":
        return cadd(self, other)

    def __mul__(self, other: "ClosureElt") -> "ClosureElt":
        return cmul(self, other)

    def __pow__(self, e: int) -> "ClosureElt":
        return cpow(self, e)

    def inv(self) -> "ClosureElt":
        return cinv(self)

    def sqrt(self) -> "ClosureElt":
        return csqrt(self)

    def order(self) -> int:
        return corder(self)

    def __str__(self) -> str:
        return str(self.elt)


ZERO = ClosureElt(FieldElt(1, 0))
ONE = ClosureElt(FieldElt(1, 1))


@lru_cache(maxsize=None)
def _embed_basis(m: int, n: int) -> tuple[int, ...]:
    """Masks at level n of the images of g_m^i, i = 0..m-1."""
    e = ((1 << n) - 1) // ((1 << m) - 1)
    img = power(gen(n), e)
    out = [1]
    acc = one(n)
    for _ in range(m - 1):
        acc = mul(acc, img)
        out.append(acc.mask)
    return tuple(out)


def lift(a: FieldElt, n: int) -> FieldElt:
    """Image of a under the canonical embedding into level n.

    Requires a.level | n and n <= N_MAX.  A ring homomorphism fixing 0, 1.
    """
    m = a.level
    if n > N_MAX or n < 1:
        raise LevelOverflow(f"lift target level {n} outside 1..{N_MAX}")
    if n % m != 0:
        raise NotADivisor(f"level {m} does not divide target level {n}")
    if m == n:
        return a
    basis = _embed_basis(m, n)
    mask = 0
    rest = a.mask
    i = 0
    while rest:
        if rest & 1:
            mask ^= basis[i]
        rest >>= 1
        i += 1
    return FieldElt(n, mask)


@lru_cache(maxsize=None)
def _embed_pivots(m: int, n: int) -> tuple[tuple[int, tuple[int, int]], ...]:
    """Row-reduced basis of the level-m image inside level n, as
    (leading bit, (value, preimage-selection)) pairs."""
    pivots: dict[int, tuple[int, int]] = {}
    for i, v in enumerate(_embed_basis(m, n)):
        s = 1 << i
        while v:
            lead = v.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (v, s)
                break
            pv, ps = pivots[lead]
            v ^= pv
            s ^= ps
    return tuple(pivots.items())


def _unlift(mask: int, m: int, n: int) -> int:
    """Preimage at level m of a level-n mask known to lie in the image."""
    sel = 0
    t = mask
    pivots = dict(_embed_pivots(m, n))
    while t:
        lead = t.bit_length() - 1
        pv, ps = pivots[lead]  # KeyError would mean mask is not in the subfield
        t ^= pv
        sel ^= ps
    return sel


def reduce_elt(a: FieldElt) -> ClosureElt:
    """Canonicalize to the minimal level: the smallest divisor m of
    a.level whose subfield contains a (i.e. a^(2^m) = a)."""
    n = a.level
    if a.mask in (0, 1):
        return ClosureElt(FieldElt(1, a.mask))
    for m in divisors(n):
        if m == n:
            break
        t = a
        for _ in range(m):
            t = frobenius(t)
        if t == a:
            return ClosureElt(FieldElt(m, _unlift(a.mask, m, n)))
    return ClosureElt(a)


def celt(level: int, mask: int) -> ClosureElt:
    return reduce_elt(FieldElt(level, mask))


def parse(text: str) -> ClosureElt:
    return reduce_elt(parse_elt(text))


def join(a: ClosureElt, b: ClosureElt) -> tuple[FieldElt, FieldElt]:
    """Both operands lifted to the lcm of their minimal levels."""
    n = math.lcm(a.level, b.level)
    if n > N_MAX:
        raise LevelOverflow(f"join needs level {n} = lcm({a.level}, {b.level}) > {N_MAX}")
    return lift(a.elt, n), lift(b.elt, n)


def cadd(a: ClosureElt, b: ClosureElt) -> ClosureElt:
    x, y = join(a, b)
    return reduce_elt(add(x, y))


def cmul(a: ClosureElt, b: ClosureElt) -> ClosureElt:
    x, y = join(a, b)
    return reduce_elt(mul(x, y))


def cinv(a: ClosureElt) -> ClosureElt:
    # inversion stays inside the subfield the element generates
    return ClosureElt(inv(a.elt))


def csqrt(a: ClosureElt) -> ClosureElt:
    # so does the unique square root (its square generates the same field)
    return ClosureElt(sqrt(a.elt))


def cpow(a: ClosureElt, e: int) -> ClosureElt:
    return reduce_elt(power(a.elt, e))


def corder(a: ClosureElt) -> int:
    return elt_order(a.elt)


def _drop_caches() -> None:
    _embed_basis.cache_clear()
    _embed_pivots.cache_clear()


conway.register_invalidation_hook(_drop_caches)


__all__ = [
    "ZERO",
    "ONE",
    "ClosureElt",
    "cadd",
    "celt",
    "cinv",
    "cmul",
    "corder",
    "cpow",
    "csqrt",
    "join",
    "lift",
    "parse",
    "reduce_elt",
]
