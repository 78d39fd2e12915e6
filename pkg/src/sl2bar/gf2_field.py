"""Exact arithmetic in the binary fields GF(2^n) for 1 <= n <= N_MAX.

An element is a coefficient bit-mask relative to the level-n generator g,
the root x of the level-n modulus from the compatible table: bit i of the
mask is the coefficient of g^i.  Masks never have bits at positions >= n,
zero is the all-zero mask, and one is mask 0b1.  The printable literal is
``0x<hex>@<n>``, e.g. ``0x2@2`` for g at level 2.

All operations here are same-level; combining elements that live at
different levels is the job of the closure module.  Values are immutable
and every function is pure, so the module is safe to use concurrently.

Multiplication is schoolbook carry-less multiplication followed by
reduction; levels up to LOG_TABLE_MAX additionally get discrete-log
tables, built on demand, which make bulk order computations cheap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache as _functools_cache

from . import conway
from .errors import BoundExceeded, DivisionByZero, LevelMismatch, ParseError
from .gf2poly import Gf2Poly, divisors, factorize, totient

N_MAX = conway.N_MAX

# Largest level for which exhaustive element enumeration (and therefore
# discrete-log table construction) is allowed.
ENUM_MAX_LEVEL = 20
LOG_TABLE_MAX = ENUM_MAX_LEVEL


def check_level(n: int) -> int:
    if not isinstance(n, int) or not 1 <= n <= N_MAX:
        raise BoundExceeded(f"level {n} outside the supported range 1..{N_MAX}")
    return n


@dataclass(frozen=True)
class FieldElt:
    """An element of GF(2^level) as a coefficient mask."""

    level: int
    mask: int

    def __post_init__(self):
        check_level(self.level)
        if not 0 <= self.mask < (1 << self.level):
            raise ValueError(f"mask {self.mask:#x} out of range for level {self.level}")

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    @property
    def is_one(self) -> bool:
        return self.mask == 1

    def __add__(self, other: "FieldElt") -> "FieldElt":
        return add(self, other)

    def __mul__(self, other: "FieldElt") -> "FieldElt":
        return mul(self, other)

    def __pow__(self, e: int) -> "FieldElt":
        return power(self, e)

    def __str__(self) -> str:
        return f"0x{self.mask:x}@{self.level}"


def zero(n: int) -> FieldElt:
    return FieldElt(n, 0)


def one(n: int) -> FieldElt:
    return FieldElt(n, 1)


def gen(n: int) -> FieldElt:
    """The level-n generator: the modulus root x, which is 1 at level 1."""
    check_level(n)
    return FieldElt(n, 2 if n > 1 else 1)


_ELT_RE = re.compile(r"0[xX]([0-9a-fA-F]+)@([0-9]+)\Z")


def parse_elt(text: str) -> FieldElt:
    """Parse an element literal ``0x<hex>@<n>``."""
    m = _ELT_RE.match(text.strip())
    if not m:
        raise ParseError(f"bad element literal {text!r}")
    mask = int(m.group(1), 16)
    level = int(m.group(2))
    if not 1 <= level <= N_MAX:
        raise ParseError(f"bad element literal {text!r}: level {level} outside 1..{N_MAX}")
    if mask >= 1 << level:
        raise ParseError(f"bad element literal {text!r}: mask too wide for level {level}")
    return FieldElt(level, mask)


# ---------------------------------------------------------------------------
# raw mask arithmetic


def _modulus(n: int) -> int:
    return conway.get_active().poly(n)


def _mul_masks(x: int, y: int, n: int, mod: int) -> int:
    r = 0
    top = 1 << n
    while y:
        if y & 1:
            r ^= x
        x <<= 1
        if x & top:
            x ^= mod
        y >>= 1
    return r


_LOG_TABLES: dict[int, tuple[list[int], list[int]]] = {}


def _log_table(n: int) -> tuple[list[int], list[int]] | None:
    return _LOG_TABLES.get(n)


def ensure_log_table(n: int) -> tuple[list[int], list[int]]:
    """Build (idempotently) the exp/log tables for a level n <= LOG_TABLE_MAX."""
    if n > LOG_TABLE_MAX:
        raise BoundExceeded(f"log tables limited to levels <= {LOG_TABLE_MAX}, got {n}")
    tabs = _LOG_TABLES.get(n)
    if tabs is not None:
        return tabs
    mod = _modulus(n)
    q1 = (1 << n) - 1
    exp = [0] * q1
    log = [0] * (1 << n)
    val = 1
    gmask = 2 if n > 1 else 1
    for i in range(q1):
        exp[i] = val
        log[val] = i
        val = _mul_masks(val, gmask, n, mod)
    assert val == 1, "modulus is not primitive"
    _LOG_TABLES[n] = (exp, log)
    return exp, log


def _require_same_level(a: FieldElt, b: FieldElt) -> int:
    if a.level != b.level:
        raise LevelMismatch(f"levels {a.level} and {b.level} differ (join via the closure module)")
    return a.level


def add(a: FieldElt, b: FieldElt) -> FieldElt:
    n = _require_same_level(a, b)
    return FieldElt(n, a.mask ^ b.mask)


def mul(a: FieldElt, b: FieldElt) -> FieldElt:
    n = _require_same_level(a, b)
    if a.mask == 0 or b.mask == 0:
        return FieldElt(n, 0)
    tabs = _log_table(n)
    if tabs is not None:
        exp, log = tabs
        return FieldElt(n, exp[(log[a.mask] + log[b.mask]) % ((1 << n) - 1)])
    return FieldElt(n, _mul_masks(a.mask, b.mask, n, _modulus(n)))


def power(a: FieldElt, e: int) -> FieldElt:
    """a**e; e may be negative only for nonzero a."""
    n = a.level
    if a.mask == 0:
        if e < 0:
            raise DivisionByZero("negative power of zero")
        return one(n) if e == 0 else zero(n)
    q1 = (1 << n) - 1
    e %= q1
    tabs = _log_table(n)
    if tabs is not None:
        exp, log = tabs
        return FieldElt(n, exp[log[a.mask] * e % q1])
    mod = _modulus(n)
    r = 1
    x = a.mask
    while e:
        if e & 1:
            r = _mul_masks(r, x, n, mod)
        x = _mul_masks(x, x, n, mod)
        e >>= 1
    return FieldElt(n, r)


def inv(a: FieldElt) -> FieldElt:
    """Multiplicative inverse, computed as a^(2^n - 2)."""
    if a.mask == 0:
        raise DivisionByZero("inverse of zero")
    return power(a, (1 << a.level) - 2)


def frobenius(a: FieldElt) -> FieldElt:
    """The squaring automorphism x -> x^2."""
    return mul(a, a)


def sqrt(a: FieldElt) -> FieldElt:
    """The unique square root, a^(2^(n-1)); inverse of frobenius."""
    return power(a, 1 << (a.level - 1))


def trace_abs(a: FieldElt) -> FieldElt:
    """Absolute trace a + a^2 + a^4 + ...; lands in {0, 1}."""
    acc = a
    t = a
    for _ in range(a.level - 1):
        t = frobenius(t)
        acc = add(acc, t)
    assert acc.mask in (0, 1)
    return acc


def elt_order(a: FieldElt) -> int:
    """Multiplicative order of a nonzero element.

    Starts from 2^n - 1 and strips prime factors that keep a^d = 1.
    """
    if a.mask == 0:
        raise DivisionByZero("order of zero")
    d = (1 << a.level) - 1
    for p in factorize(d):
        while d % p == 0 and power(a, d // p).is_one:
            d //= p
    return d


def frobenius_orbit(a: FieldElt) -> list[FieldElt]:
    """Distinct iterates a, a^2, a^4, ...; the conjugates of a."""
    orbit = [a]
    t = frobenius(a)
    while t != a:
        orbit.append(t)
        t = frobenius(t)
    return orbit


def minimal_poly(a: FieldElt) -> Gf2Poly:
    """The monic irreducible polynomial over GF(2) with a as a root,
    the product of (x + r) over the conjugates r of a."""
    if a.mask == 0:
        return Gf2Poly(0b10)  # x
    n = a.level
    coeffs = [one(n)]  # ascending, currently the constant polynomial 1
    for r in frobenius_orbit(a):
        nxt = [zero(n)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = add(nxt[i + 1], c)
            nxt[i] = add(nxt[i], mul(c, r))
        coeffs = nxt
    mask = 0
    for i, c in enumerate(coeffs):
        if c.mask not in (0, 1):
            raise AssertionError("conjugate product left the prime field")
        mask |= c.mask << i
    return Gf2Poly(mask)


def poly_eval(f: Gf2Poly, a: FieldElt) -> FieldElt:
    """Evaluate a GF(2) polynomial at a field element (Horner)."""
    acc = zero(a.level)
    for i in range(f.degree, -1, -1):
        acc = mul(acc, a)
        if f.mask >> i & 1:
            acc = add(acc, one(a.level))
    return acc


def artin_schreier_solve(c: FieldElt) -> FieldElt | None:
    """Some z with z^2 + z = c at c's level, or None if there is none.

    The map z -> z^2 + z is linear over GF(2), so this is an n x n linear
    solve; a solution exists iff trace_abs(c) = 0, and then the solution
    set is {z, z+1}.  The returned solution has bit 0 clear.
    """
    n = c.level
    mod = _modulus(n)
    # pivots keyed by leading bit: leading bit -> (value, selection mask)
    pivots: dict[int, tuple[int, int]] = {}
    for i in range(n):
        b = 1 << i
        v = _mul_masks(b, b, n, mod) ^ b  # image of the basis vector g^i
        s = b
        while v:
            lead = v.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (v, s)
                break
            pv, ps = pivots[lead]
            v ^= pv
            s ^= ps
    t = c.mask
    sel = 0
    while t:
        lead = t.bit_length() - 1
        if lead not in pivots:
            return None
        pv, ps = pivots[lead]
        t ^= pv
        sel ^= ps
    sel &= ~1  # pick the solution with even constant coefficient
    z = FieldElt(n, sel)
    assert add(frobenius(z), z) == c
    return z


@_functools_cache
def _max_order_masks(n: int) -> tuple[int, ...]:
    ensure_log_table(n)
    q1 = (1 << n) - 1
    out = tuple(m for m in range(1, 1 << n) if elt_order(FieldElt(n, m)) == q1)
    assert len(out) == totient(q1)
    return out


def elements_of_max_order(n: int, *, bound: int = ENUM_MAX_LEVEL) -> list[FieldElt]:
    """All elements of multiplicative order 2^n - 1, ascending by mask.

    Exhaustive scan (cached per level); the count always equals
    totient(2^n - 1).
    """
    check_level(n)
    if n > bound:
        raise BoundExceeded(f"exhaustive enumeration limited to levels <= {bound}, got {n}")
    return [FieldElt(n, m) for m in _max_order_masks(n)]


def random_elt(rng, n: int, *, nonzero: bool = False) -> FieldElt:
    """Uniform element of GF(2^n) drawn from an externally seeded rng."""
    lo = 1 if nonzero else 0
    return FieldElt(n, rng.randrange(lo, 1 << n))


def _drop_caches() -> None:
    _LOG_TABLES.clear()
    _max_order_masks.cache_clear()


conway.register_invalidation_hook(_drop_caches)


__all__ = [
    "N_MAX",
    "ENUM_MAX_LEVEL",
    "FieldElt",
    "add",
    "artin_schreier_solve",
    "check_level",
    "divisors",
    "elt_order",
    "elements_of_max_order",
    "ensure_log_table",
    "frobenius",
    "frobenius_orbit",
    "gen",
    "inv",
    "minimal_poly",
    "mul",
    "one",
    "parse_elt",
    "poly_eval",
    "power",
    "random_elt",
    "sqrt",
    "trace_abs",
    "zero",
]
