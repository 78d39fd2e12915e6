"""Polynomials over the 2-element field, stored as integer bit-masks.

The polynomial b_n x^n + ... + b_1 x + b_0 is the integer with bit i equal
to b_i, so x is 0b10 and x^2+x+1 is 0b111.  Every nonzero polynomial is
monic (the leading coefficient is the top set bit).  Addition is XOR;
multiplication is carry-less.

Besides raw mask arithmetic the module provides irreducibility and
primitivity tests (primitivity of degree n needs the factorization of
2^n - 1, obtained by memoized trial division) and small integer helpers
(factorize, totient, divisors) used throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def degree(f: int) -> int:
    """Degree of the mask f; the zero polynomial has degree -1."""
    return f.bit_length() - 1


def pmul(f: int, g: int) -> int:
    """Carry-less product of two masks."""
    r = 0
    while g:
        if g & 1:
            r ^= f
        f <<= 1
        g >>= 1
    return r


def pmod(f: int, m: int) -> int:
    """Remainder of f modulo the nonzero mask m."""
    if m == 0:
        raise ZeroDivisionError("polynomial modulus is zero")
    dm = degree(m)
    df = degree(f)
    while df >= dm:
        f ^= m << (df - dm)
        df = degree(f)
    return f


def pmulmod(f: int, g: int, m: int) -> int:
    return pmod(pmul(f, g), m)


def ppowmod(f: int, e: int, m: int) -> int:
    """f**e modulo m by square and multiply, e >= 0."""
    if e < 0:
        raise ValueError("negative polynomial exponent")
    r = 1
    f = pmod(f, m)
    while e:
        if e & 1:
            r = pmulmod(r, f, m)
        f = pmulmod(f, f, m)
        e >>= 1
    return r


def pgcd(f: int, g: int) -> int:
    while g:
        f, g = g, pmod(f, g)
    return f


def is_irreducible(f: int) -> bool:
    """True iff the mask f is irreducible over the 2-element field.

    Uses the standard criterion: x^(2^n) = x mod f together with
    gcd(x^(2^(n/q)) - x, f) = 1 for every prime q dividing n = deg f.
    """
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False  # divisible by x
    checkpoints = {n // q for q in factorize(n)}
    t = 0b10
    for i in range(1, n + 1):
        t = pmulmod(t, t, f)
        if i in checkpoints and pgcd(t ^ 0b10, f) != 1:
            return False
    return t == 0b10


def is_primitive(f: int) -> bool:
    """True iff f is irreducible of degree n and x generates the
    multiplicative group of the quotient field (order 2^n - 1)."""
    n = degree(f)
    if n <= 0 or not f & 1:
        return False
    if not is_irreducible(f):
        return False
    order = (1 << n) - 1
    for p in factorize(order):
        if ppowmod(0b10, order // p, f) == 1:
            return False
    return True


def poly_str(f: int) -> str:
    """Human-readable form, e.g. 0b111 -> 'x^2+x+1'."""
    if f == 0:
        return "0"
    terms = []
    for i in range(degree(f), -1, -1):
        if f >> i & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return "+".join(terms)


@dataclass(frozen=True)
class Gf2Poly:
    """A nonzero (hence monic) polynomial over the 2-element field."""

    mask: int

    def __post_init__(self):
        if self.mask <= 0:
            raise ValueError("Gf2Poly mask must be a positive integer")

    @property
    def degree(self) -> int:
        return degree(self.mask)

    def is_irreducible(self) -> bool:
        return is_irreducible(self.mask)

    def __str__(self) -> str:
        return poly_str(self.mask)


# ---------------------------------------------------------------------------
# integer helpers


@lru_cache(maxsize=None)
def factorize(m: int) -> tuple[int, ...]:
    """Distinct prime factors of m >= 1 by trial division, ascending."""
    if m < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return tuple(out)


def totient(m: int) -> int:
    """Euler totient of m >= 1."""
    t = m
    for p in factorize(m):
        t -= t // p
    return t


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])
