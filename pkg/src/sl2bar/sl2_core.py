"""2x2 matrices over the binary field tower, with characteristic-2
conventions throughout: the determinant of [[a,b],[c,d]] is ad + bc, and
the inverse of a determinant-one matrix [[s,t],[u,v]] is the entry swap
[[v,t],[u,s]].

Provides conjugacy classification (identity / unipotent / split with a
canonical eigenvalue), the named shape subsets (diagonal, off-diagonal,
upper/lower triangular and unitriangular), the two closed-form
conjugation identities for diagonal and unitriangular targets, and the
involution parametrization [[1+su, s^2],[u^2, 1+su]].

Conjugation is fixed as conj(M, g) = M * g * M^(-1) everywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import closure
from .closure import ZERO, ONE, ClosureElt, cadd, cinv, cmul, corder, csqrt
from .errors import (
    LevelOverflow,
    NonUnitDeterminant,
    NotAnInvolution,
    ParseError,
    PreconditionError,
    SingularMatrix,
)
from .gf2_field import artin_schreier_solve, random_elt
from .gf2_field import add as fadd, inv as finv, mul as fmul, one as fone
from .closure import lift, reduce_elt


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 matrix [[a, b], [c, d]] over the closure."""

    a: ClosureElt
    b: ClosureElt
    c: ClosureElt
    d: ClosureElt

    def __mul__(self, other: "Mat2") -> "Mat2":
        return mmul(self, other)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    @property
    def is_identity(self) -> bool:
        return self == IDENTITY

    def entries(self) -> tuple[ClosureElt, ClosureElt, ClosureElt, ClosureElt]:
        return (self.a, self.b, self.c, self.d)


def mat2(a, b, c, d) -> Mat2:
    return Mat2(a, b, c, d)


IDENTITY = Mat2(ONE, ZERO, ZERO, ONE)
SWAP = Mat2(ZERO, ONE, ONE, ZERO)


def diag_mat(x: ClosureElt, y: ClosureElt) -> Mat2:
    return Mat2(x, ZERO, ZERO, y)


def off_diag_mat(y: ClosureElt) -> Mat2:
    return Mat2(ZERO, y, cinv(y), ZERO)


def upper_uni(y: ClosureElt) -> Mat2:
    return Mat2(ONE, y, ZERO, ONE)


def lower_uni(z: ClosureElt) -> Mat2:
    return Mat2(ONE, ZERO, z, ONE)


def mdet(M: Mat2) -> ClosureElt:
    return cadd(cmul(M.a, M.d), cmul(M.b, M.c))


def mtrace(M: Mat2) -> ClosureElt:
    return cadd(M.a, M.d)


def mmul(M: Mat2, N: Mat2) -> Mat2:
    return Mat2(
        cadd(cmul(M.a, N.a), cmul(M.b, N.c)),
        cadd(cmul(M.a, N.b), cmul(M.b, N.d)),
        cadd(cmul(M.c, N.a), cmul(M.d, N.c)),
        cadd(cmul(M.c, N.b), cmul(M.d, N.d)),
    )


def transpose(M: Mat2) -> Mat2:
    return Mat2(M.a, M.c, M.b, M.d)


def minv(M: Mat2) -> Mat2:
    """Inverse; for determinant one this is the entry swap [[d,b],[c,a]]."""
    det = mdet(M)
    if det.is_zero:
        raise SingularMatrix(f"matrix {M} has determinant zero")
    if det.is_one:
        return Mat2(M.d, M.b, M.c, M.a)
    di = cinv(det)
    return Mat2(cmul(M.d, di), cmul(M.b, di), cmul(M.c, di), cmul(M.a, di))


def conj(M: Mat2, g: Mat2) -> Mat2:
    """M * g * M^(-1)."""
    return mmul(mmul(M, g), minv(M))


def require_sl2(M: Mat2) -> None:
    if not mdet(M).is_one:
        raise NonUnitDeterminant(f"matrix {M} has determinant {mdet(M)}, need 1")


def inv_transpose(M: Mat2) -> Mat2:
    """[[a,b],[c,d]] -> [[d,c],[b,a]]; equals conjugation by the swap
    matrix and is an involutive automorphism of the determinant-one group."""
    require_sl2(M)
    return Mat2(M.d, M.c, M.b, M.a)


def normalize_to_sl2(X: Mat2) -> Mat2:
    """Scale X by the inverse square root of its determinant.

    The result Y has determinant one and conjugates exactly as X does.
    """
    det = mdet(X)
    if det.is_zero:
        raise SingularMatrix(f"matrix {X} has determinant zero")
    if det.is_one:
        return X
    s = csqrt(cinv(det))
    return Mat2(cmul(s, X.a), cmul(s, X.b), cmul(s, X.c), cmul(s, X.d))


# ---------------------------------------------------------------------------
# conjugacy classification


@dataclass(frozen=True)
class JordanClass:
    """Conjugacy class descriptor: identity, unipotent, or split with a
    canonical eigenvalue (the smaller of {lam, lam^(-1)} by (level, mask))."""

    kind: str  # "identity" | "unipotent" | "split"
    lam: ClosureElt | None = None

    def __str__(self) -> str:
        if self.kind == "split":
            return f"Split({self.lam})"
        return self.kind.capitalize()


JORDAN_IDENTITY = JordanClass("identity")
JORDAN_UNIPOTENT = JordanClass("unipotent")


def split_class(lam: ClosureElt) -> JordanClass:
    """Split class with the canonical representative of {lam, lam^(-1)}."""
    if lam.is_zero or lam.is_one:
        raise PreconditionError(f"split eigenvalue must avoid 0 and 1, got {lam}")
    other = cinv(lam)
    pick = min(lam, other, key=lambda x: (x.level, x.mask))
    return JordanClass("split", pick)


def classify_jordan(M: Mat2) -> JordanClass:
    """Complete conjugacy invariant for determinant-one matrices.

    Nonzero trace t yields the split class with eigenvalues solving
    x^2 + t x + 1 = 0; substituting x = t y turns that into y^2 + y = t^(-2),
    solvable at the trace's level or, when the trace obstruction blocks it,
    at twice that level.
    """
    require_sl2(M)
    if M.is_identity:
        return JORDAN_IDENTITY
    t = mtrace(M)
    if t.is_zero:
        return JORDAN_UNIPOTENT
    c = cinv(cmul(t, t))  # t^(-2)
    y = artin_schreier_solve(c.elt)
    if y is None:
        m = c.level
        if 2 * m > closure.N_MAX:
            raise LevelOverflow(f"eigenvalues of {M} need level {2 * m} > {closure.N_MAX}")
        y = artin_schreier_solve(lift(c.elt, 2 * m))
        assert y is not None, "trace vanishes after doubling the level"
    lam = cmul(t, reduce_elt(y))
    assert cmul(lam, cadd(lam, t)).is_one  # the two roots multiply to det = 1
    return split_class(lam)


def are_conjugate(M: Mat2, N: Mat2) -> bool:
    return classify_jordan(M) == classify_jordan(N)


def morder(M: Mat2) -> int:
    """Order of a determinant-one matrix, via its conjugacy class.

    Identity has order 1, unipotent matrices order 2, split matrices the
    multiplicative order of the eigenvalue.  Results up to 2^16 are
    cross-checked by iterated multiplication.
    """
    k = classify_jordan(M)
    if k.kind == "identity":
        d = 1
    elif k.kind == "unipotent":
        d = 2
    else:
        d = corder(k.lam)
    if d <= 1 << 16:
        cur = M
        steps = 1
        while not cur.is_identity:
            cur = mmul(cur, M)
            steps += 1
        assert steps == d, f"iterated order {steps} disagrees with {d}"
    return d


# ---------------------------------------------------------------------------
# named shape subsets


class SubsetName(enum.Enum):
    DIAG = "diag"
    OFF_DIAG = "off-diag"
    UPPER_TRI = "upper-tri"
    UPPER_UNI = "upper-uni"
    LOWER_TRI = "lower-tri"
    LOWER_UNI = "lower-uni"


def is_member(M: Mat2, which: SubsetName) -> bool:
    require_sl2(M)
    if which is SubsetName.DIAG:
        return M.b.is_zero and M.c.is_zero
    if which is SubsetName.OFF_DIAG:
        return M.a.is_zero and M.d.is_zero
    if which is SubsetName.UPPER_TRI:
        return M.c.is_zero
    if which is SubsetName.UPPER_UNI:
        return M.c.is_zero and M.a.is_one and M.d.is_one
    if which is SubsetName.LOWER_TRI:
        return M.b.is_zero
    if which is SubsetName.LOWER_UNI:
        return M.b.is_zero and M.a.is_one and M.d.is_one
    raise ValueError(which)


# ---------------------------------------------------------------------------
# closed-form conjugations


def _require_unit_conjugator(s, t, u, v) -> None:
    if not cadd(cmul(s, v), cmul(t, u)).is_one:
        raise PreconditionError("conjugator [[s,t],[u,v]] must satisfy sv + tu = 1")


def conjugate_eq1(lam: ClosureElt, s, t, u, v) -> Mat2:
    """Closed form of [[s,t],[u,v]] * diag(lam, lam^(-1)) * [[v,t],[u,s]]:

        [[lam sv + lam^(-1) tu,  (lam + lam^(-1)) st],
         [(lam + lam^(-1)) uv,   lam^(-1) sv + lam tu]]
    """
    if lam.is_zero:
        raise PreconditionError("diagonal entry lam must be nonzero")
    _require_unit_conjugator(s, t, u, v)
    li = cinv(lam)
    mix = cadd(lam, li)
    return Mat2(
        cadd(cmul(lam, cmul(s, v)), cmul(li, cmul(t, u))),
        cmul(mix, cmul(s, t)),
        cmul(mix, cmul(u, v)),
        cadd(cmul(li, cmul(s, v)), cmul(lam, cmul(t, u))),
    )


def conjugate_eq2(lam: ClosureElt, s, t, u, v) -> Mat2:
    """Closed form of [[s,t],[u,v]] * [[1,lam],[0,1]] * [[v,t],[u,s]]:

        [[1 + lam su, lam s^2], [lam u^2, 1 + lam su]]
    """
    _require_unit_conjugator(s, t, u, v)
    corner = cadd(ONE, cmul(lam, cmul(s, u)))
    return Mat2(corner, cmul(lam, cmul(s, s)), cmul(lam, cmul(u, u)), corner)


# ---------------------------------------------------------------------------
# involutions and generation helpers


def involution_params(M: Mat2) -> tuple[ClosureElt, ClosureElt]:
    """The (s, u) with M = [[1+su, s^2], [u^2, 1+su]] for an order-2 M."""
    if morder(M) != 2:
        raise NotAnInvolution(f"matrix {M} does not have order 2")
    s = csqrt(M.b)
    u = csqrt(M.c)
    corner = cadd(ONE, cmul(s, u))
    assert Mat2(corner, M.b, M.c, corner) == M
    assert not (s.is_zero and u.is_zero)
    return s, u


def diag_as_two_involutions(lam: ClosureElt) -> tuple[Mat2, Mat2]:
    """Two order-2 factors whose product is diag(lam, lam^(-1)):
    [[0,lam],[lam^(-1),0]] and the swap matrix."""
    if lam.is_zero:
        raise PreconditionError("lam must be nonzero")
    left = off_diag_mat(lam)
    assert mmul(left, SWAP) == diag_mat(lam, cinv(lam))
    return left, SWAP


def commute_after_diag_twist(M: Mat2, lam: ClosureElt) -> bool:
    """Does the order-2 matrix M commute with its diag(lam, lam^(-1))
    twist D M D^(-1)?  True exactly when M is unitriangular (s = 0 or
    u = 0); both routes are computed and must agree."""
    if lam.is_zero or lam.is_one:
        raise PreconditionError("lam must avoid 0 and 1")
    s, u = involution_params(M)  # also enforces order 2
    D = diag_mat(lam, cinv(lam))
    twisted = conj(D, M)
    direct = mmul(M, twisted) == mmul(twisted, M)
    criterion = s.is_zero or u.is_zero
    assert direct == criterion
    return direct


def lt_conjugation_scaling(lam: ClosureElt, z: ClosureElt) -> Mat2:
    """The diagonal D = diag(sqrt(lam z^(-1)), sqrt(lam^(-1) z)) that
    conjugates [[1,0],[lam,1]] to [[1,0],[z,1]]."""
    if lam.is_zero or z.is_zero:
        raise PreconditionError("lam and z must be nonzero")
    D = diag_mat(csqrt(cmul(lam, cinv(z))), csqrt(cmul(cinv(lam), z)))
    assert conj(D, lower_uni(lam)) == lower_uni(z)
    return D


# ---------------------------------------------------------------------------
# literals and randomness


def mat_to_json(M: Mat2) -> list[str]:
    """JSON form of a matrix: the 4-array of its entry literals."""
    return [str(e) for e in M.entries()]


def parse_mat(text: str) -> Mat2:
    """Parse ``[[e,e],[e,e]]`` with element literals, whitespace tolerated."""
    squeezed = "".join(text.split())
    if not (squeezed.startswith("[[") and squeezed.endswith("]]")):
        raise ParseError(f"bad matrix literal {text!r}")
    body = squeezed[2:-2]
    rows = body.split("],[")
    if len(rows) != 2:
        raise ParseError(f"bad matrix literal {text!r}: need two rows")
    cells = []
    for row in rows:
        parts = row.split(",")
        if len(parts) != 2:
            raise ParseError(f"bad matrix literal {text!r}: need two entries per row")
        cells.extend(closure.parse(p) for p in parts)
    return Mat2(*cells)


def random_sl2_mat(rng, level: int) -> Mat2:
    """Uniformly random determinant-one matrix with entries at `level`."""
    while True:
        s = random_elt(rng, level)
        t = random_elt(rng, level)
        u = random_elt(rng, level)
        if not s.is_zero:
            v = fmul(finv(s), fadd(fone(level), fmul(t, u)))
        elif not t.is_zero:
            u = finv(t)  # s = 0 forces tu = 1
            v = random_elt(rng, level)
        else:
            continue
        return Mat2(reduce_elt(s), reduce_elt(t), reduce_elt(u), reduce_elt(v))


def mat_entry_masks(M: Mat2, level: int) -> tuple[int, int, int, int]:
    """Entry masks of M lifted to a common level (entry levels must divide it)."""
    return tuple(lift(e.elt, level).mask for e in M.entries())  # type: ignore[return-value]


def mat_from_masks(level: int, quad) -> Mat2:
    a, b, c, d = quad
    return Mat2(celt4(level, a), celt4(level, b), celt4(level, c), celt4(level, d))


def celt4(level: int, mask: int) -> ClosureElt:
    return closure.celt(level, int(mask))


__all__ = [
    "IDENTITY",
    "SWAP",
    "JordanClass",
    "JORDAN_IDENTITY",
    "JORDAN_UNIPOTENT",
    "Mat2",
    "SubsetName",
    "are_conjugate",
    "classify_jordan",
    "commute_after_diag_twist",
    "conj",
    "conjugate_eq1",
    "conjugate_eq2",
    "diag_as_two_involutions",
    "diag_mat",
    "inv_transpose",
    "involution_params",
    "is_member",
    "lower_uni",
    "lt_conjugation_scaling",
    "mat2",
    "mat_entry_masks",
    "mat_from_masks",
    "mat_to_json",
    "mdet",
    "minv",
    "mmul",
    "morder",
    "mtrace",
    "normalize_to_sl2",
    "off_diag_mat",
    "parse_mat",
    "random_sl2_mat",
    "require_sl2",
    "split_class",
    "transpose",
    "upper_uni",
]
