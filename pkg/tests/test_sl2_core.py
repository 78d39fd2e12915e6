"""Matrix layer: arithmetic conventions, classification, closed forms."""

import random

import pytest

from sl2bar import closure
from sl2bar.closure import ONE, ZERO, celt, cinv, reduce_elt
from sl2bar.errors import (
    NonUnitDeterminant,
    NotAnInvolution,
    ParseError,
    PreconditionError,
    SingularMatrix,
)
from sl2bar.gf2_field import random_elt
from sl2bar.sl2_core import (
    IDENTITY,
    SWAP,
    JORDAN_IDENTITY,
    JORDAN_UNIPOTENT,
    Mat2,
    SubsetName,
    are_conjugate,
    classify_jordan,
    commute_after_diag_twist,
    conj,
    conjugate_eq1,
    conjugate_eq2,
    diag_as_two_involutions,
    diag_mat,
    inv_transpose,
    involution_params,
    is_member,
    lower_uni,
    lt_conjugation_scaling,
    mat_entry_masks,
    mat_from_masks,
    mdet,
    minv,
    mmul,
    morder,
    mtrace,
    normalize_to_sl2,
    parse_mat,
    random_sl2_mat,
    split_class,
    transpose,
    upper_uni,
)

G2 = celt(2, 2)  # the level-2 generator


def rand_mat(rng, level):
    return Mat2(*(reduce_elt(random_elt(rng, level)) for _ in range(4)))


def test_det_trace_conventions():
    M = diag_mat(G2, cinv(G2))
    assert mdet(M) == ONE  # g(g+1) = g^2+g = 1
    assert mtrace(M) == ONE
    N = Mat2(G2, ONE, ONE, G2)
    assert mdet(N) == G2  # ad + bc = g^2 + 1 = (g+1) + 1 = g
    assert mtrace(N) == ZERO


def test_minv_entry_swap():
    rng = random.Random(1)
    for _ in range(100):
        M = random_sl2_mat(rng, 3)
        s, t, u, v = M.entries()
        assert minv(M) == Mat2(v, t, u, s)
        assert mmul(minv(M), M) == IDENTITY
    assert minv(IDENTITY) == IDENTITY
    with pytest.raises(SingularMatrix):
        minv(Mat2(ONE, ONE, ONE, ONE))


def test_det_multiplicative_and_trace_conjugation_invariant():
    # exhaustive over all sixteen level-1 matrices, including singular ones
    mats = [mat_from_masks(1, (a, b, c, d)) for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1)]
    for M in mats:
        for N in mats:
            assert mdet(mmul(M, N)) == closure.cmul(mdet(M), mdet(N))
    rng = random.Random(2)
    for _ in range(100):
        level = rng.choice([2, 3, 4, 6])
        M, N = rand_mat(rng, level), rand_mat(rng, level)
        assert mdet(mmul(M, N)) == closure.cmul(mdet(M), mdet(N))
        X = random_sl2_mat(rng, level)
        assert mtrace(conj(X, M)) == mtrace(M)


def test_inv_transpose():
    M = parse_mat("[[0x2@2,0x3@2],[0x1@1,0x1@1]]")
    assert mdet(M) == ONE
    assert inv_transpose(M) == Mat2(M.d, M.c, M.b, M.a)
    assert inv_transpose(inv_transpose(M)) == M
    assert inv_transpose(upper_uni(ONE)) == lower_uni(ONE)
    with pytest.raises(NonUnitDeterminant):
        inv_transpose(diag_mat(G2, G2))


def test_inv_transpose_is_swap_conjugation():
    rng = random.Random(3)
    for _ in range(200):
        M = random_sl2_mat(rng, rng.choice([1, 2, 3]))
        assert inv_transpose(M) == conj(SWAP, M)


def test_normalize_to_sl2():
    M = random_sl2_mat(random.Random(4), 3)
    assert normalize_to_sl2(M) == M
    gI = diag_mat(G2, G2)
    assert normalize_to_sl2(gI) == IDENTITY  # det g^2, scale by g^(-1)
    with pytest.raises(SingularMatrix):
        normalize_to_sl2(Mat2(ZERO, ZERO, ZERO, ZERO))
    rng = random.Random(5)
    done = 0
    while done < 500:
        X = rand_mat(rng, rng.choice([2, 3, 4]))
        if mdet(X).is_zero:
            continue
        done += 1
        Y = normalize_to_sl2(X)
        assert mdet(Y) == ONE
        M = random_sl2_mat(rng, 4)
        assert conj(Y, M) == conj(X, M)


def test_morder_examples():
    assert morder(upper_uni(ONE)) == 2
    assert morder(diag_mat(G2, cinv(G2))) == 3
    assert morder(IDENTITY) == 1
    with pytest.raises(NonUnitDeterminant):
        morder(diag_mat(G2, G2))


def test_classify_examples():
    assert classify_jordan(upper_uni(ONE)) == JORDAN_UNIPOTENT
    got = classify_jordan(diag_mat(G2, cinv(G2)))
    assert got.kind == "split" and got.lam == G2
    assert classify_jordan(IDENTITY) == JORDAN_IDENTITY
    # irreducible characteristic polynomial: the eigenvalues live one level up
    M = parse_mat("[[0x0@1,0x1@1],[0x1@1,0x1@1]]")
    got = classify_jordan(M)
    assert got.kind == "split" and got.lam.level == 2
    assert morder(M) == 3


def test_split_canonicalization():
    assert split_class(G2) == split_class(cinv(G2))
    assert split_class(G2).lam == G2
    with pytest.raises(PreconditionError):
        split_class(ONE)


def test_are_conjugate_examples():
    D = diag_mat(G2, cinv(G2))
    assert are_conjugate(D, D)
    assert are_conjugate(D, diag_mat(cinv(G2), G2))
    assert not are_conjugate(upper_uni(ONE), IDENTITY)


def test_conjugate_eq1_examples():
    lam = celt(3, 5)
    assert conjugate_eq1(lam, ONE, ZERO, ZERO, ONE) == diag_mat(lam, cinv(lam))
    assert conjugate_eq1(lam, ZERO, ONE, ONE, ZERO) == diag_mat(cinv(lam), lam)
    with pytest.raises(PreconditionError):
        conjugate_eq1(ZERO, ONE, ZERO, ZERO, ONE)
    with pytest.raises(PreconditionError):
        conjugate_eq1(lam, ONE, ONE, ONE, ONE)


def test_conjugate_eq2_examples():
    lam = celt(2, 3)
    assert conjugate_eq2(lam, ONE, ZERO, ZERO, ONE) == upper_uni(lam)
    # u = 0 lands in the upper triangulars with corner lam s^2
    s = celt(3, 6)
    out = conjugate_eq2(lam, s, ONE, ZERO, cinv(s))
    assert is_member(out, SubsetName.UPPER_UNI)
    assert out.b == closure.cmul(lam, closure.cmul(s, s))


def test_eq1_eq2_match_triple_products():
    rng = random.Random(6)
    for _ in range(500):
        level = rng.choice([1, 2, 3, 4])
        lam = reduce_elt(random_elt(rng, level, nonzero=True))
        M = random_sl2_mat(rng, level)
        s, t, u, v = M.entries()
        assert conjugate_eq1(lam, s, t, u, v) == conj(M, diag_mat(lam, cinv(lam)))
        assert conjugate_eq2(lam, s, t, u, v) == conj(M, upper_uni(lam))


def test_is_member():
    for name in (SubsetName.DIAG, SubsetName.UPPER_TRI, SubsetName.UPPER_UNI, SubsetName.LOWER_TRI, SubsetName.LOWER_UNI):
        assert is_member(IDENTITY, name)
    assert not is_member(IDENTITY, SubsetName.OFF_DIAG)
    assert is_member(SWAP, SubsetName.OFF_DIAG)
    for name in set(SubsetName) - {SubsetName.OFF_DIAG}:
        assert not is_member(SWAP, name)
    M = parse_mat("[[0x2@2,0x1@1],[0x0@1,0x3@2]]")
    assert is_member(M, SubsetName.UPPER_TRI)
    for name in set(SubsetName) - {SubsetName.UPPER_TRI}:
        assert not is_member(M, name)


def test_involution_params():
    assert involution_params(upper_uni(ONE)) == (ONE, ZERO)
    assert involution_params(lower_uni(ONE)) == (ZERO, ONE)
    with pytest.raises(NotAnInvolution):
        involution_params(IDENTITY)
    rng = random.Random(7)
    for _ in range(100):
        level = rng.choice([2, 3, 4])
        M = random_sl2_mat(rng, level)
        invol = conj(M, upper_uni(ONE))  # a conjugated involution
        s, u = involution_params(invol)
        corner = closure.cadd(ONE, closure.cmul(s, u))
        assert Mat2(corner, invol.b, invol.c, corner) == invol


def test_diag_as_two_involutions():
    left, right = diag_as_two_involutions(ONE)
    assert left == right == SWAP
    assert mmul(left, right) == IDENTITY
    left, right = diag_as_two_involutions(G2)
    assert mmul(left, right) == diag_mat(G2, cinv(G2))
    rng = random.Random(8)
    for _ in range(100):
        lam = reduce_elt(random_elt(rng, rng.choice([1, 2, 3, 4]), nonzero=True))
        left, right = diag_as_two_involutions(lam)
        assert morder(left) == 2 and morder(right) == 2
        assert mmul(left, right) == diag_mat(lam, cinv(lam))
    with pytest.raises(PreconditionError):
        diag_as_two_involutions(ZERO)


def test_commute_after_diag_twist():
    assert commute_after_diag_twist(upper_uni(ONE), G2)
    assert commute_after_diag_twist(lower_uni(ONE), G2)
    assert not commute_after_diag_twist(SWAP, G2)  # s = u = 1
    with pytest.raises(PreconditionError):
        commute_after_diag_twist(SWAP, ONE)
    with pytest.raises(NotAnInvolution):
        commute_after_diag_twist(IDENTITY, G2)


def test_lt_conjugation_scaling():
    lam = celt(3, 7)
    assert lt_conjugation_scaling(lam, lam) == IDENTITY
    D = lt_conjugation_scaling(ONE, G2)
    assert conj(D, lower_uni(ONE)) == lower_uni(G2)
    rng = random.Random(9)
    for _ in range(100):
        level = rng.choice([2, 3, 4])
        lam = reduce_elt(random_elt(rng, level, nonzero=True))
        z = reduce_elt(random_elt(rng, level, nonzero=True))
        D = lt_conjugation_scaling(lam, z)
        assert conj(D, lower_uni(lam)) == lower_uni(z)
    with pytest.raises(PreconditionError):
        lt_conjugation_scaling(ZERO, ONE)


def test_parse_mat():
    M = parse_mat(" [[0x1@1, 0x1@1], [0x0@1, 0x1@1]] ")
    assert M == upper_uni(ONE)
    for bad in ("[[0x1@1]]", "[[a,b],[c,d]]", "[0x1@1,0x1@1,0x0@1,0x1@1]"):
        with pytest.raises(ParseError):
            parse_mat(bad)
    rng = random.Random(10)
    for _ in range(50):
        M = random_sl2_mat(rng, 4)
        assert parse_mat(str(M)) == M


def test_mat_masks_round_trip():
    rng = random.Random(11)
    for _ in range(50):
        M = random_sl2_mat(rng, 2)
        quad = mat_entry_masks(M, 4)
        assert mat_from_masks(4, quad) == M


def test_transpose():
    M = parse_mat("[[0x2@2,0x1@1],[0x0@1,0x3@2]]")
    assert transpose(M) == parse_mat("[[0x2@2,0x0@1],[0x1@1,0x3@2]]")
    assert transpose(transpose(M)) == M
