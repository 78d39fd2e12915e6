"""Endomorphism families and the replay."""

import json
import random

import pytest

from sl2bar import finite_engine as fe
from sl2bar.closure import ONE, celt, cinv
from sl2bar.endo import (
    Compose,
    Entrywise,
    FieldEndo,
    InnerConj,
    InvTranspose,
    apply_group_endo,
    apply_spec_to_table,
    endo_permutes_max_order,
    endo_permutes_roots,
    field_endos,
    replay_cohopf_skeleton,
    replay_family,
    spec_str,
)
from sl2bar.errors import (
    BoundExceeded,
    LevelMismatch,
    NoPrimitiveCubeRoot,
    PreconditionError,
)
from sl2bar.gf2_field import FieldElt, gen
from sl2bar.sl2_core import SWAP, diag_mat, lower_uni, mmul, random_sl2_mat, upper_uni

G2 = celt(2, 2)


def test_field_endos_examples():
    assert [e.frob_power for e in field_endos(1)] == [0]
    two = field_endos(2)
    assert len(two) == 2
    assert two[1].apply(gen(2)) == FieldElt(2, 3)  # squaring moves g
    assert two[0].apply(gen(2)) == gen(2)
    with pytest.raises(BoundExceeded):
        field_endos(21)
    with pytest.raises(LevelMismatch):
        two[0].apply(gen(3))


def test_endo_permutes_roots():
    ident, frob = field_endos(2)
    assert endo_permutes_roots(ident, gen(2))
    assert endo_permutes_roots(frob, gen(2))
    rng = random.Random(13)
    for _ in range(1000):
        n = rng.choice([1, 2, 3, 4, 6, 8, 12])
        e = FieldEndo(n, rng.randrange(n))
        a = FieldElt(n, rng.randrange(1 << n))
        assert endo_permutes_roots(e, a)
    with pytest.raises(LevelMismatch):
        endo_permutes_roots(frob, gen(3))


def test_endo_permutes_max_order():
    ident, frob = field_endos(2)
    # squaring swaps the two generators of the 3-element unit group
    assert frob.apply(gen(2)) == FieldElt(2, 3)
    assert endo_permutes_max_order(frob, 2)
    for e in field_endos(4):
        assert endo_permutes_max_order(e, 4)
    assert endo_permutes_max_order(ident, 2)
    with pytest.raises(BoundExceeded):
        endo_permutes_max_order(FieldEndo(17, 0), 17)


def test_apply_group_endo_examples():
    D = diag_mat(G2, cinv(G2))
    ident = Entrywise(FieldEndo(2, 0))
    assert apply_group_endo(ident, D) == D
    squaring = Entrywise(FieldEndo(2, 1))
    assert apply_group_endo(squaring, D) == diag_mat(cinv(G2), G2)
    assert apply_group_endo(InvTranspose(), upper_uni(ONE)) == lower_uni(ONE)
    inner = InnerConj(SWAP)
    assert apply_group_endo(inner, upper_uni(ONE)) == lower_uni(ONE)
    comp = Compose((squaring, InvTranspose()))
    assert apply_group_endo(comp, D) == diag_mat(G2, cinv(G2))
    with pytest.raises(PreconditionError):
        InnerConj(diag_mat(G2, G2))
    with pytest.raises(LevelMismatch):
        apply_group_endo(squaring, diag_mat(celt(3, 2), cinv(celt(3, 2))))


def test_apply_group_endo_is_homomorphism():
    rng = random.Random(14)
    specs = [
        Entrywise(FieldEndo(4, 1)),
        Entrywise(FieldEndo(4, 3)),
        InvTranspose(),
        InnerConj(SWAP),
        Compose((Entrywise(FieldEndo(4, 2)), InvTranspose(), InnerConj(upper_uni(ONE)))),
    ]
    for spec in specs:
        for _ in range(50):
            M = random_sl2_mat(rng, 4)
            N = random_sl2_mat(rng, 4)
            assert apply_group_endo(spec, mmul(M, N)) == mmul(apply_group_endo(spec, M), apply_group_endo(spec, N))


def test_vectorized_apply_matches_scalar():
    G = fe.enumerate_group(2)
    specs = replay_family(2)[:24]
    rng = random.Random(15)
    for spec in specs:
        img = apply_spec_to_table(spec, G)
        for _ in range(5):
            i = rng.randrange(len(G))
            assert int(img[i]) == G.index_of(apply_group_endo(spec, G.mat(i)))


def test_spec_str():
    assert spec_str(Entrywise(FieldEndo(2, 1))) == "frob^1"
    assert spec_str(InvTranspose()) == "invtrans"
    assert spec_str(Compose((InvTranspose(), Entrywise(FieldEndo(2, 0))))) == "invtrans*frob^0"
    assert spec_str(InnerConj(SWAP)).startswith("inner(")


def test_replay_family_size_and_determinism():
    fam2 = replay_family(2)
    base = 2 + 1 + 3
    assert len(fam2) == base + base**2 + base**3
    assert [spec_str(s) for s in fam2] == [spec_str(s) for s in replay_family(2)]


def test_replay_level2():
    report = replay_cohopf_skeleton(2)
    assert report.level == 2
    assert len(report.entries) == len(replay_family(2))
    for entry in report.entries:
        assert [s.id for s in entry.steps] == list(range(1, 9))
        assert all(s.status == "pass" for s in entry.steps)
    payload = report.to_json()
    assert isinstance(payload, list) and payload[0]["phi"] == "frob^0"
    assert {s["id"] for s in payload[0]["steps"]} == set(range(1, 9))
    json.dumps(payload)  # serializable


def test_replay_rejects_bad_levels():
    with pytest.raises(NoPrimitiveCubeRoot):
        replay_cohopf_skeleton(3)
    with pytest.raises(BoundExceeded):
        replay_cohopf_skeleton(6)
