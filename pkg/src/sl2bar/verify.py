"""The machine-checkable verification suite.

Every check is a named, deterministic procedure with a level tag and a
gate (the smallest --max-level at which it runs); checks above the gate
are reported as skipped with a reason.  Randomized checks derive their
seed from the check name, so reruns are reproducible.  All comparisons
are exact; nothing in this suite (or its JSON) involves floating point.

Check names start with a criterion tag (c01..c14) so that --filter can
select whole criteria or arbitrary substrings, e.g. --filter prop3.
"""

from __future__ import annotations

import random
import time
import zlib
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import closure, conway, endo, finite_engine as fe, gf2_field, sl2_core as sl
from .closure import cinv, reduce_elt
from .errors import Sl2BarError
from .gf2_field import (
    FieldElt,
    add,
    artin_schreier_solve,
    elements_of_max_order,
    frobenius,
    mul,
    random_elt,
    trace_abs,
)
from .gf2poly import divisors, totient
from .sl2_core import SubsetName


class CheckFailure(Exception):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass
class CheckResult:
    name: str
    level: int
    status: str  # "pass" | "fail" | "skipped"
    witness: dict | None
    millis: int

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "level": self.level,
            "status": self.status,
            "witness": self.witness,
            "millis": self.millis,
        }


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks], "summary": self.summary}


@dataclass
class Check:
    name: str
    level: int
    gate: int  # minimum --max-level at which this check runs
    fn: Callable[[], dict | None]


def _seed(name: str) -> int:
    return zlib.crc32(name.encode())


def _sl2(n: int) -> fe.GroupTable:
    return fe.enumerate_group(n, fe.KIND_SL2)


def _need(cond: bool, msg: str, witness=None) -> None:
    if not cond:
        raise CheckFailure(msg, witness)


# ---------------------------------------------------------------------------
# criterion 1: group orders


def _check_orders(n: int, kind: str):
    G = fe.enumerate_group(n, kind)
    expect = fe.order_formula(n, kind)
    _need(len(G) == expect, f"enumerated {len(G)} elements, formula gives {expect}")
    _need(bool(np.array_equal(G.masks[0], [1, 0, 0, 1])), "element 0 is not the identity")
    return {"order": len(G)}


# ---------------------------------------------------------------------------
# criterion 2: commutation transitivity


def _check_ct_centralizers(n: int, kind: str, expect_holds: bool):
    G = fe.enumerate_group(n, kind)
    rep = fe.ct_check_centralizers(G)
    _need(rep.holds == expect_holds, f"centralizer route returned holds={rep.holds}", rep.to_json())
    return rep.to_json()


def _check_ct_triples_agree(n: int, kind: str):
    G = fe.enumerate_group(n, kind)
    a = fe.ct_check_centralizers(G)
    b = fe.ct_check_triples(G)
    _need(a.holds == b.holds, "triple scan disagrees with the centralizer route")
    return {"holds": a.holds, "triples_witness": b.to_json()["witness"]}


def _check_ct_maxab_agree(n: int, kind: str):
    G = fe.enumerate_group(n, kind)
    a = fe.ct_check_centralizers(G)
    b = fe.maximal_abelian_intersections(G)
    _need(a.holds == b, "maximal-abelian route disagrees with the centralizer route")
    return {"holds": b}


# ---------------------------------------------------------------------------
# criteria 3-6: centralizers, normalizers, and products of the named subsets


def _check_prop3(n: int):
    G = _sl2(n)
    q = 1 << n
    delta = fe.named_subgroup(G, SubsetName.DIAG)
    _, _, _, INV = G.ops
    for lam in range(2, q):
        row = np.array([[lam, 0, 0, int(INV[lam])]], dtype=np.int64)
        gi = int(G.index_of_rows(row)[0])
        cz = fe.centralizer_bf(G, gi)
        _need(cz == delta, f"centralizer of diag({lam:#x}) is not the diagonal subgroup")
    _need(delta.size == q - 1, f"diagonal subgroup has {delta.size} elements")
    dorders = G.element_orders()[delta.indices()]
    _need(int(dorders.max()) == q - 1, "diagonal subgroup is not cyclic of full order")
    return {"diagonal_order": q - 1}


def _check_prop4(n: int):
    G = _sl2(n)
    delta = fe.named_subgroup(G, SubsetName.DIAG)
    dprime = fe.subset_indices(G, SubsetName.OFF_DIAG)
    nd = fe.normalizer_bf(G, delta)
    union = np.sort(np.concatenate([delta.indices(), dprime]))
    _need(np.array_equal(nd.indices(), union), "normalizer of the diagonal is not its union with the off-diagonal set")
    _need(fe.is_metabelian(nd), "normalizer is not metabelian")
    gen_from_dprime = fe.subgroup_generated(G, dprime)
    _need(gen_from_dprime == nd, "off-diagonal set does not generate the normalizer")
    swap_grp = fe.subgroup_generated(G, [G.index_of(sl.SWAP)])
    _need(swap_grp.size == 2, "the swap matrix does not generate a 2-cycle")
    _need(fe.semidirect_check(G, delta, swap_grp), "semidirect decomposition failed")
    join = fe.subgroup_generated(G, np.concatenate([delta.indices(), swap_grp.indices()]))
    _need(join == nd, "diagonal and swap do not generate the normalizer")
    _need(nd.size == 2 * delta.size, f"index of the diagonal in its normalizer is {nd.size / delta.size}")
    return {"normalizer_order": nd.size}


def _check_prop56(n: int):
    G = _sl2(n)
    q = 1 << n
    ut = fe.named_subgroup(G, SubsetName.UPPER_UNI)
    lt = fe.named_subgroup(G, SubsetName.LOWER_UNI)
    upper = fe.named_subgroup(G, SubsetName.UPPER_TRI)
    lower = fe.named_subgroup(G, SubsetName.LOWER_TRI)
    delta = fe.named_subgroup(G, SubsetName.DIAG)
    for lam in range(1, q):
        ui = int(G.index_of_rows(np.array([[1, lam, 0, 1]], dtype=np.int64))[0])
        _need(fe.centralizer_bf(G, ui) == ut, f"centralizer of [[1,{lam:#x}],[0,1]] is not the upper unitriangulars")
        li = int(G.index_of_rows(np.array([[1, 0, lam, 1]], dtype=np.int64))[0])
        _need(fe.centralizer_bf(G, li) == lt, f"centralizer of [[1,0],[{lam:#x},1]] is not the lower unitriangulars")
    _need(fe.normalizer_bf(G, ut) == upper, "normalizer of the upper unitriangulars is not the upper triangulars")
    _need(fe.normalizer_bf(G, lt) == lower, "normalizer of the lower unitriangulars is not the lower triangulars")
    for tri, uni, label in ((upper, ut, "upper"), (lower, lt, "lower")):
        _need(fe.is_metabelian(tri), f"{label} triangulars are not metabelian")
        _need(fe.semidirect_check(G, uni, delta), f"{label} semidirect decomposition failed")
        join = fe.subgroup_generated(G, np.concatenate([uni.indices(), delta.indices()]))
        _need(join == tri, f"{label} unitriangulars and diagonal do not generate the {label} triangulars")
    _need(ut.size == q and fe.is_abelian(ut), "upper unitriangulars are not elementary abelian of the field size")
    orders = G.element_orders()
    _need(np.all(orders[ut.indices()[1:]] == 2), "a nontrivial upper unitriangular has order other than 2")
    invol_in_u = upper.indices()[orders[upper.indices()] == 2]
    _need(np.array_equal(invol_in_u, ut.indices()[1:]), "involutions of the upper triangulars differ from the nontrivial unitriangulars")
    return {"unitriangular_order": q}


def _check_prop7(n: int):
    G = _sl2(n)
    _need(fe.ut_lt_disjointness(G), "unitriangular sides intersect or commute nontrivially")
    return None


# ---------------------------------------------------------------------------
# criterion 7: order dichotomy and the trace criterion


def _check_dichotomy(n: int):
    G = _sl2(n)
    orders = G.element_orders()
    traces = G.masks[:, 0] ^ G.masks[:, 3]
    for i in range(len(G)):
        d = int(orders[i])
        _need(d == 1 or d == 2 or d % 2 == 1, f"element {G.literal(i)} has even order {d} > 2")
        _need((d == 2) == (traces[i] == 0 and i != 0), f"trace criterion fails at {G.literal(i)}")
        k = sl.classify_jordan(G.mat(i))
        if k.kind == "identity":
            expect = 1
        elif k.kind == "unipotent":
            expect = 2
        else:
            expect = closure.corder(k.lam)
        _need(expect == d, f"class-based order {expect} disagrees with iterated order {d} at {G.literal(i)}")
    return {"elements": len(G)}


# ---------------------------------------------------------------------------
# criterion 8: the two closed-form conjugation identities


def _check_eq1_eq2(total: int = 10_000):
    rng = random.Random(_seed("c08-eq1-eq2/random"))
    levels = [1, 2, 3, 4, 5, 6]
    for n in levels:
        gf2_field.ensure_log_table(n)
    for k in range(total // 2):
        n = levels[k % len(levels)]
        lam = reduce_elt(random_elt(rng, n, nonzero=True))
        M = sl.random_sl2_mat(rng, n)
        s, t, u, v = M.entries()
        got1 = sl.conjugate_eq1(lam, s, t, u, v)
        want1 = sl.conj(M, sl.diag_mat(lam, cinv(lam)))
        _need(got1 == want1, f"identity (1) fails for lam={lam}, M={M}")
        got2 = sl.conjugate_eq2(lam, s, t, u, v)
        want2 = sl.conj(M, sl.upper_uni(lam))
        _need(got2 == want2, f"identity (2) fails for lam={lam}, M={M}")
    return {"tuples": total}


# ---------------------------------------------------------------------------
# criterion 9: generation


def _check_generation(n: int, which: str):
    G = _sl2(n)
    if which == "involutions":
        gens = np.flatnonzero(G.element_orders() == 2)
    elif which == "swap-lower":
        lt = fe.subset_indices(G, SubsetName.LOWER_UNI)
        gens = np.concatenate([[G.index_of(sl.SWAP)], lt])
    elif which == "ndelta-lower":
        nd = fe.normalizer_bf(G, fe.named_subgroup(G, SubsetName.DIAG))
        lower = fe.subset_indices(G, SubsetName.LOWER_TRI)
        gens = np.concatenate([nd.indices(), lower])
    else:
        raise ValueError(which)
    got = fe.subgroup_generated(G, gens).size
    _need(got == len(G), f"generated subgroup has {got} of {len(G)} elements")
    return {"generators": int(len(np.unique(gens)))}


def _check_diag_two_involutions(samples: int = 100):
    rng = random.Random(_seed("c09-generation/diag-two-involutions"))
    for k in range(samples):
        n = 1 + k % 4
        lam = reduce_elt(random_elt(rng, n, nonzero=True))
        left, right = sl.diag_as_two_involutions(lam)
        _need(sl.mmul(left, right) == sl.diag_mat(lam, cinv(lam)), f"factor product fails for {lam}")
        _need(sl.morder(left) == 2 and sl.morder(right) == 2, f"factors of {lam} are not involutions")
    return {"samples": samples}


def _check_unipotent_order3():
    G = _sl2(2)
    a, b = fe.unipotent_as_order3_product(G)
    orders = G.element_orders()
    target = int(G.index_of(sl.upper_uni(closure.ONE)))
    _need(orders[a] == 3 and orders[b] == 3 and G.mul_index(a, b) == target, "factorization invalid")
    _need(int((orders == 3).sum()) == 20, "count of order-3 elements is not 20")
    return {"a": G.literal(a), "b": G.literal(b)}


# ---------------------------------------------------------------------------
# criterion 10: the projective action and simplicity


def _check_projective(n: int):
    G = _sl2(n)
    pa = fe.projective_action(G)
    _need(pa.is_faithful(), "projective action has a nontrivial kernel")
    _need(pa.image_order() == len(G), f"image order {pa.image_order()} differs from group order")
    if n == 2:
        _need(pa.all_even(), "a permutation image is odd")
        ui = G.index_of(sl.upper_uni(closure.ONE))
        _need(pa.perm_order(ui) == 2, "the unipotent image is not a product of disjoint transpositions")
    return {"points": pa.n_points, "image_order": pa.image_order()}


def _check_simple(n: int, expect: bool):
    G = _sl2(n)
    got = fe.is_simple(G)
    _need(got == expect, f"simplicity scan returned {got}")
    return {"simple": got}


# ---------------------------------------------------------------------------
# criterion 11: field endomorphisms at finite level


def _check_field_endos(n: int):
    gf2_field.ensure_log_table(n)  # makes the squaring-orbit scans cheap
    endos = endo.field_endos(n)  # self-checks bijectivity (exhaustive for n <= 12)
    _need(len(endos) == n, f"expected {n} endomorphisms")
    for e in endos:
        for mask in range(1 << n):
            a = FieldElt(n, mask)
            _need(endo.endo_permutes_roots(e, a), f"{e} does not permute the conjugates of {a}")
    return {"endos": n, "elements": 1 << n}


def _check_max_order(n: int):
    top = elements_of_max_order(n)
    _need(len(top) == totient((1 << n) - 1), f"count {len(top)} differs from the totient")
    for e in endo.field_endos(n):
        _need(endo.endo_permutes_max_order(e, n), f"{e} does not permute the maximal-order elements")
    return {"count": len(top)}


# ---------------------------------------------------------------------------
# criterion 12: the replay


def _check_replay(n: int):
    report = endo.replay_cohopf_skeleton(n)  # raises StepFailed on any violation
    for entry in report.entries:
        _need(len(entry.steps) == 8 and all(s.status == "pass" for s in entry.steps), f"entry {entry.phi} incomplete")
    return {"family_size": len(report.entries)}


# ---------------------------------------------------------------------------
# criterion 13: the modulus table and its embeddings


def _check_conway_table():
    table = conway.get_active()
    _need(table.max_level >= conway.N_MAX, f"table stops at level {table.max_level}")
    conway.validate_table(table)
    for n in range(1, conway.N_MAX + 1):
        for m in divisors(n):
            _need(conway.norm_compatible(table, m, n), f"levels {m} | {n} are not norm compatible")
    return {"levels": conway.N_MAX}


def _check_embedding_hom(n: int):
    for m in divisors(n):
        if m == n:
            continue
        lifted = [closure.lift(FieldElt(m, x), n) for x in range(1 << m)]
        _need(len({e.mask for e in lifted}) == 1 << m, f"embedding {m}->{n} is not injective")
        _need(lifted[0].is_zero and lifted[1].is_one, f"embedding {m}->{n} moves 0 or 1")
        for x in range(1 << m):
            for y in range(1 << m):
                ex, ey = FieldElt(m, x), FieldElt(m, y)
                _need(closure.lift(add(ex, ey), n) == add(lifted[x], lifted[y]), f"additivity fails {m}->{n}")
                _need(closure.lift(mul(ex, ey), n) == mul(lifted[x], lifted[y]), f"multiplicativity fails {m}->{n}")
    return {"pairs": len(divisors(n)) - 1}


# ---------------------------------------------------------------------------
# criterion 14: the quadratic substitute


def _check_artin_schreier(n: int):
    unsolved = 0
    for mask in range(1 << n):
        c = FieldElt(n, mask)
        z = artin_schreier_solve(c)
        brute = [m for m in range(1 << n) if (lambda e: add(frobenius(e), e) == c)(FieldElt(n, m))]
        if z is None:
            _need(brute == [], f"solver missed solutions {brute} for {c}")
            _need(not trace_abs(c).is_zero, f"no solution although the trace of {c} vanishes")
            lifted = closure.lift(c, 2 * n)
            z2 = artin_schreier_solve(lifted)
            _need(z2 is not None, f"doubled level has no solution for {c}")
            _need(add(frobenius(z2), z2) == lifted, f"doubled-level solution invalid for {c}")
            unsolved += 1
        else:
            _need(add(frobenius(z), z) == c, f"claimed solution invalid for {c}")
            _need(trace_abs(c).is_zero, f"solution exists although the trace of {c} is one")
            _need(sorted(brute) == sorted([z.mask, z.mask ^ 1]), f"solution set is not a pair for {c}")
    _need(unsolved == (1 << n) // 2, f"{unsolved} unsolvable right-hand sides, expected half")
    return {"unsolvable": unsolved}


# ---------------------------------------------------------------------------
# the registry


def build_checks() -> list[Check]:
    checks: list[Check] = []

    def addc(name: str, level: int, gate: int, fn: Callable[[], dict | None]) -> None:
        checks.append(Check(name, level, gate, fn))

    for n in range(1, 6):
        addc(f"c01-orders/sl2/n{n}", n, max(2, n), lambda n=n: _check_orders(n, fe.KIND_SL2))
    for n in range(1, 4):
        addc(f"c01-orders/gl2/n{n}", n, max(2, n), lambda n=n: _check_orders(n, fe.KIND_GL2))

    for n in (2, 3, 4):
        addc(f"c02-ct/centralizers/sl2/n{n}", n, n, lambda n=n: _check_ct_centralizers(n, fe.KIND_SL2, True))
    addc("c02-ct/centralizers/gl2/n2", 2, 2, lambda: _check_ct_centralizers(2, fe.KIND_GL2, False))
    addc("c02-ct/triples-agree/sl2/n1", 1, 2, lambda: _check_ct_triples_agree(1, fe.KIND_SL2))
    addc("c02-ct/triples-agree/sl2/n2", 2, 2, lambda: _check_ct_triples_agree(2, fe.KIND_SL2))
    addc("c02-ct/triples-agree/sl2/n3", 3, 3, lambda: _check_ct_triples_agree(3, fe.KIND_SL2))
    addc("c02-ct/triples-agree/gl2/n2", 2, 2, lambda: _check_ct_triples_agree(2, fe.KIND_GL2))
    addc("c02-ct/maxab-agree/sl2/n1", 1, 2, lambda: _check_ct_maxab_agree(1, fe.KIND_SL2))
    addc("c02-ct/maxab-agree/sl2/n2", 2, 2, lambda: _check_ct_maxab_agree(2, fe.KIND_SL2))
    addc("c02-ct/maxab-agree/sl2/n3", 3, 3, lambda: _check_ct_maxab_agree(3, fe.KIND_SL2))
    addc("c02-ct/maxab-agree/gl2/n2", 2, 2, lambda: _check_ct_maxab_agree(2, fe.KIND_GL2))

    for n in (2, 3, 4):
        addc(f"c03-prop3/diag-centralizer/n{n}", n, n, lambda n=n: _check_prop3(n))
        addc(f"c04-prop4/diag-normalizer/n{n}", n, n, lambda n=n: _check_prop4(n))
        addc(f"c05-prop5-6/triangular/n{n}", n, n, lambda n=n: _check_prop56(n))
    for n in (1, 2, 3, 4):
        addc(f"c06-prop7/ut-lt-disjoint/n{n}", n, max(2, n), lambda n=n: _check_prop7(n))
        addc(f"c07-dichotomy/orders/n{n}", n, max(2, n), lambda n=n: _check_dichotomy(n))

    addc("c08-eq1-eq2/random", 6, 2, _check_eq1_eq2)

    for n in (2, 3, 4):
        addc(f"c09-generation/involutions/n{n}", n, n, lambda n=n: _check_generation(n, "involutions"))
        addc(f"c09-generation/swap-lower/n{n}", n, n, lambda n=n: _check_generation(n, "swap-lower"))
        addc(f"c09-generation/ndelta-lower/n{n}", n, n, lambda n=n: _check_generation(n, "ndelta-lower"))
    addc("c09-generation/diag-two-involutions", 4, 2, _check_diag_two_involutions)
    addc("c09-generation/unipotent-order3/n2", 2, 2, _check_unipotent_order3)

    addc("c10-a5-simple/projective/n1", 1, 2, lambda: _check_projective(1))
    addc("c10-a5-simple/projective/n2", 2, 2, lambda: _check_projective(2))
    addc("c10-a5-simple/simple/n1", 1, 2, lambda: _check_simple(1, False))
    addc("c10-a5-simple/simple/n2", 2, 2, lambda: _check_simple(2, True))
    addc("c10-a5-simple/simple/n3", 3, 3, lambda: _check_simple(3, True))

    for n in range(1, 13):
        gate = 2 if n <= 8 else 4
        addc(f"c11-field-cohopf/endos/n{n}", n, gate, lambda n=n: _check_field_endos(n))
    for n in range(1, 17):
        gate = 2 if n <= 8 else (4 if n <= 12 else 5)
        addc(f"c11-field-cohopf/max-order/n{n}", n, gate, lambda n=n: _check_max_order(n))

    addc("c12-replay/n2", 2, 2, lambda: _check_replay(2))
    addc("c12-replay/n4", 4, 4, lambda: _check_replay(4))

    addc("c13-conway/validity", conway.N_MAX, 2, _check_conway_table)
    for n in range(2, 9):
        addc(f"c13-conway/embedding-hom/n{n}", n, 2, lambda n=n: _check_embedding_hom(n))

    for n in range(1, 9):
        addc(f"c14-artin-schreier/n{n}", n, 2, lambda n=n: _check_artin_schreier(n))

    return checks


def run_suite(max_level: int = 3, name_filter: str | None = None) -> VerifyReport:
    """Run the registered checks gated by max_level, in declaration order.

    A filter keeps only checks whose name contains the given substring.
    """
    report = VerifyReport()
    for check in build_checks():
        if name_filter is not None and name_filter not in check.name:
            continue
        if check.gate > max_level:
            report.checks.append(
                CheckResult(check.name, check.level, "skipped", {"reason": f"requires --max-level >= {check.gate}"}, 0)
            )
            continue
        t0 = time.perf_counter()
        try:
            witness = check.fn()
            status = "pass"
        except CheckFailure as exc:
            status = "fail"
            witness = {"error": str(exc)}
            if exc.witness is not None:
                witness["witness"] = exc.witness
        except Sl2BarError as exc:
            status = "fail"
            witness = {"error": f"{type(exc).__name__}: {exc}"}
        millis = int((time.perf_counter() - t0) * 1000)
        report.checks.append(CheckResult(check.name, check.level, status, witness, millis))
    return report


__all__ = [
    "Check",
    "CheckFailure",
    "CheckResult",
    "VerifyReport",
    "build_checks",
    "run_suite",
]
