"""Endomorphism families of the binary fields and of the determinant-one
matrix groups, and the step-by-step finite-level replay showing that every
member of the standard endomorphism family is an automorphism.

Field endomorphisms of GF(2^n) are exactly the n squaring powers
x -> x^(2^j); each is bijective, permutes the conjugate set of every
element, and permutes the set of maximal-order elements.

Group endomorphism specifications combine entrywise field endomorphisms,
inner conjugations, the inverse-transpose map, and compositions of these
(a composition applies its parts left to right).  The replay walks the
eight-step argument for each family member over an enumerated group:
fix an order-3 diagonal g, straighten the image of g by an inner map,
track the diagonal subgroup, the swap matrix, and the lower-unitriangular
set, choose the final twist, and conclude bijectivity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from . import closure, conway, finite_engine as fe, sl2_core as sl
from .closure import ClosureElt, cinv, corder, reduce_elt
from .errors import BoundExceeded, LevelMismatch, NoPrimitiveCubeRoot, PreconditionError, StepFailed
from .gf2_field import FieldElt, add, frobenius, frobenius_orbit, gen, mul, power
from .gf2_field import elements_of_max_order
from .sl2_core import SWAP, Mat2, SubsetName, mat_entry_masks, mat_to_json

FIELD_ENDO_MAX_LEVEL = 20
MAX_ORDER_SCAN_MAX_LEVEL = 16
_EXHAUSTIVE_HOM_LEVEL = 6
_EXHAUSTIVE_BIJECTION_LEVEL = 12


@dataclass(frozen=True)
class FieldEndo:
    """The field endomorphism x -> x^(2^frob_power) of GF(2^level)."""

    level: int
    frob_power: int

    def __post_init__(self):
        if not 0 <= self.frob_power < self.level:
            raise ValueError(f"frobenius power {self.frob_power} outside 0..{self.level - 1}")

    def apply(self, a: FieldElt) -> FieldElt:
        if a.level != self.level:
            raise LevelMismatch(f"endomorphism at level {self.level} applied to {a}")
        return power(a, 1 << self.frob_power)

    def __str__(self) -> str:
        return f"frob^{self.frob_power}"


def field_endos(n: int) -> list[FieldEndo]:
    """The n field endomorphisms of GF(2^n), each self-checked to be a
    bijective unital ring homomorphism (exhaustively at small levels,
    on a deterministic sample above them)."""
    if n > FIELD_ENDO_MAX_LEVEL:
        raise BoundExceeded(f"endomorphism family limited to levels <= {FIELD_ENDO_MAX_LEVEL}, got {n}")
    out = [FieldEndo(n, j) for j in range(n)]
    if n <= _EXHAUSTIVE_HOM_LEVEL:
        pool = [FieldElt(n, m) for m in range(1 << n)]
        pairs = [(x, y) for x in pool for y in pool]
    else:
        pool = [FieldElt(n, (0x9E3779B1 * k) % (1 << n)) for k in range(64)]
        pairs = list(zip(pool, pool[::-1]))
    for e in out:
        assert e.apply(FieldElt(n, 1)).is_one
        for x, y in pairs:
            assert e.apply(add(x, y)) == add(e.apply(x), e.apply(y))
            assert e.apply(mul(x, y)) == mul(e.apply(x), e.apply(y))
        if n <= _EXHAUSTIVE_BIJECTION_LEVEL:
            image = {e.apply(FieldElt(n, m)).mask for m in range(1 << n)}
            assert len(image) == 1 << n
        else:
            back = FieldEndo(n, (n - e.frob_power) % n)
            for x in pool:
                assert back.apply(e.apply(x)) == x
    return out


def endo_permutes_roots(e: FieldEndo, a: FieldElt) -> bool:
    """Does e map the conjugate set of a onto itself?"""
    if e.level != a.level:
        raise LevelMismatch(f"endomorphism level {e.level} differs from element level {a.level}")
    orbit = {x.mask for x in frobenius_orbit(a)}
    return {e.apply(FieldElt(a.level, m)).mask for m in orbit} == orbit


def endo_permutes_max_order(e: FieldEndo, n: int) -> bool:
    """Does e restrict to a permutation of the maximal-order elements?"""
    if n > MAX_ORDER_SCAN_MAX_LEVEL:
        raise BoundExceeded(f"max-order scan limited to levels <= {MAX_ORDER_SCAN_MAX_LEVEL}, got {n}")
    if e.level != n:
        raise LevelMismatch(f"endomorphism level {e.level} differs from requested level {n}")
    top = {x.mask for x in elements_of_max_order(n)}
    return {e.apply(FieldElt(n, m)).mask for m in top} == top


# ---------------------------------------------------------------------------
# group endomorphism specifications


@dataclass(frozen=True)
class Entrywise:
    endo: FieldEndo


@dataclass(frozen=True)
class InnerConj:
    mat: Mat2

    def __post_init__(self):
        if not sl.mdet(self.mat).is_one:
            raise PreconditionError(f"inner conjugator {self.mat} must have determinant one")


@dataclass(frozen=True)
class InvTranspose:
    pass


@dataclass(frozen=True)
class Compose:
    parts: tuple  # applied left to right

    def __post_init__(self):
        if not self.parts:
            raise ValueError("empty composition")


GroupEndoSpec = Union[Entrywise, InnerConj, InvTranspose, Compose]


def spec_str(spec: GroupEndoSpec) -> str:
    if isinstance(spec, Entrywise):
        return str(spec.endo)
    if isinstance(spec, InnerConj):
        return f"inner({spec.mat})"
    if isinstance(spec, InvTranspose):
        return "invtrans"
    if isinstance(spec, Compose):
        return "*".join(spec_str(p) for p in spec.parts)
    raise TypeError(spec)


def apply_group_endo(spec: GroupEndoSpec, M: Mat2) -> Mat2:
    """Apply a specification to one matrix.  Every specification is a
    group homomorphism; tests verify that property rather than assume it."""
    if isinstance(spec, Entrywise):
        out = []
        for x in M.entries():
            if spec.endo.level % x.level != 0:
                raise LevelMismatch(f"entry {x} does not live inside level {spec.endo.level}")
            t = x.elt
            for _ in range(spec.endo.frob_power):
                t = frobenius(t)
            out.append(ClosureElt(t))  # squaring preserves the minimal level
        return Mat2(*out)
    if isinstance(spec, InnerConj):
        return sl.conj(spec.mat, M)
    if isinstance(spec, InvTranspose):
        return sl.inv_transpose(M)
    if isinstance(spec, Compose):
        for part in spec.parts:
            M = apply_group_endo(part, M)
        return M
    raise TypeError(spec)


# ---------------------------------------------------------------------------
# vectorized application over an enumerated group


@lru_cache(maxsize=None)
def _frob_power_table(level: int, j: int) -> np.ndarray:
    q = 1 << level
    out = np.empty(q, dtype=np.int64)
    for m in range(q):
        out[m] = power(FieldElt(level, m), 1 << j).mask
    return out


def _apply_spec_rows(spec: GroupEndoSpec, G: fe.GroupTable, rows: np.ndarray) -> np.ndarray:
    if isinstance(spec, Entrywise):
        if spec.endo.level != G.level:
            raise LevelMismatch(f"endomorphism level {spec.endo.level} differs from table level {G.level}")
        tab = _frob_power_table(G.level, spec.endo.frob_power)
        return tab[rows]
    if isinstance(spec, InnerConj):
        w = np.array(mat_entry_masks(spec.mat, G.level), dtype=np.int64)
        winv = np.array(mat_entry_masks(sl.minv(spec.mat), G.level), dtype=np.int64)
        return fe._mul_rows(G.ops, fe._mul_rows(G.ops, w, rows), winv)
    if isinstance(spec, InvTranspose):
        return rows[..., [3, 2, 1, 0]]
    if isinstance(spec, Compose):
        for part in spec.parts:
            rows = _apply_spec_rows(part, G, rows)
        return rows
    raise TypeError(spec)


def apply_spec_to_table(spec: GroupEndoSpec, G: fe.GroupTable) -> np.ndarray:
    """Image index of every group element under the specification."""
    img = G.index_of_rows(_apply_spec_rows(spec, G, G.masks))
    # spot check against the scalar path
    for i in (0, 1, len(G) // 2):
        assert G.index_of(apply_group_endo(spec, G.mat(i))) == img[i]
    return img


# ---------------------------------------------------------------------------
# the replay


REPLAY_MAX_LEVEL = 4
_COMPOSE_DEPTH = 3


@dataclass
class ReplayStep:
    id: int
    status: str
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {"id": self.id, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class ReplayEntry:
    phi: str
    steps: list[ReplayStep]

    def to_json(self) -> dict:
        return {"phi": self.phi, "steps": [s.to_json() for s in self.steps]}


@dataclass
class ReplayReport:
    level: int
    entries: list[ReplayEntry]

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def replay_family(n: int) -> list[GroupEndoSpec]:
    """The deterministic endomorphism family: entrywise squaring powers,
    the inverse transpose, three fixed inner conjugations, and all
    compositions of those base maps up to depth 3."""
    g = closure.reduce_elt(gen(n))
    base: list[GroupEndoSpec] = [Entrywise(FieldEndo(n, j)) for j in range(n)]
    base.append(InvTranspose())
    base.append(InnerConj(SWAP))
    base.append(InnerConj(sl.diag_mat(g, cinv(g))))
    base.append(InnerConj(sl.upper_uni(closure.ONE)))
    specs: list[GroupEndoSpec] = list(base)
    for depth in range(2, _COMPOSE_DEPTH + 1):
        specs.extend(Compose(word) for word in itertools.product(base, repeat=depth))
    return specs


def _fail(step: int, msg: str, witness=None):
    raise StepFailed(step, msg, witness)


def replay_cohopf_skeleton(n: int) -> ReplayReport:
    """Run the eight-step argument for every family member over the
    level-n determinant-one group.  Raises StepFailed on any violation;
    a returned report therefore records only passes (with witnesses)."""
    if n > REPLAY_MAX_LEVEL:
        raise BoundExceeded(f"replay limited to levels <= {REPLAY_MAX_LEVEL}, got {n}")
    if n % 2:
        raise NoPrimitiveCubeRoot(f"level {n} is odd, so 3 does not divide 2^{n}-1")
    G = fe.enumerate_group(n, fe.KIND_SL2)
    q1 = (1 << n) - 1

    theta = reduce_elt(power(gen(n), q1 // 3))
    assert corder(theta) == 3
    g_mat = sl.diag_mat(theta, cinv(theta))
    g_idx = G.index_of(g_mat)
    swap_idx = G.index_of(SWAP)
    orders = G.element_orders()

    delta = fe.subset_indices(G, SubsetName.DIAG)
    delta_member = np.zeros(len(G), dtype=bool)
    delta_member[delta] = True
    dprime = fe.subset_indices(G, SubsetName.OFF_DIAG)
    dprime_member = np.zeros(len(G), dtype=bool)
    dprime_member[dprime] = True
    ut = fe.subset_indices(G, SubsetName.UPPER_UNI)
    lt = fe.subset_indices(G, SubsetName.LOWER_UNI)
    ut_member = np.zeros(len(G), dtype=bool)
    ut_member[ut] = True
    lt_member = np.zeros(len(G), dtype=bool)
    lt_member[lt] = True
    lower = fe.subset_indices(G, SubsetName.LOWER_TRI)
    invtrans_map = G.index_of_rows(G.masks[:, [3, 2, 1, 0]])

    entries = []
    for spec in replay_family(n):
        steps = []
        img = apply_spec_to_table(spec, G)

        # 1: the order-3 diagonal anchor exists at this level
        steps.append(ReplayStep(1, "pass", {"theta": str(theta), "g": mat_to_json(g_mat)}))

        # 2: the image of g keeps order 3 and stays in its conjugacy class
        ig = int(img[g_idx])
        if orders[ig] != 3:
            _fail(2, f"image of g has order {orders[ig]}", {"image": G.mat_json(ig)})
        if not sl.are_conjugate(G.mat(ig), g_mat):
            _fail(2, "image of g left the conjugacy class", {"image": G.mat_json(ig)})
        steps.append(ReplayStep(2, "pass", {"image_of_g": G.mat_json(ig)}))

        # 3: straighten with the first inner map sending the image back to g
        allx = np.arange(len(G))
        cand = np.flatnonzero(G.mul_vec(allx, np.int64(ig)) == G.mul_vec(np.int64(g_idx), allx))
        if len(cand) == 0:
            _fail(3, "no conjugator returns the image of g to g")
        alpha_idx = int(cand[0])
        conj_map = G.conj_vec(np.int64(alpha_idx), allx)
        aphi = conj_map[img]
        if int(aphi[g_idx]) != g_idx:
            _fail(3, "straightened map does not fix g")
        steps.append(ReplayStep(3, "pass", {"alpha": G.mat_json(alpha_idx)}))

        # 4: the straightened map restricts to a bijection of the diagonal
        dimg = aphi[delta]
        if not np.all(delta_member[dimg]):
            bad = int(delta[~delta_member[dimg]][0])
            _fail(4, "diagonal image left the diagonal", {"element": G.mat_json(bad)})
        if len(np.unique(dimg)) != len(delta) or not np.all(np.sort(dimg) == delta):
            _fail(4, "diagonal image is not the full diagonal")
        steps.append(ReplayStep(4, "pass", {"diagonal_size": int(len(delta))}))

        # 5: the swap matrix lands off-diagonal and stays in the image
        sw = int(aphi[swap_idx])
        if not dprime_member[sw]:
            _fail(5, "image of the swap matrix is not off-diagonal", {"image": G.mat_json(sw)})
        lam = sl.mat_from_masks(G.level, G.masks[sw]).b
        rebuilt = sl.mmul(sl.diag_mat(cinv(lam), lam), G.mat(sw))
        if rebuilt != SWAP:
            _fail(5, "off-diagonal image does not rebuild the swap matrix")
        if not np.any(aphi == swap_idx):
            _fail(5, "swap matrix is outside the image")
        steps.append(ReplayStep(5, "pass", {"image_of_swap": G.mat_json(sw), "lambda": str(lam)}))

        # 6: lower-unitriangular images pick exactly one unitriangular side
        lt_nontriv = lt[lt != 0]
        limg = aphi[lt_nontriv]
        if not np.all(ut_member[limg] | lt_member[limg]):
            bad = int(lt_nontriv[~(ut_member[limg] | lt_member[limg])][0])
            _fail(6, "a lower-unitriangular image is not unitriangular", {"element": G.mat_json(bad)})
        meets_lt = bool(np.any(lt_member[limg] & (limg != 0)))
        meets_ut = bool(np.any(ut_member[limg] & (limg != 0)))
        if meets_lt and meets_ut:
            _fail(6, "images meet both unitriangular sides")
        if not (meets_lt or meets_ut):
            _fail(6, "images vanished entirely")
        beta_is_invtrans = meets_ut
        steps.append(ReplayStep(6, "pass", {"beta": "invtrans" if beta_is_invtrans else "identity"}))

        # 7: after the twist, the lower-triangular set maps onto itself
        final = invtrans_map[aphi] if beta_is_invtrans else aphi
        lower_img = final[lower]
        if not np.array_equal(np.sort(lower_img), lower):
            _fail(7, "twisted map is not onto the lower-triangular set")
        steps.append(ReplayStep(7, "pass", {"lower_triangular_size": int(len(lower))}))

        # 8: the twisted map, hence the original, permutes the whole group
        if len(np.unique(final)) != len(G):
            _fail(8, "twisted map is not injective on the group")
        if len(np.unique(img)) != len(G):
            _fail(8, "original map is not injective on the group")
        steps.append(ReplayStep(8, "pass", {"group_order": int(len(G))}))

        entries.append(ReplayEntry(spec_str(spec), steps))
    return ReplayReport(n, entries)


conway.register_invalidation_hook(_frob_power_table.cache_clear)

__all__ = [
    "Compose",
    "Entrywise",
    "FieldEndo",
    "GroupEndoSpec",
    "InnerConj",
    "InvTranspose",
    "REPLAY_MAX_LEVEL",
    "ReplayEntry",
    "ReplayReport",
    "ReplayStep",
    "apply_group_endo",
    "apply_spec_to_table",
    "endo_permutes_max_order",
    "endo_permutes_roots",
    "field_endos",
    "replay_cohopf_skeleton",
    "replay_family",
    "spec_str",
]
