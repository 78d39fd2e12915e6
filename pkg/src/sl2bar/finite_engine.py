"""Exhaustive enumeration of the determinant-one and invertible 2x2
matrix groups over small binary fields, with brute-force structure
queries: centralizers, normalizers, commutation-transitivity reports,
subgroup generation, simplicity, the projective-line action, and
semidirect product checks.

Elements are stored as rows of entry masks in a numpy array; element 0 is
always the identity and the remaining rows are sorted by packed code, so
"lowest index" witnesses are deterministic.  A dense multiplication table
is built lazily and only for groups of at most CAYLEY_MAX elements; larger
groups multiply through mask arithmetic plus a packed-code lookup.

Tables are immutable once built (the lazy caches are idempotent), and all
query functions are pure, so concurrent readers are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import conway
from .errors import BoundExceeded, PreconditionError, SearchFailed
from .gf2_field import FieldElt, inv as finv, mul as fmul
from .sl2_core import Mat2, SubsetName, mat_entry_masks, mat_from_masks, mat_to_json

KIND_SL2 = "sl2"
KIND_GL2 = "gl2"

SL2_MAX_LEVEL = 5
GL2_MAX_LEVEL = 3
CAYLEY_MAX = 5000
TRIPLES_MAX = 600
SIMPLE_MAX = 5000
MAXAB_MAX = 5000


def order_formula(level: int, kind: str) -> int:
    q = 1 << level
    if kind == KIND_SL2:
        return q * (q * q - 1)
    if kind == KIND_GL2:
        return (q * q - 1) * (q * q - q)
    raise ValueError(kind)


@lru_cache(maxsize=None)
def field_ops(level: int):
    """Per-level numpy multiplication and inverse tables."""
    q = 1 << level
    MUL = np.zeros((q, q), dtype=np.int64)
    for x in range(q):
        ex = FieldElt(level, x)
        for y in range(x, q):
            m = fmul(ex, FieldElt(level, y)).mask
            MUL[x, y] = m
            MUL[y, x] = m
    INV = np.zeros(q, dtype=np.int64)
    for x in range(1, q):
        INV[x] = finv(FieldElt(level, x)).mask
    return level, q, MUL, INV


def _mul_rows(ops, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Matrix product of mask rows; x and y broadcast over (..., 4)."""
    _, _, MUL, _ = ops
    a1, b1, c1, d1 = (x[..., i] for i in range(4))
    a2, b2, c2, d2 = (y[..., i] for i in range(4))
    return np.stack(
        [
            MUL[a1, a2] ^ MUL[b1, c2],
            MUL[a1, b2] ^ MUL[b1, d2],
            MUL[c1, a2] ^ MUL[d1, c2],
            MUL[c1, b2] ^ MUL[d1, d2],
        ],
        axis=-1,
    )


def _det_rows(ops, x: np.ndarray) -> np.ndarray:
    _, _, MUL, _ = ops
    return MUL[x[..., 0], x[..., 3]] ^ MUL[x[..., 1], x[..., 2]]


def _inv_rows(ops, x: np.ndarray) -> np.ndarray:
    _, _, MUL, INV = ops
    adj = x[..., [3, 1, 2, 0]]
    det = _det_rows(ops, x)
    di = INV[det]
    return np.stack([MUL[di, adj[..., i]] for i in range(4)], axis=-1)


class GroupTable:
    """An exhaustively enumerated matrix group at one fixed level."""

    def __init__(self, level: int, kind: str, masks: np.ndarray):
        self.level = level
        self.kind = kind
        self.ops = field_ops(level)
        q = self.ops[1]
        self.masks = masks
        self.codes = self._pack(masks)
        lookup = np.full(q**4, -1, dtype=np.int64)
        lookup[self.codes] = np.arange(len(masks))
        self._lookup = lookup
        self.inv_masks = _inv_rows(self.ops, masks)
        self.inv_index = lookup[self._pack(self.inv_masks)]
        self._cayley: np.ndarray | None = None
        self._orders: np.ndarray | None = None

    # -- basic accessors ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.masks)

    @property
    def order(self) -> int:
        return len(self.masks)

    def _pack(self, rows: np.ndarray) -> np.ndarray:
        q = self.ops[1]
        return ((rows[..., 0] * q + rows[..., 1]) * q + rows[..., 2]) * q + rows[..., 3]

    def index_of_rows(self, rows: np.ndarray) -> np.ndarray:
        idx = self._lookup[self._pack(rows)]
        if np.any(idx < 0):
            raise ValueError("matrix is not a member of the group")
        return idx

    def index_of(self, M: Mat2) -> int:
        row = np.array(mat_entry_masks(M, self.level), dtype=np.int64)
        return int(self.index_of_rows(row[None, :])[0])

    def mat(self, i: int) -> Mat2:
        return mat_from_masks(self.level, self.masks[i])

    def mats(self):
        return (self.mat(i) for i in range(len(self)))

    def literal(self, i: int) -> str:
        return str(self.mat(i))

    def mat_json(self, i: int) -> list[str]:
        return mat_to_json(self.mat(i))

    # -- multiplication -----------------------------------------------------

    def ensure_cayley(self) -> np.ndarray:
        if self._cayley is None:
            n = len(self)
            if n > CAYLEY_MAX:
                raise BoundExceeded(f"dense table limited to {CAYLEY_MAX} elements, group has {n}")
            out = np.empty((n, n), dtype=np.int32)
            step = max(1, (1 << 22) // max(n, 1))
            for lo in range(0, n, step):
                hi = min(n, lo + step)
                prod = _mul_rows(self.ops, self.masks[lo:hi, None, :], self.masks[None, :, :])
                out[lo:hi] = self._lookup[self._pack(prod)]
            self._cayley = out
        return self._cayley

    def mul_vec(self, i, j) -> np.ndarray:
        """Indexwise product; i and j broadcast together."""
        if self._cayley is not None:
            return self._cayley[i, j]
        prod = _mul_rows(self.ops, self.masks[i], self.masks[j])
        return self._lookup[self._pack(prod)]

    def mul_index(self, i: int, j: int) -> int:
        return int(self.mul_vec(np.int64(i), np.int64(j)))

    def conj_vec(self, i, j) -> np.ndarray:
        """Index of element i * j * i^(-1), broadcasting."""
        left = _mul_rows(self.ops, self.masks[i], self.masks[j])
        prod = _mul_rows(self.ops, left, self.inv_masks[i])
        return self._lookup[self._pack(prod)]

    def commutes_with(self, g: int) -> np.ndarray:
        """Boolean vector: which elements commute with element g."""
        row = self.masks[g][None, :]
        left = _mul_rows(self.ops, self.masks, row)
        right = _mul_rows(self.ops, row, self.masks)
        return np.all(left == right, axis=-1)

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            n = len(self)
            orders = np.zeros(n, dtype=np.int64)
            orders[0] = 1
            cur = np.arange(n)
            k = 1
            while np.any(orders == 0):
                k += 1
                if k > n + 1:
                    raise AssertionError("order scan ran past the group order")
                live = orders == 0
                cur[live] = self.mul_vec(cur[live], np.flatnonzero(live))
                done = live & (cur == 0)
                orders[done] = k
            self._orders = orders
        return self._orders


@lru_cache(maxsize=None)
def enumerate_group(level: int, kind: str = KIND_SL2) -> GroupTable:
    """All matrices at the given level with determinant one (sl2) or any
    nonzero determinant (gl2).  Identity first, then ascending by code."""
    if kind == KIND_SL2:
        if not 1 <= level <= SL2_MAX_LEVEL:
            raise BoundExceeded(f"sl2 enumeration limited to levels 1..{SL2_MAX_LEVEL}, got {level}")
    elif kind == KIND_GL2:
        if not 1 <= level <= GL2_MAX_LEVEL:
            raise BoundExceeded(f"gl2 enumeration limited to levels 1..{GL2_MAX_LEVEL}, got {level}")
    else:
        raise ValueError(f"unknown group kind {kind!r}")
    ops = field_ops(level)
    _, q, MUL, INV = ops
    if kind == KIND_GL2:
        grid = np.indices((q, q, q, q), dtype=np.int64).reshape(4, -1).T
        rows = grid[_det_rows(ops, grid) != 0]
    else:
        a, b, c = (x.ravel() for x in np.indices((q, q, q), dtype=np.int64))
        nz = a != 0
        an, bn, cn = a[nz], b[nz], c[nz]
        dn = MUL[INV[an], 1 ^ MUL[bn, cn]]  # d = (1 + bc) / a
        part1 = np.stack([an, bn, cn, dn], axis=-1)
        bz = np.arange(1, q, dtype=np.int64)
        b0, d0 = np.meshgrid(bz, np.arange(q, dtype=np.int64), indexing="ij")
        b0, d0 = b0.ravel(), d0.ravel()
        part0 = np.stack([np.zeros_like(b0), b0, INV[b0], d0], axis=-1)
        rows = np.concatenate([part1, part0])
    codes = ((rows[:, 0] * q + rows[:, 1]) * q + rows[:, 2]) * q + rows[:, 3]
    rows = rows[np.argsort(codes)]
    ident = np.array([1, 0, 0, 1], dtype=np.int64)
    pos = int(np.flatnonzero(np.all(rows == ident, axis=1))[0])
    rows = np.concatenate([rows[pos : pos + 1], rows[:pos], rows[pos + 1 :]])
    table = GroupTable(level, kind, rows)
    assert len(table) == order_formula(level, kind)
    return table


# ---------------------------------------------------------------------------
# subgroups


@dataclass
class SubgroupRef:
    """A subgroup of a parent table, held as a boolean membership vector."""

    parent: GroupTable
    member: np.ndarray

    @property
    def size(self) -> int:
        return int(self.member.sum())

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.member)

    def __contains__(self, i: int) -> bool:
        return bool(self.member[i])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubgroupRef)
            and self.parent is other.parent
            and bool(np.array_equal(self.member, other.member))
        )

    def validate(self) -> None:
        """Check closure under product and inverse, and that 1 is present."""
        G = self.parent
        idx = self.indices()
        assert 0 in self, "subgroup must contain the identity"
        assert np.all(self.member[G.inv_index[idx]]), "subgroup not closed under inverse"
        prods = G.mul_vec(idx[:, None], idx[None, :])
        assert np.all(self.member[prods]), "subgroup not closed under product"

    def to_index_json(self) -> list[int]:
        return [int(i) for i in self.indices()]

    def to_matrix_json(self) -> list[list[str]]:
        return [self.parent.mat_json(int(i)) for i in self.indices()]


def subgroup_from_indices(G: GroupTable, idxs) -> SubgroupRef:
    member = np.zeros(len(G), dtype=bool)
    member[np.asarray(list(idxs), dtype=np.int64)] = True
    return SubgroupRef(G, member)


def whole_group(G: GroupTable) -> SubgroupRef:
    return SubgroupRef(G, np.ones(len(G), dtype=bool))


def trivial_subgroup(G: GroupTable) -> SubgroupRef:
    return subgroup_from_indices(G, [0])


def subset_indices(G: GroupTable, name: SubsetName) -> np.ndarray:
    """Indices of the named shape subset, ascending."""
    a, b, c, d = (G.masks[:, i] for i in range(4))
    if name is SubsetName.DIAG:
        keep = (b == 0) & (c == 0)
    elif name is SubsetName.OFF_DIAG:
        keep = (a == 0) & (d == 0)
    elif name is SubsetName.UPPER_TRI:
        keep = c == 0
    elif name is SubsetName.UPPER_UNI:
        keep = (c == 0) & (a == 1) & (d == 1)
    elif name is SubsetName.LOWER_TRI:
        keep = b == 0
    elif name is SubsetName.LOWER_UNI:
        keep = (b == 0) & (a == 1) & (d == 1)
    else:
        raise ValueError(name)
    return np.flatnonzero(keep)


def named_subgroup(G: GroupTable, name: SubsetName) -> SubgroupRef:
    if name is SubsetName.OFF_DIAG:
        raise PreconditionError("the off-diagonal set is not a subgroup")
    return subgroup_from_indices(G, subset_indices(G, name))


def centralizer_bf(G: GroupTable, g) -> SubgroupRef:
    """Brute-force centralizer of an element (index or Mat2)."""
    gi = g if isinstance(g, (int, np.integer)) else G.index_of(g)
    return SubgroupRef(G, G.commutes_with(int(gi)))


def normalizer_bf(G: GroupTable, H: SubgroupRef) -> SubgroupRef:
    """Brute-force normalizer: all x with x H x^(-1) = H."""
    idx = H.indices()
    keep = np.ones(len(G), dtype=bool)
    allx = np.arange(len(G))
    for h in idx:
        conj = G.conj_vec(allx, np.int64(h))
        keep &= H.member[conj]
    return SubgroupRef(G, keep)


def is_abelian(H: SubgroupRef) -> bool:
    G = H.parent
    idx = H.indices()
    sub = G.masks[idx]
    prods = _mul_rows(G.ops, sub[:, None, :], sub[None, :, :])
    return bool(np.all(prods == prods.swapaxes(0, 1)))


def derived_subgroup(H: SubgroupRef) -> SubgroupRef:
    """Subgroup generated by all commutators x y x^(-1) y^(-1) of H."""
    G = H.parent
    idx = H.indices()
    xy = G.mul_vec(idx[:, None], idx[None, :])
    yx = G.mul_vec(idx[None, :], idx[:, None])
    comm = G.mul_vec(xy, G.inv_index[yx])
    return subgroup_generated(G, np.unique(comm))


def is_metabelian(H: SubgroupRef) -> bool:
    return is_abelian(derived_subgroup(H))


def subgroup_generated(G: GroupTable, gens) -> SubgroupRef:
    """Closure of a generating set under products (breadth-first)."""
    if isinstance(gens, SubgroupRef):
        gens = gens.indices()
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    member = np.zeros(len(G), dtype=bool)
    member[0] = True
    frontier = gens[~member[gens]]
    member[gens] = True
    while len(frontier):
        prods = np.unique(G.mul_vec(frontier[:, None], gens[None, :]))
        frontier = prods[~member[prods]]
        member[frontier] = True
    return SubgroupRef(G, member)


# ---------------------------------------------------------------------------
# commutation transitivity


@dataclass
class CtReport:
    """Result of a commutation-transitivity check.

    When the property fails, `witness` is a triple of element indices
    (x, y, z) with y != 1, xy = yx, yz = zy but xz != zx.
    """

    group: GroupTable
    holds: bool
    witness: tuple[int, int, int] | None = None

    def __post_init__(self):
        assert self.holds == (self.witness is None)
        if self.witness is not None:
            G = self.group
            x, y, z = self.witness
            assert y != 0
            assert G.mul_index(x, y) == G.mul_index(y, x)
            assert G.mul_index(y, z) == G.mul_index(z, y)
            assert G.mul_index(x, z) != G.mul_index(z, x)

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "witness": None if self.witness is None else [self.group.mat_json(i) for i in self.witness],
        }

    def witness_literals(self) -> list[str] | None:
        if self.witness is None:
            return None
        return [self.group.literal(i) for i in self.witness]


def ct_check_centralizers(G: GroupTable) -> CtReport:
    """Commutation transitivity via centralizers: holds iff the
    centralizer of every nontrivial element is abelian.  On failure the
    witness is rebuilt from the first nonabelian centralizer."""
    for g in range(1, len(G)):
        cz = np.flatnonzero(G.commutes_with(g))
        sub = G.masks[cz]
        prods = _mul_rows(G.ops, sub[:, None, :], sub[None, :, :])
        same = np.all(prods == prods.swapaxes(0, 1), axis=-1)
        if not same.all():
            i, j = np.argwhere(~same)[0]
            return CtReport(G, False, (int(cz[i]), g, int(cz[j])))
    return CtReport(G, True)


def ct_check_triples(G: GroupTable) -> CtReport:
    """Direct cubic evaluation of the transitivity sentence over all
    triples; limited to groups of at most TRIPLES_MAX elements."""
    n = len(G)
    if n > TRIPLES_MAX:
        raise BoundExceeded(f"triple scan limited to {TRIPLES_MAX} elements, group has {n}")
    comm = np.zeros((n, n), dtype=bool)
    for g in range(n):
        comm[g] = G.commutes_with(g)
    for x in range(n):
        ys = np.flatnonzero(comm[x])
        for y in ys:
            if y == 0:
                continue
            bad = comm[y] & ~comm[x]
            if bad.any():
                z = int(np.flatnonzero(bad)[0])
                return CtReport(G, False, (x, int(y), z))
    return CtReport(G, True)


def maximal_abelian_subgroups(G: GroupTable) -> list[SubgroupRef]:
    """Maximal abelian subgroups, computed as the maximal members among
    the abelian centralizers of nontrivial elements.  Maximality is
    verified directly: no outside element may commute with everything."""
    n = len(G)
    comm = np.zeros((n, n), dtype=bool)
    for g in range(n):
        comm[g] = G.commutes_with(g)
    seen: dict[bytes, np.ndarray] = {}
    for g in range(1, n):
        cz = comm[g]
        idx = np.flatnonzero(cz)
        if np.all(comm[np.ix_(idx, idx)]):
            seen.setdefault(cz.tobytes(), cz)
    cands = list(seen.values())
    out = []
    for cz in cands:
        if any(other is not cz and np.all(cz <= other) for other in cands):
            continue
        commutes_with_all = np.all(comm[np.flatnonzero(cz)], axis=0)
        assert np.array_equal(commutes_with_all, cz), "centralizer candidate not maximal"
        out.append(SubgroupRef(G, cz))
    covered = np.zeros(n, dtype=bool)
    for H in out:
        covered |= H.member
    assert covered.all(), "some element lies in no listed maximal abelian subgroup"
    return out


def maximal_abelian_intersections(G: GroupTable) -> bool:
    """Do distinct maximal abelian subgroups intersect trivially?"""
    if len(G) > MAXAB_MAX:
        raise BoundExceeded(f"scan limited to {MAXAB_MAX} elements, group has {len(G)}")
    subs = maximal_abelian_subgroups(G)
    for i, H in enumerate(subs):
        for K in subs[i + 1 :]:
            both = H.member & K.member
            if both.sum() != 1:  # the identity is always shared
                return False
    return True


# ---------------------------------------------------------------------------
# conjugacy, simplicity, generation


def conjugacy_classes(G: GroupTable) -> list[np.ndarray]:
    """Conjugacy classes as sorted index arrays, ordered by least member."""
    n = len(G)
    assigned = np.zeros(n, dtype=bool)
    allx = np.arange(n)
    classes = []
    for rep in range(n):
        if assigned[rep]:
            continue
        orbit = np.unique(G.conj_vec(allx, np.int64(rep)))
        assigned[orbit] = True
        classes.append(orbit)
    return classes


def is_simple(G: GroupTable) -> bool:
    """No conjugacy class generates a proper nontrivial normal subgroup."""
    if len(G) > SIMPLE_MAX:
        raise BoundExceeded(f"simplicity scan limited to {SIMPLE_MAX} elements, group has {len(G)}")
    if len(G) == 1:
        return False
    for cls in conjugacy_classes(G):
        if len(cls) == 1 and cls[0] == 0:
            continue
        closure_size = subgroup_generated(G, cls).size
        if closure_size != len(G):
            return False
    return True


def unipotent_as_order3_product(G: GroupTable) -> tuple[int, int]:
    """Indices (a, b) of two order-3 elements whose product is
    [[1,1],[0,1]], in the level-2 determinant-one group."""
    if G.kind != KIND_SL2 or G.level != 2:
        raise PreconditionError("search is defined in the level-2 determinant-one group")
    target = G.index_of_rows(np.array([[1, 1, 0, 1]], dtype=np.int64))[0]
    orders = G.element_orders()
    for a in np.flatnonzero(orders == 3):
        b = G.mul_index(int(G.inv_index[a]), int(target))
        if orders[b] == 3:
            return int(a), int(b)
    raise SearchFailed("no order-3 factorization of the unipotent element")


def semidirect_check(G: GroupTable, N: SubgroupRef, H: SubgroupRef) -> bool:
    """Is <N u H> the (inner) semidirect product of N by H?  Checks that N
    is normal in the join, N and H intersect trivially, and N H fills the
    join."""
    join = subgroup_generated(G, np.concatenate([N.indices(), H.indices()]))
    nidx = N.indices()
    for x in join.indices():
        if not np.all(N.member[G.conj_vec(np.int64(x), nidx)]):
            return False
    if (N.member & H.member).sum() != 1:
        return False
    prods = np.unique(G.mul_vec(nidx[:, None], H.indices()[None, :]))
    return len(prods) == join.size and bool(np.all(join.member[prods]))


def ut_lt_disjointness(G: GroupTable) -> bool:
    """Upper and lower unitriangular subgroups meet only in the identity,
    and no nontrivial pair drawn from the two sides commutes."""
    ut = subset_indices(G, SubsetName.UPPER_UNI)
    lt = subset_indices(G, SubsetName.LOWER_UNI)
    if len(np.intersect1d(ut, lt)) != 1:
        return False
    ut = ut[ut != 0]
    lt = lt[lt != 0]
    left = G.mul_vec(ut[:, None], lt[None, :])
    right = G.mul_vec(lt[None, :], ut[:, None])
    return bool(np.all(left != right))


# ---------------------------------------------------------------------------
# the projective-line action


@dataclass
class ProjectiveAction:
    """Permutation action on the q+1 points of the projective line.

    Point i < q is the line through (i, 1); point q is the line through
    (1, 0).  perms[k] is the permutation induced by group element k.
    """

    group: GroupTable
    perms: np.ndarray  # (|G|, q+1)

    @property
    def n_points(self) -> int:
        return self.perms.shape[1]

    def kernel_indices(self) -> np.ndarray:
        ident = np.arange(self.n_points)
        return np.flatnonzero(np.all(self.perms == ident, axis=1))

    def is_faithful(self) -> bool:
        return len(self.kernel_indices()) == 1

    def image_order(self) -> int:
        return len(np.unique(self.perms, axis=0))

    def perm_parity_even(self, i: int) -> bool:
        perm = self.perms[i]
        seen = np.zeros(self.n_points, dtype=bool)
        transpositions = 0
        for start in range(self.n_points):
            if seen[start]:
                continue
            length = 0
            p = start
            while not seen[p]:
                seen[p] = True
                p = perm[p]
                length += 1
            transpositions += length - 1
        return transpositions % 2 == 0

    def all_even(self) -> bool:
        return all(self.perm_parity_even(i) for i in range(len(self.perms)))

    def perm_order(self, i: int) -> int:
        perm = self.perms[i]
        cur = perm.copy()
        k = 1
        ident = np.arange(self.n_points)
        while not np.array_equal(cur, ident):
            cur = perm[cur]
            k += 1
        return k


def projective_action(G: GroupTable) -> ProjectiveAction:
    """The action of a determinant-one table on the projective line."""
    if G.kind != KIND_SL2 or G.level > 4:
        raise BoundExceeded("projective action limited to determinant-one tables at levels <= 4")
    _, q, MUL, INV = G.ops
    a, b, c, d = (G.masks[:, i] for i in range(4))
    perms = np.empty((len(G), q + 1), dtype=np.int64)
    for p in range(q + 1):
        px, py = (p, 1) if p < q else (1, 0)
        xs = MUL[a, px] ^ MUL[b, py]
        ys = MUL[c, px] ^ MUL[d, py]
        perms[:, p] = np.where(ys != 0, MUL[xs, INV[ys]], q)
    return ProjectiveAction(G, perms)


# ---------------------------------------------------------------------------
# serialization helpers


def witness_json(G: GroupTable, idxs) -> list[list[str]]:
    return [G.mat_json(int(i)) for i in idxs]


def _drop_caches() -> None:
    field_ops.cache_clear()
    enumerate_group.cache_clear()


conway.register_invalidation_hook(_drop_caches)


__all__ = [
    "CAYLEY_MAX",
    "GL2_MAX_LEVEL",
    "KIND_GL2",
    "KIND_SL2",
    "SIMPLE_MAX",
    "SL2_MAX_LEVEL",
    "TRIPLES_MAX",
    "CtReport",
    "GroupTable",
    "ProjectiveAction",
    "SubgroupRef",
    "centralizer_bf",
    "conjugacy_classes",
    "ct_check_centralizers",
    "ct_check_triples",
    "derived_subgroup",
    "enumerate_group",
    "field_ops",
    "is_abelian",
    "is_metabelian",
    "is_simple",
    "maximal_abelian_intersections",
    "maximal_abelian_subgroups",
    "named_subgroup",
    "normalizer_bf",
    "order_formula",
    "projective_action",
    "semidirect_check",
    "subgroup_from_indices",
    "subgroup_generated",
    "subset_indices",
    "trivial_subgroup",
    "unipotent_as_order3_product",
    "ut_lt_disjointness",
    "whole_group",
    "witness_json",
]
