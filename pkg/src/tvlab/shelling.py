"""Non-pure shellability: verification, search, balanced-skeleton machinery,
the explicit shelling of the 2-fold deleted join of a block matroid, and
vertex-decomposability.

Two independent verifiers are provided.  The pairwise verifier checks the
facet-exchange condition: for every pair A before B there must be an
earlier facet C and a vertex v of B with A cap B inside B cap C = B minus v.
For a fixed B this reduces to computing the set W(B) of removable vertices
(v such that B minus v lies in an earlier facet) and checking that no
earlier facet contains all of W(B).  The intersection verifier instead
materializes the intersection of B with the union of its predecessors and
checks purity in codimension one directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .complexes import (
    SimplicialComplex,
    connected_components,
    f_triangle,
    induced_by_facets,
    intersection,
    restriction,
    skeleton,
)
from .errors import BadParameter, InputNotShelling, NotAPermutation, NotBalanced
from .homology import betti_numbers
from .matroids import Matroid, block_deleted_join, block_matroid, chessboard

# -- shelling orders and verification ------------------------------------


@dataclass
class ShellingOrder:
    complex: SimplicialComplex
    order: tuple
    witnesses: dict = field(default_factory=dict)   # position -> {vertex: position of C}

    def __len__(self) -> int:
        return len(self.order)

    def to_json_dict(self) -> dict:
        facet_pos = {f: i for i, f in enumerate(self.complex.facets)}
        wit = []
        for p in sorted(self.witnesses):
            for v, cpos in sorted(self.witnesses[p].items()):
                wit.append({"B": facet_pos[self.order[p]],
                            "C": facet_pos[self.order[cpos]],
                            "v": int(v)})
        return {"order": [facet_pos[f] for f in self.order], "witnesses": wit}

    @classmethod
    def from_json_dict(cls, complex_: SimplicialComplex, data: dict) -> "ShellingOrder":
        facets = complex_.facets
        idx = list(data.get("order", []))
        if sorted(idx) != list(range(len(facets))):
            raise NotAPermutation(
                "order file must list each facet index exactly once")
        order = tuple(facets[i] for i in idx)
        pos_of_idx = {idx[p]: p for p in range(len(order))}
        wit: dict[int, dict] = {}
        for entry in data.get("witnesses", []):
            p = pos_of_idx[entry["B"]]
            wit.setdefault(p, {})[entry["v"]] = pos_of_idx[entry["C"]]
        return cls(complex_, order, wit)


@dataclass
class VerifyResult:
    ok: bool
    witnesses: dict | None = None
    failure: tuple | None = None    # (A, B) pair with no admissible (C, v)

    def __bool__(self) -> bool:
        return self.ok


def _check_permutation(complex_: SimplicialComplex, order) -> list:
    order = [tuple(f) for f in order]
    if sorted(order) != sorted(complex_.facets):
        raise NotAPermutation("order is not a permutation of the facets")
    return order


def verify_shelling_pairwise(complex_: SimplicialComplex, order) -> VerifyResult:
    """Facet-exchange verifier; returns per-facet witness maps on success."""
    order = _check_permutation(complex_, order)
    n = len(order)
    if n <= 1:
        return VerifyResult(True, {})
    nv = complex_.n_vertices
    bitv = [1 << v for v in range(nv)]
    fmask = []
    for f in order:
        m = 0
        for v in f:
            m |= bitv[v]
        fmask.append(m)

    qsizes = sorted({len(f) - 1 for f in order})
    minpos: dict[int, int] = {}
    for p, f in enumerate(order):
        fm = fmask[p]
        for q in qsizes:
            drop = len(f) - q
            if drop < 0:
                continue
            for dropped in combinations(f, drop):
                dm = 0
                for v in dropped:
                    dm |= bitv[v]
                key = fm ^ dm
                if minpos.get(key, n) > p:
                    minpos[key] = p

    # vertex -> packed positions of facets using it, in shelling order
    words = (n + 63) >> 6
    vrows = np.zeros((nv, words), dtype=np.uint64)
    one = np.uint64(1)
    for p, f in enumerate(order):
        wi = p >> 6
        bit = one << np.uint64(p & 63)
        for v in f:
            vrows[v, wi] |= bit

    witnesses: dict[int, dict] = {}
    for p in range(1, n):
        f = order[p]
        fm = fmask[p]
        wmap = {}
        for v in f:
            mp = minpos.get(fm ^ bitv[v], n)
            if mp < p:
                wmap[v] = mp
        if not wmap:
            return VerifyResult(False, None, (order[0], f))
        acc = np.bitwise_and.reduce(vrows[sorted(wmap)], axis=0)
        wi = p >> 6
        tail = acc[: wi + 1].copy()
        tail[wi] &= (one << np.uint64(p & 63)) - one
        bad = np.nonzero(tail)[0]
        if bad.size:
            w0 = int(bad[0])
            q = (w0 << 6) + ((int(tail[w0]) & -int(tail[w0])).bit_length() - 1)
            return VerifyResult(False, None, (order[q], f))
        witnesses[p] = wmap
    return VerifyResult(True, witnesses)


_POPCNT16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)


def verify_shelling_intersection(complex_: SimplicialComplex, order) -> bool:
    """Purity verifier: B meets its predecessors in a pure complex of
    codimension one inside B."""
    order = _check_permutation(complex_, order)
    n = len(order)
    if n <= 1:
        return True
    nv = complex_.n_vertices
    max_size = max(len(f) for f in order)
    if n > 600 and nv <= 64 and max_size <= 16:
        return _verify_intersection_packed(order, nv)
    sets = [frozenset(f) for f in order]
    for p in range(1, n):
        B = sets[p]
        inters = {B & sets[q] for q in range(p)}
        maximal = [s for s in inters
                   if not any(s < t for t in inters)]
        if not maximal:
            return False
        if any(len(s) != len(B) - 1 for s in maximal):
            return False
    return True


def _verify_intersection_packed(order, nv: int) -> bool:
    n = len(order)
    masks = np.zeros(n, dtype=np.uint64)
    for p, f in enumerate(order):
        m = 0
        for v in f:
            m |= 1 << v
        masks[p] = m
    # per-vertex 0/1 columns over facet positions
    cols = np.zeros((nv, n), dtype=np.uint16)
    for v in range(nv):
        cols[v] = ((masks >> np.uint64(v)) & np.uint64(1)).astype(np.uint16)

    sos_idx: dict[int, list] = {}

    def idx_for(k: int) -> list:
        if k not in sos_idx:
            universe = np.arange(1 << k)
            sos_idx[k] = [np.nonzero((universe & (1 << j)) == 0)[0] for j in range(k)]
        return sos_idx[k]

    key = np.zeros(n, dtype=np.uint16)
    for p in range(1, n):
        f = order[p]
        k = len(f)
        if k > 16:
            raise ValueError("packed intersection verifier supports facets up to 16 vertices")
        kb = key[:p]
        kb[:] = 0
        for j, v in enumerate(f):
            kb |= cols[v, :p] << j
        present = np.bincount(kb, minlength=1 << k).astype(bool)
        idx = idx_for(k)
        sup = present.copy()
        for j in range(k):
            sup[idx[j]] |= sup[idx[j] + (1 << j)]
        strict = np.zeros(1 << k, dtype=bool)
        for j in range(k):
            strict[idx[j]] |= sup[idx[j] + (1 << j)]
        maximal = present & ~strict
        if not maximal.any():
            return False
        if not np.all(_POPCNT16[np.nonzero(maximal)[0]] == k - 1):
            return False
    return True


def reorder_by_dimension(complex_: SimplicialComplex, order) -> tuple:
    """Stable reorder by decreasing facet dimension."""
    order = _check_permutation(complex_, order)
    return tuple(sorted(order, key=lambda f: -len(f)))


# -- shelling search ------------------------------------------------------


@dataclass
class SearchResult:
    status: str                      # found | not-shellable | exhausted
    shelling: ShellingOrder | None
    explored: int

    @property
    def found(self) -> bool:
        return self.status == "found"


class _Budget(Exception):
    pass


def search_shelling(complex_: SimplicialComplex, budget: int = 1_000_000,
                    seed: int | None = None, automorphisms=None) -> SearchResult:
    """Backtracking search over facet orders with failed-prefix memoization.

    Returns not-shellable only when the whole order space was exhausted.
    ``automorphisms`` (vertex permutations) shrink the memo key to orbit
    representatives; shellability is isomorphism-invariant.
    """
    facets = list(complex_.facets)
    n = len(facets)
    if n <= 1:
        so = ShellingOrder(complex_, tuple(facets), {})
        return SearchResult("found", so, 0)

    nv = complex_.n_vertices
    bitv = [1 << v for v in range(nv)]
    fmask = []
    for f in facets:
        m = 0
        for v in f:
            m |= bitv[v]
        fmask.append(m)

    facet_perms = _facet_index_perms(facets, automorphisms) if automorphisms else None

    import random

    base_order = sorted(range(n), key=lambda i: (-len(facets[i]), facets[i]))
    if seed is not None:
        random.Random(seed).shuffle(base_order)

    def can_add(b: int, placed: list) -> bool:
        if not placed:
            return True
        wmask = 0
        for v in facets[b]:
            sub = fmask[b] ^ bitv[v]
            if any(sub & ~fmask[a] == 0 for a in placed):
                wmask |= bitv[v]
        if wmask == 0:
            return False
        return not any(wmask & ~fmask[a] == 0 for a in placed)

    failed: set = set()
    explored = 0

    def canon(placed_fs: frozenset):
        if facet_perms is None:
            return placed_fs
        return min(frozenset(p[i] for i in placed_fs) for p in facet_perms)

    def dfs(placed: list, placed_set: set):
        nonlocal explored
        if len(placed) == n:
            return True
        key = canon(frozenset(placed_set))
        if key in failed:
            return False
        explored += 1
        if explored > budget:
            raise _Budget
        for b in base_order:
            if b in placed_set:
                continue
            if can_add(b, placed):
                placed.append(b)
                placed_set.add(b)
                if dfs(placed, placed_set):
                    return True
                placed.pop()
                placed_set.remove(b)
        failed.add(key)
        return False

    placed: list = []
    try:
        ok = dfs(placed, set())
    except _Budget:
        return SearchResult("exhausted", None, explored)
    if not ok:
        return SearchResult("not-shellable", None, explored)
    order = tuple(facets[i] for i in placed)
    res = verify_shelling_pairwise(complex_, order)
    assert res.ok
    return SearchResult("found", ShellingOrder(complex_, order, res.witnesses), explored)


def _facet_index_perms(facets, vertex_perms, cap: int = 20000):
    """Close vertex permutations into a facet-index permutation group."""
    index = {f: i for i, f in enumerate(facets)}
    gens = []
    for perm in vertex_perms:
        mapped = tuple(index[tuple(sorted(perm[v] for v in f))] for f in facets)
        gens.append(mapped)
    ident = tuple(range(len(facets)))
    group = {ident}
    frontier = [ident]
    while frontier and len(group) < cap:
        nxt = []
        for g in frontier:
            for h in gens:
                comp = tuple(h[g[i]] for i in range(len(g)))
                if comp not in group:
                    group.add(comp)
                    nxt.append(comp)
        frontier = nxt
    return sorted(group)


# -- balanced complexes ----------------------------------------------------


@dataclass(frozen=True)
class VertexColoring:
    classes: tuple   # tuple of frozensets partitioning the (used) vertex set

    def color_counts(self, face) -> tuple:
        return tuple(sum(1 for v in face if v in cls) for cls in self.classes)


def coloring_type(complex_: SimplicialComplex, coloring: VertexColoring) -> tuple:
    """Type vector of a balanced complex; raises NotBalanced otherwise."""
    if complex_.is_void or not complex_.facets:
        raise NotBalanced("void complex has no type")
    if not complex_.is_pure():
        raise NotBalanced("balanced complexes are pure")
    counts = {coloring.color_counts(f) for f in complex_.facets}
    if len(counts) != 1:
        raise NotBalanced(f"facets have unequal color counts: {sorted(counts)[:3]}")
    return counts.pop()


def balanced_b_skeleton(complex_: SimplicialComplex, coloring: VertexColoring,
                        b) -> SimplicialComplex:
    """Faces meeting color class i in at most b_i vertices."""
    a = coloring_type(complex_, coloring)
    b = tuple(b)
    if len(b) != len(a) or any(not 0 <= bi <= ai for bi, ai in zip(b, a)):
        raise NotBalanced(f"b={b} is not coordinatewise between 0 and {a}")
    out = set()
    for facet in complex_.facets:
        parts = [sorted(v for v in facet if v in cls) for cls in coloring.classes]
        choices = [list(combinations(part, bi)) for part, bi in zip(parts, b)]
        stack = [()]
        for ch in choices:
            stack = [acc + pick for acc in stack for pick in ch]
        for face in stack:
            out.add(tuple(sorted(face)))
    return SimplicialComplex(complex_.vertices, sorted(out), _trusted=True)


def compatible_skeleton_shelling(complex_: SimplicialComplex, order, m: int,
                                 search_budget: int = 200_000) -> ShellingOrder:
    """Shelling of the m-skeleton compatible with the given shelling.

    Skeleton facets are sorted by (position of earliest containing facet,
    canonical tie-break) and verified; ordering by earliest containing
    facet makes compatibility hold by construction.  If the first
    tie-break fails to verify, alternatives and then a within-group
    search are tried.
    """
    base = verify_shelling_pairwise(complex_, order)
    if not base.ok:
        raise InputNotShelling(f"input order fails at pair {base.failure}")
    order = [tuple(f) for f in order]
    if complex_.dim is None or not -1 <= m <= complex_.dim:
        raise ValueError("m out of range")
    sk = skeleton(complex_, m)

    nv = complex_.n_vertices
    bitv = [1 << v for v in range(nv)]

    def mask(f):
        acc = 0
        for v in f:
            acc |= bitv[v]
        return acc

    fmask = [mask(f) for f in order]
    earliest = {}
    for g in sk.facets:
        gm = mask(g)
        earliest[g] = next(p for p in range(len(order)) if gm & ~fmask[p] == 0)

    tiebreaks = [
        lambda g: g,
        lambda g: tuple(reversed(g)),
        lambda g: tuple(-v for v in reversed(g)),
    ]
    for tb in tiebreaks:
        cand = tuple(sorted(sk.facets, key=lambda g: (earliest[g], tb(g))))
        res = verify_shelling_pairwise(sk, cand)
        if res.ok:
            return ShellingOrder(sk, cand, res.witnesses)

    # within-group search; group order fixed by earliest containing facet
    groups: dict[int, list] = {}
    for g in sk.facets:
        groups.setdefault(earliest[g], []).append(g)
    result = _grouped_search(sk, [groups[k] for k in sorted(groups)], search_budget)
    if result is None:
        raise InputNotShelling("no compatible skeleton shelling found within budget")
    res = verify_shelling_pairwise(sk, result)
    assert res.ok
    return ShellingOrder(sk, tuple(result), res.witnesses)


def _grouped_search(complex_: SimplicialComplex, groups: list, budget: int):
    """Search orders refining a fixed group sequence, prefix-valid at each step."""
    nv = complex_.n_vertices
    bitv = [1 << v for v in range(nv)]

    def mask(f):
        acc = 0
        for v in f:
            acc |= bitv[v]
        return acc

    flat = [f for grp in groups for f in grp]
    fmask = {f: mask(f) for f in flat}
    counter = [budget]

    def can_add(f, placed_masks) -> bool:
        if not placed_masks:
            return True
        wmask = 0
        fm = fmask[f]
        for v in f:
            sub = fm ^ bitv[v]
            if any(sub & ~am == 0 for am in placed_masks):
                wmask |= bitv[v]
        if wmask == 0:
            return False
        return not any(wmask & ~am == 0 for am in placed_masks)

    placed: list = []
    placed_masks: list = []

    def rec(gi: int, remaining: list) -> bool:
        counter[0] -= 1
        if counter[0] < 0:
            raise _Budget
        if not remaining:
            if gi + 1 == len(groups):
                return True
            return rec(gi + 1, sorted(groups[gi + 1]))
        for i, f in enumerate(remaining):
            if can_add(f, placed_masks):
                placed.append(f)
                placed_masks.append(fmask[f])
                if rec(gi, remaining[:i] + remaining[i + 1:]):
                    return True
                placed.pop()
                placed_masks.pop()
        return False

    try:
        ok = rec(0, sorted(groups[0]))
    except _Budget:
        return None
    return list(placed) if ok else None


def shell_balanced_skeleton(complex_: SimplicialComplex, coloring: VertexColoring,
                            b, order) -> ShellingOrder:
    """Pure shelling of the balanced b-skeleton, by the lowering induction.

    Repeatedly lowers one color cap by one: take a compatible shelling of
    the codimension-one skeleton and restrict it to faces obeying the new
    cap.  Each restriction is re-verified.
    """
    a = coloring_type(complex_, coloring)
    b = tuple(b)
    if len(b) != len(a) or any(not 0 <= bi <= ai for bi, ai in zip(b, a)):
        raise NotBalanced(f"b={b} out of range for type {a}")
    cur_complex = complex_
    cur_order = [tuple(f) for f in order]
    cur_b = list(a)
    base = verify_shelling_pairwise(cur_complex, cur_order)
    if not base.ok:
        raise InputNotShelling(f"input order fails at pair {base.failure}")

    for i in range(len(b)):
        while cur_b[i] > b[i]:
            m = cur_complex.dim - 1
            sk_order = compatible_skeleton_shelling(cur_complex, cur_order, m)
            cur_b[i] -= 1
            target = tuple(cur_b)
            nxt = balanced_b_skeleton(cur_complex, coloring, target)
            keep = set(nxt.facets)
            cur_order = [f for f in sk_order.order if f in keep]
            if set(cur_order) != keep:
                raise AssertionError("restriction missed some balanced facets")
            cur_complex = nxt
            res = verify_shelling_pairwise(cur_complex, cur_order)
            if not res.ok:
                raise InputNotShelling(
                    f"restricted order fails at {res.failure} while lowering to {target}")
    res = verify_shelling_pairwise(cur_complex, cur_order)
    return ShellingOrder(cur_complex, tuple(cur_order), res.witnesses)


# -- the explicit shelling of the 2-fold deleted join ---------------------


@dataclass
class BlockJoinShelling:
    matroid: Matroid
    complex: SimplicialComplex
    shelling: ShellingOrder
    chessboard_order: tuple          # leading segment: facets of the chessboard join
    vpart_shellings: dict            # b -> ShellingOrder of the balanced skeleton


def shell_block_deleted_join(r: int, width: int | None = None,
                             verify: bool = True) -> BlockJoinShelling:
    """Shelling of the 2-fold deleted join of a block matroid.

    Chessboard-join facets come first in lexicographic product order of a
    chessboard shelling; the rest are sorted by (decreasing free-block
    profile, free-block part, balanced-skeleton position of the parallel
    part).  The assembled order is verified before being returned.
    """
    m = r if width is None else width
    if m == r and r < 3:
        raise BadParameter("the square family is shellable only from r >= 3")
    if r < 2 or m < r:
        raise BadParameter("need r >= 2 and width >= r")
    matroid = block_matroid(r, m)
    dj = block_deleted_join(matroid, 2)

    w_cols = {v.index for v in matroid.complex.vertices if v.block == r}

    def split(facet):
        """Per-row (v-part, w-part) of a deleted-join face, as base columns."""
        rows = ([], []), ([], [])
        for gid in facet:
            base, t = divmod(gid, 2)
            rows[t][0 if base not in w_cols else 1].append(base)
        return rows

    cb = chessboard(2, m)
    cb_res = search_shelling(cb)
    if not cb_res.found:
        raise AssertionError("chessboard factor has no shelling")
    pair_pos = {}
    for p, f in enumerate(cb_res.shelling.order):
        a = next(g // 2 for g in f if g % 2 == 0)
        b_ = next(g // 2 for g in f if g % 2 == 1)
        pair_pos[(a, b_)] = p

    n_vcols = (r - 1) * m

    def block_profile(facet):
        """Per-block chessboard position tuple, or None if not a
        chessboard-join facet."""
        cols = {}
        for gid in facet:
            base, t = divmod(gid, 2)
            blk = base // m
            cols.setdefault(blk, [None, None])[t] = base % m
        key = []
        for blk in range(r):
            pa = cols.get(blk)
            if pa is None or pa[0] is None or pa[1] is None:
                return None
            key.append(pair_pos[(pa[0], pa[1])])
        return tuple(key)

    chess, other = [], []
    for f in dj.facets:
        prof = block_profile(f)
        if prof is not None and len(f) == 2 * r:
            chess.append((prof, f))
        else:
            other.append(f)
    chess.sort()
    chess_order = tuple(f for _, f in chess)

    # the parallel-block subcomplex and its lexicographic join shelling
    v_ids = [base * 2 + t for base in range(n_vcols) for t in range(2)]
    sigma_v = restriction(dj, v_ids)

    def vkey(facet):
        cols = {}
        for gid in facet:
            base, t = divmod(gid, 2)
            cols.setdefault(base // m, [None, None])[t] = base % m
        return tuple(pair_pos[tuple(cols[blk])] for blk in range(r - 1))

    sv_order = tuple(sorted(sigma_v.facets, key=vkey))
    sv_res = verify_shelling_pairwise(sigma_v, sv_order)
    if not sv_res.ok:
        raise AssertionError(f"join order on the parallel part fails: {sv_res.failure}")
    sv_shelling = ShellingOrder(sigma_v, sv_order, sv_res.witnesses)

    coloring = VertexColoring((
        frozenset(g for g in v_ids if g % 2 == 0),
        frozenset(g for g in v_ids if g % 2 == 1),
    ))

    def wx(facet):
        (v1, w1), (v2, w2) = split(facet)
        return (len(w1), len(w2)), (tuple(sorted(w1)), tuple(sorted(w2))), \
            tuple(sorted(g for g in facet if g // 2 not in w_cols))

    def prec_key(x):
        s = tuple(sorted(x, reverse=True))
        return (s, x)

    needed = {}
    for f in other:
        x, _, _ = wx(f)
        bvec = (min(r - x[0], r - 1), min(r - x[1], r - 1))
        needed[x] = bvec

    vpart: dict[tuple, ShellingOrder] = {}
    for x, bvec in sorted(needed.items()):
        if bvec not in vpart:
            vpart[bvec] = shell_balanced_skeleton(sigma_v, coloring, bvec, sv_order)
    vpos = {b: {f: p for p, f in enumerate(sh.order)} for b, sh in vpart.items()}

    def other_key(facet):
        x, wpart, vbar = wx(facet)
        bvec = needed[x]
        return (prec_key(x), wpart, vpos[bvec][vbar])

    other.sort(key=other_key)
    full = chess_order + tuple(other)

    witnesses: dict = {}
    if verify:
        res = verify_shelling_pairwise(dj, full)
        if not res.ok:
            raise AssertionError(f"assembled order fails verification at {res.failure}")
        witnesses = res.witnesses
    return BlockJoinShelling(matroid, dj, ShellingOrder(dj, full, witnesses),
                             chess_order, vpart)


def homotopy_from_shelling(complex_: SimplicialComplex, order,
                           cross_check: bool | None = None) -> tuple:
    """Sphere-count vector (h_1, ..., h_{d+1}) of a shellable complex.

    The complex is homotopy equivalent to a wedge with h_j copies of the
    (j-1)-sphere.  With cross_check (default on for small complexes) the
    counts are compared against the reduced Betti numbers.
    """
    if isinstance(order, ShellingOrder):
        order = order.order
    res = verify_shelling_pairwise(complex_, order)
    if not res.ok:
        raise InputNotShelling(f"order fails at pair {res.failure}")
    h = f_triangle(complex_).h_diagonal
    if cross_check is None:
        cross_check = sum(len(v) for v in complex_.faces_by_dim().values()) <= 30_000
    if cross_check:
        bv = betti_numbers(complex_)
        for j in range(1, len(h)):
            if bv[j - 1] != h[j]:
                raise AssertionError(f"h_{j}={h[j]} but Betti_{j-1}={bv[j-1]}")
    return tuple(h[1:])


# -- the two-piece covering by facet dimension ----------------------------


@dataclass
class FacetDimensionCovering:
    complex: SimplicialComplex
    top: SimplicialComplex            # induced by top-dimensional facets
    lower_components: tuple           # the two components of the lower part
    intersections: tuple              # top meet each lower component


def covering_by_facet_dimension(r: int) -> FacetDimensionCovering:
    """Cover the 2-fold deleted join by its top-dimension and
    codimension-one facet subcomplexes (square block matroid only)."""
    if r < 3:
        raise BadParameter("covering analysis needs r >= 3")
    matroid = block_matroid(r)
    dj = block_deleted_join(matroid, 2)
    top_facets = [f for f in dj.facets if len(f) == 2 * r]
    low_facets = [f for f in dj.facets if len(f) == 2 * r - 1]
    top = induced_by_facets(dj, top_facets)
    lower = induced_by_facets(dj, low_facets)
    comps = connected_components(lower)
    if len(comps) != 2:
        raise AssertionError(f"expected 2 components, got {len(comps)}")

    def w_row(comp):
        f = comp.facets[0]
        rows = {gid % 2 for gid in f if dj.vertices[gid].block == r}
        assert len(rows) == 1
        return rows.pop()

    comps = sorted(comps, key=w_row)   # component with row-1 free block first
    inters = tuple(intersection(top, c) for c in comps)
    return FacetDimensionCovering(dj, top, tuple(comps), inters)


# -- vertex decomposability ------------------------------------------------


@dataclass
class ShedSequence:
    steps: tuple       # (vertex, "link"/"delete") pairs in recursion preorder


@dataclass
class VDResult:
    status: str        # yes | no | exhausted
    sequence: ShedSequence | None = None

    @property
    def is_yes(self) -> bool:
        return self.status == "yes"


def is_vertex_decomposable(complex_: SimplicialComplex, budget: int = 100_000,
                           automorphisms=None) -> VDResult:
    """Memoized shedding-vertex recursion.

    A complex is vertex-decomposable when it is a simplex (the void
    complex and the empty-face complex count), or some vertex has a
    vertex-decomposable link and deletion sharing no facet.
    """
    counter = [budget]
    memo: dict = {}
    perms = None
    if automorphisms:
        perms = [list(p) for p in automorphisms]

    def canon(facets: frozenset):
        if not perms:
            return facets
        best = facets
        for p in perms:
            img = frozenset(tuple(sorted(p[v] for v in f)) for f in facets)
            if tuple(sorted(img)) < tuple(sorted(best)):
                best = img
        return best

    def maximalize(faces):
        faces = sorted(set(faces), key=len, reverse=True)
        kept: list = []
        for f in faces:
            fs = set(f)
            if not any(fs <= set(k) for k in kept):
                kept.append(f)
        return frozenset(kept)

    def rec(facets: frozenset):
        if len(facets) <= 1:
            return ()
        key = canon(facets)
        if key in memo:
            return memo[key]
        counter[0] -= 1
        if counter[0] < 0:
            raise _Budget
        used = sorted({v for f in facets for v in f})
        for v in used:
            linkf = frozenset(tuple(u for u in f if u != v) for f in facets if v in f)
            delf = maximalize(tuple(u for u in f if u != v) if v in f else f
                              for f in facets)
            if linkf & delf:
                continue
            sub_link = rec(linkf)
            if sub_link is None:
                continue
            sub_del = rec(delf)
            if sub_del is None:
                continue
            out = ((v, "link"),) + sub_link + ((v, "delete"),) + sub_del
            memo[key] = out
            return out
        memo[key] = None
        return None

    try:
        steps = rec(frozenset(complex_.facets))
    except _Budget:
        return VDResult("exhausted")
    if steps is None:
        return VDResult("no")
    return VDResult("yes", ShedSequence(steps))


def shed_obstruction_for_free_block(complex_: SimplicialComplex,
                                    w_vertices) -> bool:
    """Check that no free-block vertex can be the first shedding vertex:
    for each such vertex the link and the deletion share a facet."""
    facets = complex_.facets
    for s0 in w_vertices:
        linkf = {tuple(u for u in f if u != s0) for f in facets if s0 in f}
        cand = [tuple(u for u in f if u != s0) if s0 in f else f for f in facets]
        cand.sort(key=len, reverse=True)
        delf: list = []
        for f in cand:
            fs = set(f)
            if not any(fs <= set(k) for k in delf):
                delf.append(f)
        if not (linkf & set(delf)):
            return False
    return True


# -- the link obstruction in higher deleted joins --------------------------


def deleted_join_face_oracle(matroid: Matroid, k: int):
    """Membership test for faces of the k-fold deleted join, given as
    iterables of (ground vertex, row) pairs with rows 1..k."""
    face_set = matroid.complex.face_set()

    def is_face(pairs) -> bool:
        rows: dict[int, list] = {}
        cols = set()
        for v, t in pairs:
            if not 1 <= t <= k:
                return False
            if v in cols:
                return False
            cols.add(v)
            rows.setdefault(t, []).append(v)
        return all(tuple(sorted(vs)) in face_set for vs in rows.values())

    return is_face


def link_in_deleted_join(matroid: Matroid, k: int, face) -> SimplicialComplex:
    """Link of a face of the k-fold deleted join, computed lazily.

    Only the candidate extension vertices are materialized, so this works
    on deleted joins far too large to enumerate.
    """
    from .complexes import Vertex as Vx

    is_face = deleted_join_face_oracle(matroid, k)
    face = [tuple(p) for p in face]
    if not is_face(face):
        raise BadParameter("the given vertex set is not a face of the deleted join")
    candidates = []
    for v in range(matroid.complex.n_vertices):
        for t in range(1, k + 1):
            if (v, t) in face:
                continue
            if is_face(face + [(v, t)]):
                candidates.append((v, t))
    verts = tuple(Vx(i, f"{matroid.complex.vertices[v].label}", t,
                     matroid.complex.vertices[v].block)
                  for i, (v, t) in enumerate(candidates))

    faces_out: list = []

    def rec(start: int, chosen: list):
        faces_out.append(tuple(i for i, _ in chosen))
        for i in range(start, len(candidates)):
            ext = chosen + [(i, candidates[i])]
            if is_face(face + [p for _, p in ext]):
                rec(i + 1, ext)

    rec(0, [])
    return SimplicialComplex(verts, faces_out)


def obstruction_face(r: int, k: int) -> list:
    """The pivotal face of the k-fold deleted join at r = 2k - 1 whose link
    is a square chessboard: rows 1..k-1 take column i of every parallel
    block; row k takes column r of the first k-1 blocks plus the last
    r - k + 1 free-block vertices."""
    if r != 2 * k - 1:
        raise BadParameter("the obstruction face needs r = 2k - 1")
    m = r

    def v_idx(block, col):
        return (block - 1) * m + (col - 1)

    def w_idx(col):
        return (r - 1) * m + (col - 1)

    face = []
    for i in range(1, k):
        for blk in range(1, r):
            face.append((v_idx(blk, i), i))
    for blk in range(1, k):
        face.append((v_idx(blk, r), k))
    for j in range(k, r + 1):
        face.append((w_idx(j), k))
    return face
