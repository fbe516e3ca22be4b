"""Matroid constructors, the matroid axiom verifier, and basis utilities.

A matroid is carried as the simplicial complex of its independent sets.
The central family here is the rank-r "block matroid": r-1 blocks of
``width`` parallel elements (rank one each) plus one free block of
``width`` elements, truncated to rank r.  With width r it has exactly r
pairwise disjoint bases; with width r+1 it has r+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import (
    SimplicialComplex,
    Vertex,
    deleted_join,
    join,
    make_vertices,
    points,
    skeleton,
)
from .errors import BadParameter, BadRank


@dataclass(frozen=True)
class Matroid:
    complex: SimplicialComplex
    rank: int
    verified: bool
    disjoint_bases: tuple

    @property
    def ground_size(self) -> int:
        return self.complex.n_vertices

    def bases(self) -> tuple:
        return tuple(f for f in self.complex.facets if len(f) == self.rank)


def uniform_matroid(m: int, ground) -> Matroid:
    """All subsets of cardinality at most m of the ground set."""
    if isinstance(ground, int):
        labels = [f"e{j + 1}" for j in range(ground)]
    else:
        labels = list(ground)
    n = len(labels)
    if m < 0 or m > n:
        raise BadRank(f"uniform rank {m} out of range for ground of size {n}")
    verts = make_vertices(labels)
    facets = list(combinations(range(n), m))
    cpx = SimplicialComplex(verts, facets, _trusted=True)
    packing = tuple(tuple(range(i * m, (i + 1) * m)) for i in range(n // m)) if m else ((),)
    return Matroid(cpx, m, True, packing)


def direct_sum(parts) -> Matroid:
    """Direct sum; equals the join of the underlying complexes."""
    parts = list(parts)
    if not parts:
        raise ValueError("direct sum of no parts")
    if len(parts) == 1:
        return parts[0]
    cpx = join([p.complex for p in parts])
    rank = sum(p.rank for p in parts)
    npack = min(len(p.disjoint_bases) for p in parts)
    offsets = []
    off = 0
    for p in parts:
        offsets.append(off)
        off += p.complex.n_vertices
    packing = []
    for i in range(npack):
        combined = []
        for p, o in zip(parts, offsets):
            combined.extend(o + v for v in p.disjoint_bases[i])
        packing.append(tuple(sorted(combined)))
    return Matroid(cpx, rank, all(p.verified for p in parts), tuple(packing))


def block_matroid(r: int, width: int | None = None, verify: bool = True) -> Matroid:
    """Rank-r matroid with r-1 parallel blocks and one free block.

    Ground set: blocks i=1..r-1 of `width` parallel copies (labels
    ``v_i^j``) and a free block of `width` elements (labels ``w_j``).
    The complex is the rank-r truncation of the direct sum, so a face
    uses at most one vertex per parallel block and at most r vertices
    in total.  It has `width` pairwise disjoint bases.
    """
    if r < 2:
        raise BadParameter("block matroid needs r >= 2")
    m = r if width is None else width
    if m < r:
        raise BadParameter("width must be at least r")
    summands = []
    for i in range(1, r):
        labels = [f"v_{i}^{j}" for j in range(1, m + 1)]
        part = uniform_matroid(1, labels)
        summands.append(part)
    summands.append(uniform_matroid(m, [f"w_{j}" for j in range(1, m + 1)]))
    hat = direct_sum(summands)
    # re-tag blocks on the summed vertex table
    verts = []
    for v in hat.complex.vertices:
        blk = int(v.label.split("_")[1].split("^")[0]) if v.label.startswith("v_") else r
        verts.append(Vertex(v.index, v.label, None, blk))
    cpx = skeleton(SimplicialComplex(tuple(verts), hat.complex.facets, _trusted=True), r - 1)
    packing = []
    for j in range(m):
        basis = [(i - 1) * m + j for i in range(1, r)]          # v_i^{j+1}
        basis.append((r - 1) * m + j)                            # w_{j+1}
        packing.append(tuple(sorted(basis)))
    if not verify:
        return Matroid(cpx, r, False, tuple(packing))
    ok, _ = is_matroid(cpx, mode="exchange")
    if not ok:
        raise AssertionError("block matroid failed the exchange check")
    return Matroid(cpx, r, True, tuple(packing))


def chessboard(k: int, r: int) -> SimplicialComplex:
    """Non-attacking rook placements on a k x r board.

    Deleted join of k copies of an r-point complex: at most one vertex
    per row and per column.
    """
    if k < 1 or r < 1:
        raise BadParameter("chessboard needs k, r >= 1")
    return deleted_join(points(r), k)


def is_matroid(complex_: SimplicialComplex, mode: str = "exchange",
               samples: int = 2000, seed: int = 0):
    """Check the matroid property; returns (ok, witness).

    exchange     augmentation axiom on face pairs |J| = |I|+1 (polynomial)
    exhaustive   purity of every restriction (alias: restrictions; <= 18 vertices)
    sampled      purity of all small and `samples` random restrictions
    """
    if mode == "exhaustive":
        mode = "restrictions"
    faces = sorted(complex_.face_set(), key=len)
    fset = set(faces)
    if mode == "exchange":
        by_size: dict[int, list] = {}
        for f in faces:
            by_size.setdefault(len(f), []).append(f)
        for s in sorted(by_size):
            if s + 1 not in by_size:
                continue
            for bigger in by_size[s + 1]:
                bset = set(bigger)
                for smaller in by_size[s]:
                    if set(smaller) <= bset:
                        continue
                    if not any(tuple(sorted(smaller + (x,))) in fset
                               for x in bset - set(smaller)):
                        return False, (smaller, bigger)
        return True, None

    used = complex_.used_vertices()
    if mode == "restrictions":
        if len(used) > 18:
            raise ValueError("restrictions mode is exhaustive; use sampled above 18 vertices")
        subsets = _all_subsets(used)
    elif mode == "sampled":
        import random

        rng = random.Random(seed)
        subsets = [s for s in _all_subsets(used, max_size=3)]
        for _ in range(samples):
            size = rng.randint(4, max(4, len(used)))
            subsets.append(tuple(sorted(rng.sample(used, min(size, len(used))))))
    else:
        raise ValueError(f"unknown mode {mode!r}")

    masks = {f: _mask(f) for f in faces}
    for sub in subsets:
        smask = _mask(sub)
        inside = [f for f in faces if masks[f] & ~smask == 0]
        if not inside:
            continue
        top = max(len(f) for f in inside)
        insets = set(inside)
        for f in inside:
            if len(f) == top:
                continue
            if not any(tuple(sorted(f + (x,))) in insets for x in sub if x not in f):
                return False, sub
    return True, None


def _mask(face) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def _all_subsets(universe, max_size: int | None = None):
    universe = list(universe)
    top = len(universe) if max_size is None else min(max_size, len(universe))
    for s in range(top + 1):
        yield from combinations(universe, s)


def disjoint_bases(matroid: Matroid) -> tuple:
    """A maximum packing of pairwise disjoint bases, by exact backtracking."""
    bases = list(matroid.bases())
    masks = [_mask(b) for b in bases]
    n = matroid.ground_size
    cap = n // matroid.rank if matroid.rank else len(bases)
    best: list = []

    def rec(start: int, used: int, chosen: list):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(best) >= cap:
            return
        if len(chosen) + (n - bin(used).count("1")) // matroid.rank <= len(best):
            return
        for i in range(start, len(bases)):
            if masks[i] & used:
                continue
            chosen.append(bases[i])
            rec(i + 1, used | masks[i], chosen)
            chosen.pop()
            if len(best) >= cap:
                return

    rec(0, 0, [])
    return tuple(best)


def has_coloops(matroid: Matroid) -> bool:
    """A coloop is an element contained in every basis."""
    bases = matroid.bases()
    if not bases:
        return False
    common = set(bases[0])
    for b in bases[1:]:
        common &= set(b)
        if not common:
            return False
    return bool(common)


# -- the 2-fold deleted join of a block matroid, with degree prefill -----


def block_deleted_join(matroid: Matroid, k: int = 2) -> SimplicialComplex:
    """Deleted join of a block matroid, with face degrees precomputed.

    For k=2 the degree of every face (the size of the largest containing
    facet) is decided by a constant-time completion test, which avoids
    the facet-containment sweep on the large instances.
    """
    cpx = deleted_join(matroid.complex, k)
    if k != 2:
        return cpx
    r = matroid.rank
    blocks = {}
    for v in matroid.complex.vertices:
        blocks[v.index] = v.block
    nblocks = r - 1
    width = matroid.ground_size // r

    degrees = {}
    for d, faces in cpx.faces_by_dim().items():
        for face in faces:
            degrees[face] = 2 * r if _extends_to_basis_pair(
                face, blocks, r, nblocks, width) else 2 * r - 1
    cpx._degrees = degrees
    return cpx


def _extends_to_basis_pair(face, blocks, r, nblocks, width) -> bool:
    """Can the face grow to two disjoint bases (a top facet)?"""
    row_sizes = [0, 0]
    row_blocks = [0, 0]        # parallel blocks already used per row
    w_used = 0
    for gid in face:
        base, row = divmod(gid, 2)
        row_sizes[row] += 1
        if blocks[base] == r:
            w_used += 1
        else:
            row_blocks[row] += 1
    free_w = width - w_used
    need = 0
    for t in range(2):
        missing = r - row_sizes[t]
        from_blocks = nblocks - row_blocks[t]
        need += max(0, missing - from_blocks)
    return need <= free_w
