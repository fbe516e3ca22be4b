"""Chain complexes and reduced homology over the two-element field.

Cells of any regular complex (simplicial faces or product cells) are
indexed per dimension; boundaries are stored as index lists and packed
into bit matrices for rank computation.  Reduced homology is computed
with an augmentation cell in dimension -1.

Large complexes are first shrunk by iterated coreduction: whenever a
cell b has exactly one remaining face a, the pair (a, b) is removed and
every other boundary simply forgets a and b.  This is the Gaussian
elimination lemma for chain complexes in the special case where the
eliminated column is a singleton, so the remaining boundary is just the
original one restricted to surviving cells, and homology is unchanged.
The survivors go through bit-packed Gaussian elimination.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from . import gf2
from .complexes import SimplicialComplex
from .errors import NotAnAutomorphism, NotInvolution

_COREDUCE_THRESHOLD = 30_000


@dataclass
class ChainComplexF2:
    """Cells per dimension with GF(2) boundary index lists.

    ``cells[-1]`` holds the single augmentation cell when the complex has
    any face, so Betti numbers read off this complex are reduced.
    """

    cells: dict       # dim -> list of cell payloads
    boundaries: dict  # dim -> list of tuples of indices into cells[dim-1]

    @property
    def dims(self) -> list[int]:
        return sorted(self.cells)

    @property
    def top_dim(self) -> int:
        return max(self.cells, default=-1)

    def n_cells(self, d: int) -> int:
        return len(self.cells.get(d, ()))

    def total_cells(self) -> int:
        return sum(len(v) for v in self.cells.values())

    def boundary_matrix(self, d: int) -> gf2.BitMatrix:
        """Rows are d-cells, columns are (d-1)-cells."""
        return gf2.BitMatrix.from_rows(self.boundaries.get(d, []), self.n_cells(d - 1))

    def check_boundary_squared(self, sample: int | None = None, seed: int = 0) -> bool:
        """Verify that the boundary of a boundary vanishes.

        With ``sample`` set, only that many cells per dimension are
        checked (deterministically seeded); otherwise the check is
        exhaustive.
        """
        import random

        rng = random.Random(seed)
        for d in self.dims:
            if d - 2 not in self.cells and d - 1 not in self.cells:
                continue
            rows = self.boundaries.get(d, [])
            lower = self.boundaries.get(d - 1, [])
            idx = range(len(rows))
            if sample is not None and len(rows) > sample:
                idx = rng.sample(range(len(rows)), sample)
            for i in idx:
                acc: set = set()
                for f in rows[i]:
                    acc ^= set(lower[f]) if f < len(lower) else set()
                if acc:
                    return False
        return True


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers over GF(2), index i = dimension i."""

    values: tuple

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def connectivity(self) -> int:
        """Largest c with all reduced Betti numbers vanishing up to c."""
        c = -1
        for i, b in enumerate(self.values):
            if b:
                return i - 1
            c = i
        return c


def chain_complex(complex_: SimplicialComplex, check: str = "auto") -> ChainComplexF2:
    """Simplicial chains: the boundary of a face is the sum of its subfaces."""
    byd = complex_.faces_by_dim()
    cells = {d: list(faces) for d, faces in sorted(byd.items())}
    index = {d: {f: i for i, f in enumerate(faces)} for d, faces in cells.items()}
    boundaries: dict[int, list] = {}
    for d, faces in cells.items():
        if d <= -1:
            boundaries[d] = [() for _ in faces]
            continue
        lower = index.get(d - 1, {})
        rows = []
        for f in faces:
            rows.append(tuple(sorted(lower[f[:i] + f[i + 1:]] for i in range(len(f)))))
        boundaries[d] = rows
    cc = ChainComplexF2(cells, boundaries)
    _run_check(cc, check)
    return cc


def _run_check(cc: ChainComplexF2, check: str) -> None:
    if check == "none":
        return
    if check == "full" or (check == "auto" and cc.total_cells() <= 20_000):
        ok = cc.check_boundary_squared()
    else:
        ok = cc.check_boundary_squared(sample=500)
    if not ok:
        raise AssertionError("boundary of boundary is nonzero")


def betti_f2(cc: ChainComplexF2, method: str = "auto") -> BettiVector:
    """Reduced Betti numbers via bit-packed elimination ranks.

    ``method`` is one of auto, dense, coreduce; auto coreduces first on
    large complexes.  The result is cross-checked against the reduced
    Euler characteristic computed from raw cell counts.
    """
    top = cc.top_dim
    if top < 0:
        return BettiVector(())
    if method == "auto":
        method = "coreduce" if cc.total_cells() > _COREDUCE_THRESHOLD else "dense"
    if method == "dense":
        values = _betti_dense(cc)
    elif method == "coreduce":
        values = _betti_coreduced(cc)
    else:
        raise ValueError(f"unknown method {method!r}")

    chi = 0
    for d in cc.dims:
        if d >= 0:
            chi += (-1) ** d * cc.n_cells(d)
    chi -= 1 if -1 in cc.cells else 0
    alt = sum((-1) ** i * b for i, b in enumerate(values))
    if -1 in cc.cells and alt != chi:
        raise AssertionError(f"Betti alternating sum {alt} != reduced Euler {chi}")
    return BettiVector(values)


def _betti_dense(cc: ChainComplexF2) -> tuple:
    top = cc.top_dim
    ranks = {}
    for d in range(0, top + 1):
        ranks[d] = cc.boundary_matrix(d).rank() if cc.n_cells(d) else 0
    ranks[top + 1] = 0
    # without an augmentation cell the numbers below are unreduced
    values = []
    for d in range(0, top + 1):
        values.append(cc.n_cells(d) - ranks[d] - ranks[d + 1])
    return tuple(values)


def _betti_coreduced(cc: ChainComplexF2) -> tuple:
    top = cc.top_dim
    alive, ncomp, offsets, order = _coreduce(cc)
    # assemble leftover boundary matrices restricted to surviving cells
    new_index: dict[int, dict[int, int]] = {d: {} for d in range(0, top + 1)}
    leftover: dict[int, list] = {d: [] for d in range(0, top + 1)}
    for d in range(0, top + 1):
        cells_d = cc.cells.get(d, [])
        for i in range(len(cells_d)):
            if alive[offsets[d] + i]:
                new_index[d][i] = len(leftover[d])
                leftover[d].append(i)
    values = []
    ranks = {}
    for d in range(0, top + 2):
        if d > top or not leftover[d]:
            ranks[d] = 0
            continue
        lower = new_index.get(d - 1, {})
        rows = []
        for i in leftover[d]:
            rows.append([lower[f] for f in cc.boundaries[d][i]
                         if alive[offsets[d - 1] + f]] if d - 1 >= 0 else [])
        ranks[d] = gf2.rank_of_rows(rows, len(leftover.get(d - 1, ()))) if d - 1 >= 0 else 0
    for d in range(0, top + 1):
        values.append(len(leftover[d]) - ranks[d] - ranks.get(d + 1, 0))
    values[0] += ncomp - 1
    return tuple(values)


def _coreduce(cc: ChainComplexF2):
    """Iterated coreduction; returns (alive flags, n components, offsets, order).

    One 0-cell per connected component is removed up front, which plays
    the role of the per-component augmentation, so the leftover complex
    carries the reduced homology of each component.
    """
    top = cc.top_dim
    offsets = {}
    total = 0
    for d in range(-1, top + 1):
        if d == -1:
            continue
        offsets[d] = total
        total += cc.n_cells(d)

    # flatten boundaries (dims >= 0; the dim-0 boundary is empty here)
    bnd_ptr = np.zeros(total + 1, dtype=np.int64)
    bnd_counts = np.zeros(total, dtype=np.int32)
    nnz = 0
    for d in range(1, top + 1):
        for i, row in enumerate(cc.boundaries.get(d, [])):
            gid = offsets[d] + i
            bnd_counts[gid] = len(row)
            nnz += len(row)
    bnd_ptr[1:] = np.cumsum(bnd_counts)
    bnd_idx = np.zeros(nnz, dtype=np.int64)
    for d in range(1, top + 1):
        off, loff = offsets[d], offsets[d - 1]
        for i, row in enumerate(cc.boundaries.get(d, [])):
            g = bnd_ptr[off + i]
            for j, f in enumerate(row):
                bnd_idx[g + j] = loff + f

    # coboundary as CSR transpose
    cob_counts = np.bincount(bnd_idx, minlength=total).astype(np.int64)
    cob_ptr = np.zeros(total + 1, dtype=np.int64)
    cob_ptr[1:] = np.cumsum(cob_counts)
    cob_idx = np.zeros(nnz, dtype=np.int64)
    cursor = cob_ptr[:-1].copy()
    for d in range(1, top + 1):
        off = offsets[d]
        for i in range(cc.n_cells(d)):
            gid = off + i
            for f in bnd_idx[bnd_ptr[gid]:bnd_ptr[gid + 1]]:
                cob_idx[cursor[f]] = gid
                cursor[f] += 1

    # components of the 0/1 skeleton
    n0 = cc.n_cells(0)
    parent = list(range(n0))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in cc.boundaries.get(1, []):
        if len(row) == 2:
            ra, rb = find(row[0]), find(row[1])
            if ra != rb:
                parent[ra] = rb
    roots = {}
    for v in range(n0):
        roots.setdefault(find(v), v)
    seeds = sorted(roots.values())
    ncomp = len(seeds)

    alive = np.ones(total, dtype=bool)
    count = bnd_counts.copy()
    queue: deque = deque()
    blist = bnd_idx.tolist()
    bptr = bnd_ptr.tolist()
    clist = cob_idx.tolist()
    cptr = cob_ptr.tolist()

    def kill(c: int):
        alive[c] = False
        for x in clist[cptr[c]:cptr[c + 1]]:
            if alive[x]:
                count[x] -= 1
                if count[x] == 1:
                    queue.append(x)

    for s in seeds:
        kill(offsets[0] + s)

    order = []
    while queue:
        b = queue.popleft()
        if not alive[b] or count[b] != 1:
            continue
        a = -1
        for f in blist[bptr[b]:bptr[b + 1]]:
            if alive[f]:
                a = f
                break
        kill(b)
        kill(a)
        order.append((a, b))
    return alive, ncomp, offsets, order


def betti_numbers(complex_: SimplicialComplex, method: str = "auto") -> BettiVector:
    """Reduced Betti numbers of a simplicial complex."""
    if complex_.is_void or complex_.dim == -1:
        return BettiVector(())
    return betti_f2(chain_complex(complex_), method=method)


# -- induced involutions on homology -------------------------------------


@dataclass
class InducedMap:
    """Endomorphism induced on a chosen homology basis in one dimension."""

    dim: int
    matrix: np.ndarray               # k x k over GF(2)
    representatives: list            # cycle representative index lists

    @property
    def space_dim(self) -> int:
        return self.matrix.shape[0]


def induced_involution(complex_: SimplicialComplex, perm, dim: int) -> InducedMap:
    """Map induced on H_dim by a simplicial involution given on vertices."""
    perm = list(perm)
    n = complex_.n_vertices
    if sorted(perm) != list(range(n)):
        raise NotAnAutomorphism("vertex map is not a permutation")
    if any(perm[perm[v]] != v for v in range(n)):
        raise NotInvolution("vertex map squared is not the identity")
    facet_set = set(complex_.facets)
    mapped = {tuple(sorted(perm[v] for v in f)) for f in complex_.facets}
    if mapped != facet_set:
        raise NotAnAutomorphism("vertex map does not permute facets")

    cc = chain_complex(complex_)
    cells = cc.cells.get(dim, [])
    ncells = len(cells)
    index = {f: i for i, f in enumerate(cells)}
    cell_perm = np.zeros(ncells, dtype=np.int64)
    for i, f in enumerate(cells):
        cell_perm[i] = index[tuple(sorted(perm[v] for v in f))]

    # kernel of the boundary operator lives over the d-cells, so take the
    # nullspace of the (d-1)-cells x d-cells matrix
    cycles = cc.boundary_matrix(dim).transpose().nullspace()
    bmat = cc.boundary_matrix(dim + 1) if cc.n_cells(dim + 1) else gf2.BitMatrix.zeros(0, ncells)

    # echelon of the boundary space, then homology representatives on top
    ech = gf2.TrackedEchelon(ncells, max(1, cycles.nrows))
    for i in range(bmat.nrows):
        ech.add(bmat.words[i])
    boundary_rank = len(ech)
    reps: list[np.ndarray] = []
    for i in range(cycles.nrows):
        if ech.add(cycles.words[i], tag_index=len(reps)):
            reps.append(cycles.words[i].copy())
    k = len(reps)

    # rebuild a tracked echelon whose tags are exactly the representatives
    ech2 = gf2.TrackedEchelon(ncells, max(1, k))
    for i in range(bmat.nrows):
        ech2.add(bmat.words[i])
    assert len(ech2) == boundary_rank
    for j, rep in enumerate(reps):
        added = ech2.add(rep, tag_index=j)
        assert added

    matrix = np.zeros((k, k), dtype=np.uint8)
    for j, rep in enumerate(reps):
        image = _permute_packed(rep, cell_perm, ncells)
        ok, used = ech2.express(image)
        if not ok:
            raise AssertionError("image of a cycle failed to reduce")
        for i in used:
            matrix[i, j] = 1
    sq = (matrix @ matrix) % 2
    if not np.array_equal(sq, np.eye(k, dtype=np.uint8)):
        raise NotInvolution("induced map squared is not the identity on homology")
    rep_indices = [sorted(_unpack_indices(r)) for r in reps]
    return InducedMap(dim, matrix, rep_indices)


def _permute_packed(words: np.ndarray, cell_perm: np.ndarray, ncells: int) -> np.ndarray:
    out = np.zeros_like(words)
    for j in _unpack_indices(words):
        t = int(cell_perm[j])
        out[t >> 6] |= np.uint64(1) << np.uint64(t & 63)
    return out


def _unpack_indices(words: np.ndarray) -> list[int]:
    out = []
    for wi in np.nonzero(words)[0]:
        word = int(words[wi])
        base = int(wi) << 6
        while word:
            low = word & -word
            out.append(base + low.bit_length() - 1)
            word ^= low
    return out


def is_free_f2z2(m: InducedMap) -> bool:
    """Freeness test for an involution t: rank(1 + t) must be half the dimension.

    Odd-dimensional spaces are never free.
    """
    n = m.space_dim
    if n % 2 == 1:
        return False
    one_plus_t = (m.matrix + np.eye(n, dtype=np.uint8)) % 2
    rank = gf2.BitMatrix.from_dense(one_plus_t).rank() if n else 0
    return rank == n // 2
