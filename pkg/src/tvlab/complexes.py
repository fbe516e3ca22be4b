"""Finite abstract simplicial complexes and their combinatorial operations.

Faces are strictly increasing tuples of vertex indices; the empty tuple is
the empty face of dimension -1.  A complex is stored by its facet antichain
together with a vertex table; the full face poset is enumerated lazily and
cached per dimension.

Two degenerate complexes are distinguished: the void complex has no faces
at all (not even the empty face, facet list is empty), while the complex
``{()}`` consists of the empty face alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import FaceNotInComplex

Face = tuple  # strictly increasing tuple of vertex indices


@dataclass(frozen=True)
class Vertex:
    index: int
    label: str
    row: int | None = None
    block: int | None = None


def make_vertices(labels, rows=None, blocks=None) -> tuple[Vertex, ...]:
    rows = rows or [None] * len(labels)
    blocks = blocks or [None] * len(labels)
    return tuple(Vertex(i, lab, rows[i], blocks[i]) for i, lab in enumerate(labels))


class SimplicialComplex:
    """Immutable simplicial complex given by a facet antichain."""

    __slots__ = ("vertices", "facets", "_faces", "_degrees", "_face_set")

    def __init__(self, vertices, facets, *, _trusted=False, _faces=None, _degrees=None):
        self.vertices = tuple(vertices)
        facets = [tuple(f) for f in facets]
        for f in facets:
            if any(f[i] >= f[i + 1] for i in range(len(f) - 1)):
                raise ValueError(f"face not strictly increasing: {f}")
            if f and (f[0] < 0 or f[-1] >= len(self.vertices)):
                raise ValueError(f"vertex index out of range in {f}")
        if not _trusted:
            facets = _maximal_faces(facets)
        self.facets = tuple(sorted(facets, key=lambda f: (len(f), f)))
        self._faces = _faces          # dict dim -> list of faces
        self._degrees = _degrees      # dict face -> size of largest containing facet
        self._face_set = None

    # -- basic queries ------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def is_void(self) -> bool:
        return len(self.facets) == 0

    @property
    def dim(self) -> int | None:
        """Dimension, or None for the void complex."""
        if self.is_void:
            return None
        return len(self.facets[-1]) - 1

    def used_vertices(self) -> tuple[int, ...]:
        seen = set()
        for f in self.facets:
            seen.update(f)
        return tuple(sorted(seen))

    def is_pure(self) -> bool:
        if self.is_void:
            return True
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    # -- face enumeration ---------------------------------------------

    def degrees(self) -> dict:
        """Map face -> size of the largest facet containing it."""
        if self._degrees is None:
            deg = {}
            for facet in sorted(self.facets, key=len, reverse=True):
                s = len(facet)
                for k in range(s, -1, -1):
                    for sub in combinations(facet, k):
                        if sub not in deg:
                            deg[sub] = s
            self._degrees = deg
        return self._degrees

    def faces_by_dim(self) -> dict:
        if self._faces is None:
            byd: dict[int, list] = {}
            for face in self.degrees():
                byd.setdefault(len(face) - 1, []).append(face)
            for d in byd:
                byd[d].sort()
            self._faces = byd
        return self._faces

    def face_set(self) -> set:
        if self._face_set is None:
            if self._degrees is not None:
                self._face_set = set(self._degrees)
            else:
                self._face_set = {f for faces in self.faces_by_dim().values() for f in faces}
        return self._face_set

    def has_face(self, face) -> bool:
        face = tuple(face)
        return face in self.face_set()

    def f_vector(self) -> tuple[int, ...]:
        """(f_0, f_1, ...) where f_k counts faces of cardinality k, f_0 = 1."""
        byd = self.faces_by_dim()
        if not byd:
            return ()
        top = max(byd)
        return tuple(len(byd.get(d, ())) for d in range(-1, top + 1))

    def facet_dimension_profile(self) -> tuple[int, ...]:
        return tuple(sorted({len(f) - 1 for f in self.facets}))

    def labels(self, face) -> tuple[str, ...]:
        return tuple(self.vertices[i].label for i in face)

    def __repr__(self) -> str:
        return (f"SimplicialComplex(n_vertices={self.n_vertices}, "
                f"n_facets={len(self.facets)}, dim={self.dim})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets and len(self.vertices) == len(other.vertices)

    def __hash__(self):
        return hash((self.facets, len(self.vertices)))


def _maximal_faces(faces) -> list:
    """Antichain sweep: drop faces contained in another, dedupe."""
    faces = sorted(set(tuple(f) for f in faces), key=len, reverse=True)
    if not faces:
        return []
    kept: list = []
    kept_sets: list = []
    for f in faces:
        fs = set(f)
        if any(fs <= ks for ks in kept_sets):
            continue
        kept.append(f)
        kept_sets.append(fs)
    return kept


# -- constructors ------------------------------------------------------


def complex_from_facets(facets, vertices=None) -> SimplicialComplex:
    """Build a complex; vertices may be a table, a count, or labels."""
    facets = [tuple(f) for f in facets]
    if vertices is None:
        n = 1 + max((max(f) for f in facets if f), default=-1)
        vertices = make_vertices([f"v{i}" for i in range(n)])
    elif isinstance(vertices, int):
        vertices = make_vertices([f"v{i}" for i in range(vertices)])
    elif vertices and not isinstance(vertices[0], Vertex):
        vertices = make_vertices(list(vertices))
    return SimplicialComplex(vertices, facets)


def simplex(n: int) -> SimplicialComplex:
    """The full simplex on n vertices (dimension n-1)."""
    if n == 0:
        return complex_from_facets([()], vertices=0)
    return complex_from_facets([tuple(range(n))], vertices=n)


def points(n: int, prefix: str = "c") -> SimplicialComplex:
    """Zero-dimensional complex with n vertices."""
    verts = make_vertices([f"{prefix}{j + 1}" for j in range(n)])
    return SimplicialComplex(verts, [(j,) for j in range(n)], _trusted=True)


def void_complex(n_vertices: int = 0) -> SimplicialComplex:
    verts = make_vertices([f"v{i}" for i in range(n_vertices)])
    return SimplicialComplex(verts, [], _trusted=True)


def empty_face_complex(n_vertices: int = 0) -> SimplicialComplex:
    """The complex whose only face is the empty face."""
    verts = make_vertices([f"v{i}" for i in range(n_vertices)])
    return SimplicialComplex(verts, [()], _trusted=True)


# -- join and deleted join ---------------------------------------------


def join(components) -> SimplicialComplex:
    """Join of complexes on disjoint vertex copies, tagged by component row."""
    components = list(components)
    if not components:
        raise ValueError("join of no components")
    verts: list[Vertex] = []
    offsets = []
    seen: set = set()
    for ci, comp in enumerate(components, start=1):
        offsets.append(len(verts))
        for v in comp.vertices:
            row = ci if v.row is None else v.row
            label = v.label
            if (label, row) in seen:
                label = f"{label}~{ci}"
            seen.add((label, row))
            verts.append(Vertex(len(verts), label, row, v.block))
    facets: list = [()]
    for comp, off in zip(components, offsets):
        new = []
        for base in facets:
            for f in comp.facets:
                new.append(base + tuple(off + i for i in f))
        facets = new
        if not facets:
            break
    return SimplicialComplex(tuple(verts), facets, _trusted=True)


def _closure_with_masks(complex_: SimplicialComplex):
    """All faces of a small complex with bitmask and extension mask."""
    faces = sorted(complex_.face_set(), key=lambda f: (len(f), f))
    fset = set(faces)
    masks = []
    for f in faces:
        m = 0
        for i in f:
            m |= 1 << i
        masks.append(m)
    ext = []
    nv = complex_.n_vertices
    for f in faces:
        e = 0
        for v in range(nv):
            if v in f:
                continue
            if tuple(sorted(f + (v,))) in fset:
                e |= 1 << v
        ext.append(e)
    return faces, masks, ext


def deleted_join(base: SimplicialComplex, k: int) -> SimplicialComplex:
    """k-fold deleted join: disjoint unions of k pairwise column-disjoint faces.

    Vertex i of copy (row) t gets index i*k + t, so the canonical order is
    base-vertex major, then row.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    verts = []
    for v in base.vertices:
        for t in range(k):
            verts.append(Vertex(v.index * k + t, v.label, t + 1, v.block))
    verts = tuple(verts)
    if base.is_void:
        return SimplicialComplex(verts, [], _trusted=True)

    faces, masks, ext = _closure_with_masks(base)
    rowid = [[tuple(i * k + t for i in f) for f in faces] for t in range(k)]
    universe = (1 << base.n_vertices) - 1

    all_faces: dict[int, list] = {}
    facets: list = []
    nface = len(faces)

    def rec(t, parts, used, extacc):
        if t == k:
            tup = tuple(sorted(x for pi, p in enumerate(parts) for x in rowid[pi][p]))
            all_faces.setdefault(len(tup) - 1, []).append(tup)
            # maximal iff no row extends into a free column
            if extacc & ~used & universe == 0:
                facets.append(tup)
            return
        for p in range(nface):
            if masks[p] & used:
                continue
            rec(t + 1, parts + [p], used | masks[p], extacc | ext[p])

    if k == 2:
        # unrolled pair loop, the common case
        row0, row1 = rowid[0], rowid[1]
        for p1 in range(nface):
            m1, e1 = masks[p1], ext[p1]
            r1 = row0[p1]
            for p2 in range(nface):
                m2 = masks[p2]
                if m1 & m2:
                    continue
                tup = tuple(sorted(r1 + row1[p2]))
                all_faces.setdefault(len(tup) - 1, []).append(tup)
                if (e1 | ext[p2]) & ~(m1 | m2) & universe == 0:
                    facets.append(tup)
    else:
        rec(0, [], 0, 0)

    for d in all_faces:
        all_faces[d].sort()
    return SimplicialComplex(verts, facets, _trusted=True, _faces=all_faces)


# -- link, deletion, restriction, skeleton ------------------------------


def link(complex_: SimplicialComplex, face) -> SimplicialComplex:
    face = tuple(face)
    if not complex_.has_face(face):
        raise FaceNotInComplex(f"{face} is not a face")
    fs = set(face)
    out = []
    for facet in complex_.facets:
        if fs <= set(facet):
            out.append(tuple(v for v in facet if v not in fs))
    return SimplicialComplex(complex_.vertices, out, _trusted=True)


def deletion(complex_: SimplicialComplex, sigma, *, forbid_empty: bool = False) -> SimplicialComplex:
    """Remove every face containing sigma (a vertex set, or one vertex).

    With sigma empty this yields the void complex (the empty set is a
    subset of every face); pass forbid_empty=True to reject that case.
    """
    sigma = {sigma} if isinstance(sigma, int) else set(sigma)
    if not sigma:
        if forbid_empty:
            raise ValueError("deletion of the empty set removes every face")
        return SimplicialComplex(complex_.vertices, [], _trusted=True)
    out = []
    for facet in complex_.facets:
        fs = set(facet)
        if sigma <= fs:
            # maximal subfaces avoiding sigma drop one element of sigma each
            for x in sigma:
                out.append(tuple(v for v in facet if v != x))
        else:
            out.append(facet)
    return SimplicialComplex(complex_.vertices, out)


def restriction(complex_: SimplicialComplex, keep) -> SimplicialComplex:
    """Faces contained in the vertex set ``keep``."""
    keep = set(keep)
    out = [tuple(v for v in facet if v in keep) for facet in complex_.facets]
    return SimplicialComplex(complex_.vertices, out)


def skeleton(complex_: SimplicialComplex, m: int) -> SimplicialComplex:
    """Faces of dimension at most m."""
    if m < -1:
        raise ValueError("m must be >= -1")
    out = []
    for facet in complex_.facets:
        if len(facet) - 1 <= m:
            out.append(facet)
        else:
            out.extend(combinations(facet, m + 1))
    return SimplicialComplex(complex_.vertices, out)


# -- degree, f-triangle, Euler characteristics --------------------------


def degree(complex_: SimplicialComplex, face) -> int:
    """Cardinality of the largest facet containing the face."""
    face = tuple(face)
    deg = complex_.degrees()
    if face not in deg:
        raise FaceNotInComplex(f"{face} is not a face")
    return deg[face]


@dataclass(frozen=True)
class FTriangle:
    """Face counts refined by degree, plus the diagonal h-vector."""

    d: int
    entries: tuple  # (d+2) x (d+2) table, entries[i][j] counts |A|=i, degree j

    @property
    def h_diagonal(self) -> tuple[int, ...]:
        out = []
        for j in range(self.d + 2):
            h = 0
            for i in range(j + 1):
                h += (-1) ** (j + i) * self.entries[i][j]
            out.append(h)
        return tuple(out)

    def f_vector(self) -> tuple[int, ...]:
        return tuple(sum(self.entries[i][j] for j in range(self.d + 2))
                     for i in range(self.d + 2))


def f_triangle(complex_: SimplicialComplex) -> FTriangle:
    if complex_.is_void:
        return FTriangle(-1, ((0,),))
    d = complex_.dim
    table = [[0] * (d + 2) for _ in range(d + 2)]
    for face, dg in complex_.degrees().items():
        table[len(face)][dg] += 1
    return FTriangle(d, tuple(tuple(row) for row in table))


def euler_characteristic(complex_: SimplicialComplex) -> int:
    chi = 0
    for dim, faces in complex_.faces_by_dim().items():
        if dim >= 0:
            chi += (-1) ** dim * len(faces)
    return chi


def reduced_euler(complex_: SimplicialComplex) -> int:
    chi = 0
    for dim, faces in complex_.faces_by_dim().items():
        chi += (-1) ** dim * len(faces)
    return chi


# -- components, intersections, induced subcomplexes --------------------


def connected_components(complex_: SimplicialComplex) -> list[SimplicialComplex]:
    """Components of the complex, as induced subcomplexes (empty face shared)."""
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for facet in complex_.facets:
        for v in facet:
            parent.setdefault(v, v)
        for a, b in zip(facet, facet[1:]):
            union(a, b)
    groups: dict[int, list] = {}
    for facet in complex_.facets:
        if not facet:
            continue
        groups.setdefault(find(facet[0]), []).append(facet)
    return [SimplicialComplex(complex_.vertices, fs, _trusted=True)
            for _, fs in sorted(groups.items())]


def intersection(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Common-face complex of two complexes over the same vertex table."""
    if len(a.vertices) != len(b.vertices):
        raise ValueError("complexes must share a vertex table")
    out = []
    bsets = [set(g) for g in b.facets]
    for f in a.facets:
        fs = set(f)
        for gs in bsets:
            out.append(tuple(sorted(fs & gs)))
    return SimplicialComplex(a.vertices, out)


def induced_by_facets(complex_: SimplicialComplex, facet_subset) -> SimplicialComplex:
    return SimplicialComplex(complex_.vertices, list(facet_subset), _trusted=True)


def apply_vertex_map(complex_: SimplicialComplex, perm) -> SimplicialComplex:
    """Relabel faces by a vertex permutation (same vertex table)."""
    out = [tuple(sorted(perm[v] for v in facet)) for facet in complex_.facets]
    return SimplicialComplex(complex_.vertices, out, _trusted=True)


def row_swap_permutation(complex_: SimplicialComplex) -> list[int]:
    """For a 2-fold deleted join, the involution exchanging the two rows."""
    perm = [0] * complex_.n_vertices
    by_label: dict = {}
    for v in complex_.vertices:
        by_label.setdefault(v.label, {})[v.row] = v.index
    for v in complex_.vertices:
        other = 1 if v.row == 2 else 2
        perm[v.index] = by_label[v.label][other]
    return perm


# -- isomorphism via canonical labeling ---------------------------------


def canonical_form(complex_: SimplicialComplex, max_vertices: int = 12) -> tuple:
    """Lexicographically minimal facet encoding over vertex relabelings.

    Brute force with invariant pruning; intended for small complexes.
    """
    used = complex_.used_vertices()
    if len(used) > max_vertices:
        raise ValueError(f"canonical_form supports at most {max_vertices} used vertices")
    facets = [tuple(f) for f in complex_.facets]
    # group vertices by (degree in facets, multiset of facet sizes at vertex)
    sig: dict[int, tuple] = {}
    for v in used:
        sizes = tuple(sorted(len(f) for f in facets if v in f))
        sig[v] = sizes
    order_groups: dict[tuple, list[int]] = {}
    for v in used:
        order_groups.setdefault(sig[v], []).append(v)

    from itertools import permutations

    best: tuple | None = None
    group_items = sorted(order_groups.items())
    # vertices may only map to vertices with the same signature
    group_lists = [vs for _, vs in group_items]
    positions: list[int] = []
    start = 0
    for vs in group_lists:
        positions.append(start)
        start += len(vs)

    def rec(gi: int, assignment: dict):
        nonlocal best
        if gi == len(group_lists):
            enc = tuple(sorted(tuple(sorted(assignment[v] for v in f)) for f in facets))
            if best is None or enc < best:
                best = enc
            return
        vs = group_lists[gi]
        base = positions[gi]
        for perm in permutations(range(len(vs))):
            for v, p in zip(vs, perm):
                assignment[v] = base + p
            rec(gi + 1, assignment)
        for v in vs:
            assignment.pop(v, None)

    rec(0, {})
    return best if best is not None else tuple(facets)


def are_isomorphic(a: SimplicialComplex, b: SimplicialComplex, max_vertices: int = 12) -> bool:
    if len(a.used_vertices()) != len(b.used_vertices()):
        return False
    if sorted(len(f) for f in a.facets) != sorted(len(f) for f in b.facets):
        return False
    return canonical_form(a, max_vertices) == canonical_form(b, max_vertices)


# -- vertex-facet incidence bitsets (shared helper) ----------------------


def facet_bitsets(facets, n_vertices: int):
    """Per-vertex packed bit rows over facet positions."""
    nf = len(facets)
    rows = np.zeros((n_vertices, n_words_cols(nf)), dtype=np.uint64)
    one = np.uint64(1)
    for pos, f in enumerate(facets):
        wi = pos >> 6
        bit = one << np.uint64(pos & 63)
        for v in f:
            rows[v, wi] |= bit
    return rows


def n_words_cols(n: int) -> int:
    return max(1, (n + 63) >> 6)
