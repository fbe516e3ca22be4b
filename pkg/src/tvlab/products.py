"""The k-fold deleted product as a regular CW complex.

Cells are ordered k-tuples of pairwise vertex-disjoint non-empty faces;
the dimension of a cell is the sum of the factor dimensions.  The cellular
boundary drops one vertex from one factor at a time (factors must stay
non-empty), which over GF(2) squares to zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex
from .errors import CellBudgetExceeded
from .homology import BettiVector, ChainComplexF2, betti_f2
from .matroids import Matroid

ProductCell = tuple  # ordered tuple of non-empty faces


@dataclass
class CWProductComplex:
    base: SimplicialComplex
    k: int
    cells: dict            # dim -> sorted list of ProductCell

    @property
    def dim(self) -> int | None:
        return max(self.cells) if self.cells else None

    def n_cells(self, d: int) -> int:
        return len(self.cells.get(d, ()))

    def total_cells(self) -> int:
        return sum(len(v) for v in self.cells.values())

    def top_cells(self) -> list:
        return self.cells[self.dim] if self.cells else []


def deleted_product(complex_: SimplicialComplex, k: int,
                    max_cells: int = 5_000_000) -> CWProductComplex:
    """All ordered k-tuples of pairwise disjoint non-empty faces."""
    if k < 1:
        raise ValueError("k must be >= 1")
    faces = [f for f in sorted(complex_.face_set(), key=lambda f: (len(f), f)) if f]
    masks = []
    for f in faces:
        m = 0
        for v in f:
            m |= 1 << v
        masks.append(m)
    by_dim: dict[int, list] = {}
    count = 0
    n = len(faces)

    def rec(t: int, chosen: tuple, used: int, dim: int):
        nonlocal count
        if t == k:
            by_dim.setdefault(dim, []).append(chosen)
            count += 1
            if count > max_cells:
                raise CellBudgetExceeded(
                    f"deleted product exceeds the cell budget of {max_cells}")
            return
        for i in range(n):
            if masks[i] & used:
                continue
            rec(t + 1, chosen + (faces[i],), used | masks[i], dim + len(faces[i]) - 1)

    rec(0, (), 0, 0)
    for d in by_dim:
        by_dim[d].sort()
    return CWProductComplex(complex_, k, by_dim)


def product_chain_complex(product: CWProductComplex, check: str = "auto") -> ChainComplexF2:
    """Cellular chains of the deleted product, augmented in dimension -1."""
    cells = {d: list(cs) for d, cs in sorted(product.cells.items())}
    index = {d: {c: i for i, c in enumerate(cs)} for d, cs in cells.items()}
    boundaries: dict[int, list] = {}
    if cells:
        cells[-1] = [()]
        boundaries[-1] = [()]
    for d, cs in product.cells.items():
        rows = []
        lower = index.get(d - 1, {})
        for cell in cs:
            row = set()
            if d == 0:
                rows.append((0,))
                continue
            for fi, face in enumerate(cell):
                if len(face) < 2:
                    continue
                for j in range(len(face)):
                    sub = cell[:fi] + (face[:j] + face[j + 1:],) + cell[fi + 1:]
                    row.add(lower[sub])
            rows.append(tuple(sorted(row)))
        boundaries[d] = rows
    cc = ChainComplexF2(cells, boundaries)
    from .homology import _run_check

    _run_check(cc, check)
    return cc


def product_betti(product: CWProductComplex, method: str = "auto") -> BettiVector:
    if not product.cells:
        return BettiVector(())
    return betti_f2(product_chain_complex(product), method=method)


def homological_connectivity(product: CWProductComplex,
                             betti: BettiVector | None = None) -> int:
    """Largest c with vanishing reduced homology in all degrees <= c.

    Conventions: -2 for an empty complex, -1 when disconnected.  When all
    reduced homology up to the top dimension vanishes the top dimension is
    returned (nothing higher can be certified from the cells).
    """
    if not product.cells:
        return -2
    bv = betti if betti is not None else product_betti(product)
    if bv[0]:
        return -1
    c = -1
    for i in range(product.dim + 1):
        if bv[i]:
            return i - 1
        c = i
    return c


def conf2(matroid: Matroid) -> CWProductComplex:
    """Cell model of the ordered two-point configuration space.

    The 2-fold deleted product is a deformation retract of the space of
    pairs of distinct points, so its homology is the configuration
    space's.
    """
    return deleted_product(matroid.complex, 2)


def connectivity_floor(r: int, b: int, k: int) -> int:
    """The guaranteed connectivity floor r - 2 - floor(r(k-1)/b)."""
    return r - 2 - (r * (k - 1)) // b


def basis_surplus_flags(b: int, r: int, k: int) -> dict:
    """Which of the two surplus hypotheses the basis count satisfies.

    The stronger exactness statement is stated under b >= r(k-1)+1 in one
    place and proved under b >= (r-1)(k-1)+1 in another; both are
    reported and the caller decides.
    """
    return {
        "b_ge_r_km1_plus_1": b >= r * (k - 1) + 1,
        "b_ge_rm1_km1_plus_1": b >= (r - 1) * (k - 1) + 1,
    }


def factor_transposed(product: CWProductComplex, i: int, j: int) -> CWProductComplex:
    """Swap two factor slots; a cellwise automorphism of the product."""
    out: dict[int, list] = {}
    for d, cs in product.cells.items():
        mapped = []
        for cell in cs:
            c = list(cell)
            c[i], c[j] = c[j], c[i]
            mapped.append(tuple(c))
        out[d] = sorted(mapped)
    return CWProductComplex(product.base, product.k, out)
