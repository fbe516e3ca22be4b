"""Machine-checked claim registry backing the verify-paper command.

Every claim records what was expected, what was computed, and a status in
pass / fail / skipped / exhausted.  Heavy homology results are cached by
content hash so warm reruns are fast and byte-identical up to timing.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import tempfile
import time
from dataclasses import dataclass

import numpy as np

from . import bounds as bd
from .complexes import (
    SimplicialComplex,
    apply_vertex_map,
    are_isomorphic,
    complex_from_facets,
    f_triangle,
    row_swap_permutation,
    simplex,
)
from .fundamental import pi1_presentation, try_trivialize
from .homology import betti_numbers, induced_involution, is_free_f2z2
from .matroids import block_deleted_join, block_matroid, chessboard, uniform_matroid
from .products import (
    conf2,
    connectivity_floor,
    deleted_product,
    homological_connectivity,
    product_betti,
)
from .shelling import (
    is_vertex_decomposable,
    link_in_deleted_join,
    obstruction_face,
    search_shelling,
    shed_obstruction_for_free_block,
    shell_block_deleted_join,
    covering_by_facet_dimension,
    verify_shelling_intersection,
    verify_shelling_pairwise,
)


@dataclass
class ClaimResult:
    claim_id: str
    description: str
    expected: str
    computed: str
    status: str          # pass | fail | skipped | exhausted
    seconds: float


@dataclass
class VerificationReport:
    rmax: int
    budget: int
    results: list

    @property
    def ok(self) -> bool:
        return all(r.status in ("pass", "skipped") for r in self.results)

    def to_json_dict(self, include_timing: bool = True) -> dict:
        rows = []
        for r in self.results:
            row = {
                "claim": r.claim_id,
                "description": r.description,
                "expected": r.expected,
                "computed": r.computed,
                "status": r.status,
            }
            if include_timing:
                row["seconds"] = round(r.seconds, 3)
            rows.append(row)
        return {"rmax": self.rmax, "budget": self.budget, "results": rows}

    def to_markdown(self) -> str:
        lines = ["| claim | status | expected | computed | s |",
                 "|---|---|---|---|---|"]
        for r in self.results:
            lines.append(f"| {r.claim_id} | {r.status} | {r.expected} "
                         f"| {r.computed} | {r.seconds:.1f} |")
        return "\n".join(lines)


class ResultCache:
    """Content-addressed JSON store with atomic writes."""

    def __init__(self, directory: str | None):
        self.directory = directory
        if directory:
            os.makedirs(directory, exist_ok=True)

    def _path(self, key: str) -> str:
        return os.path.join(self.directory, key + ".json")

    def get(self, key: str):
        if not self.directory:
            return None
        try:
            with open(self._path(key)) as fh:
                return json.load(fh)
        except (OSError, ValueError):
            return None

    def put(self, key: str, value) -> None:
        if not self.directory:
            return
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(value, fh, sort_keys=True)
        os.replace(tmp, self._path(key))


def complex_digest(complex_: SimplicialComplex) -> str:
    payload = json.dumps([list(f) for f in complex_.facets]).encode()
    return hashlib.sha256(payload).hexdigest()[:24]


def cached_betti(complex_: SimplicialComplex, cache: ResultCache) -> tuple:
    key = "betti-" + complex_digest(complex_)
    hit = cache.get(key)
    if hit is not None:
        return tuple(hit)
    values = tuple(betti_numbers(complex_).values)
    cache.put(key, list(values))
    return values


def cached_product_profile(complex_: SimplicialComplex, k: int,
                           cache: ResultCache) -> tuple:
    """(betti, dim) of the k-fold deleted product, cache-backed."""
    key = f"delprod{k}-" + complex_digest(complex_)
    hit = cache.get(key)
    if hit is not None:
        return tuple(hit["betti"]), hit["dim"]
    p = deleted_product(complex_, k)
    values = tuple(product_betti(p).values)
    cache.put(key, {"betti": list(values), "dim": p.dim})
    return values, p.dim


# -- random corpora for the cross-pipeline claims -------------------------


def random_shellable_complex(rng: random.Random, max_vertices: int = 10):
    """Grow a facet order that stays a valid shelling prefix; returns
    (complex, order)."""
    n = rng.randint(3, max_vertices)
    facets: list[tuple] = []
    masks: list[int] = []

    def can_add(cand: tuple) -> bool:
        cm = 0
        for v in cand:
            cm |= 1 << v
        for m in masks:
            if cm & ~m == 0 or m & ~cm == 0:
                return False
        if not facets:
            return True
        wmask = 0
        for v in cand:
            sub = cm ^ (1 << v)
            if any(sub & ~m == 0 for m in masks):
                wmask |= 1 << v
        if wmask == 0:
            return False
        return not any(wmask & ~m == 0 for m in masks)

    target = rng.randint(2, 9)
    tries = 0
    while len(facets) < target and tries < 200:
        tries += 1
        size = rng.randint(1, min(5, n))
        cand = tuple(sorted(rng.sample(range(n), size)))
        if can_add(cand):
            facets.append(cand)
            m = 0
            for v in cand:
                m |= 1 << v
            masks.append(m)
    cpx = complex_from_facets(list(facets), vertices=n)
    return cpx, tuple(facets)


def random_complex_and_order(rng: random.Random, max_vertices: int = 8):
    n = rng.randint(2, max_vertices)
    cand = set()
    for _ in range(rng.randint(1, 7)):
        size = rng.randint(1, min(4, n))
        cand.add(tuple(sorted(rng.sample(range(n), size))))
    cpx = complex_from_facets(sorted(cand), vertices=n)
    order = list(cpx.facets)
    rng.shuffle(order)
    return cpx, tuple(order)


# -- individual claims -----------------------------------------------------


def _fmt(v) -> str:
    return json.dumps(v) if not isinstance(v, str) else v


def _claim_join_betti_r2(cache, budget):
    dj = block_deleted_join(block_matroid(2), 2)
    from .complexes import euler_characteristic

    chi = euler_characteristic(dj)
    bv = cached_betti(dj, cache)
    pres = pi1_presentation(dj)
    tri = try_trivialize(pres, budget=budget)
    ok = chi == 2 and bv[2] != 0 and tri == "trivial"
    return ("chi=2, b2>0, pi1 trivial",
            f"chi={chi}, betti={list(bv)}, pi1={tri}", ok)


def _claim_join_betti(r, zero_upto, middle, lower_top, cache):
    dj = block_deleted_join(block_matroid(r), 2)
    bv = cached_betti(dj, cache)
    ok = (all(bv[i] == 0 for i in range(zero_upto + 1))
          and bv[2 * r - 2] == middle and bv[2 * r - 1] >= lower_top)
    return (f"zeros through {zero_upto}, b{2*r-2}={middle}, b{2*r-1}>={lower_top}",
            f"betti={list(bv)}", ok)


def _claim_join_shelling(r, cache):
    bjs = shell_block_deleted_join(r)
    ok1 = bool(bjs.shelling.witnesses) or len(bjs.shelling.order) <= 1
    ok2 = verify_shelling_intersection(bjs.complex, bjs.shelling.order)
    h = f_triangle(bjs.complex).h_diagonal
    bv = cached_betti(bjs.complex, cache)
    hmatch = all((bv[j - 1] if j - 1 < len(bv) else 0) == h[j] for j in range(1, len(h)))
    ok = ok1 and ok2 and hmatch
    return ("both verifiers pass, h matches Betti",
            f"pairwise={ok1}, intersection={ok2}, h={list(h)}", ok)


def _claim_wide_betti(r, cache):
    dj = block_deleted_join(block_matroid(r, r + 1), 2)
    bv = cached_betti(dj, cache)
    ok = all(bv[i] == 0 for i in range(2 * r - 1)) and dj.is_pure()
    if r >= 3:
        bjs = shell_block_deleted_join(r, width=r + 1)
        ok = ok and (bool(bjs.shelling.witnesses) or len(bjs.shelling.order) <= 1)
    return (f"pure, zeros through {2*r-2}" + (", shellable" if r >= 3 else ""),
            f"betti={list(bv)}", ok)


def _claim_covering_r3(cache):
    cov = covering_by_facet_dimension(3)
    parts = [cached_betti(c, cache) for c in cov.lower_components]
    inters = [cached_betti(c, cache) for c in cov.intersections]
    top = cached_betti(cov.top, cache)
    perm = row_swap_permutation(cov.complex)
    swapped = apply_vertex_map(cov.lower_components[0], perm)
    swap_ok = set(swapped.facets) == set(cov.lower_components[1].facets)
    ok = (all(all(b == 0 for b in p) for p in parts)
          and all(list(i) == [0, 0, 0, 4] for i in inters)
          and all(top[i] == 0 for i in range(5)) and top[5] > 0
          and swap_ok)
    return ("parts contractible, swap exchanges them, intersections 4 spheres, "
            "top concentrated",
            f"parts={parts}, inters={inters}, top={list(top)}, swap={swap_ok}", ok)


def _claim_involution_r3(cache, budget):
    dj = block_deleted_join(block_matroid(3), 2)
    imap = induced_involution(dj, row_swap_permutation(dj), 4)
    from .gf2 import BitMatrix

    one_plus = (imap.matrix + np.eye(imap.space_dim, dtype=np.uint8)) % 2
    rank = BitMatrix.from_dense(one_plus).rank()
    free = is_free_f2z2(imap)
    ok = imap.space_dim == 8 and rank == 4 and free
    return ("dim 8, rank(1+t)=4, free module",
            f"dim={imap.space_dim}, rank={rank}, free={free}", ok)


def _claim_nonshellable(k, r, budget):
    res = search_shelling(chessboard(k, r), budget=budget)
    if res.status == "exhausted":
        return ("not-shellable", "search exhausted", None)
    return ("not-shellable", res.status, res.status == "not-shellable")


def _claim_link_obstruction(budget):
    m5 = block_matroid(5, verify=False)
    lk = link_in_deleted_join(m5, 3, obstruction_face(5, 3))
    iso = are_isomorphic(lk, chessboard(2, 2))
    return ("link isomorphic to the 2x2 chessboard",
            f"{lk.n_vertices} vertices, {len(lk.facets)} facets, iso={iso}", iso)


def _claim_vertex_decomposability(budget):
    dj = block_deleted_join(block_matroid(3), 2)
    res = is_vertex_decomposable(dj, budget=budget)
    w_ids = [v.index for v in dj.vertices if v.block == 3]
    obstruction = shed_obstruction_for_free_block(dj, w_ids)
    if res.status == "exhausted":
        ok = obstruction
        return ("not decomposable, or exhausted with first-shed obstruction",
                f"search=exhausted, obstruction={obstruction}", ok)
    ok = res.status == "no" and obstruction
    return ("not decomposable, or exhausted with first-shed obstruction",
            f"search={res.status}, obstruction={obstruction}", ok)


def _claim_simplex_spheres(cache):
    rows = []
    ok = True
    for r in range(2, 6):
        p = deleted_product(simplex(r), 2)
        bv = product_betti(p)
        want = tuple(1 if i == r - 2 else 0 for i in range(r - 1))
        ok = ok and tuple(bv.values) == want
        rows.append(f"r={r}:{list(bv.values)}")
    return ("single sphere in degree r-2 for k=2, r=2..5", "; ".join(rows), ok)


def _claim_simplex_connectivity_k3(cache):
    rows = []
    ok = True
    for r in range(3, 6):
        p = deleted_product(simplex(r), 3)
        bv = product_betti(p)
        conn = homological_connectivity(p, bv)
        ok = ok and conn == r - 4
        rows.append(f"r={r}:conn={conn},betti={list(bv.values)}")
    return ("connectivity exactly r-k-1 for k=3, r=3..5", "; ".join(rows), ok)


def _product_corpus(rmax: int):
    corpus = [
        ("square-r2", block_matroid(2), 2, 2),
        ("square-r3", block_matroid(3), 3, 2),
        ("square-r3-k3", block_matroid(3), 3, 3),
        ("wide-r2", block_matroid(2, 3), 3, 2),
        ("wide-r3", block_matroid(3, 4), 4, 2),
        ("uniform-2-4", uniform_matroid(2, 4), 2, 2),
        ("uniform-2-5", uniform_matroid(2, 5), 2, 2),
        ("uniform-3-6", uniform_matroid(3, 6), 2, 2),
        ("uniform-3-6-k3", uniform_matroid(3, 6), 2, 3),
        ("uniform-4-4", uniform_matroid(4, 4), 1, 2),
    ]
    if rmax >= 4:
        corpus.append(("square-r4", block_matroid(4), 4, 2))
    return corpus


def _claim_product_floor(cache, rmax):
    rows = []
    ok = True
    for name, matroid, b, k in _product_corpus(rmax):
        values, dim = cached_product_profile(matroid.complex, k, cache)
        conn = _connectivity_from_values(values, dim)
        floor = connectivity_floor(matroid.rank, b, k)
        good = conn >= floor
        ok = ok and good
        rows.append(f"{name}(k={k}):conn={conn}>=floor={floor}")
    return ("connectivity floor respected across the corpus", "; ".join(rows), ok)


def _connectivity_from_values(values: tuple, dim: int | None) -> int:
    if dim is None:
        return -2
    if values and values[0]:
        return -1
    c = -1
    for i in range(dim + 1):
        if i < len(values) and values[i]:
            return i - 1
        c = i
    return c


def _claim_conf2_wide_r3(cache):
    c = conf2(block_matroid(3, 4))
    bv = product_betti(c)
    conn = homological_connectivity(c, bv)
    ok = conn == 1 and bv[2] != 0
    return ("connectivity exactly 1 and nonzero second homology",
            f"conn={conn}, betti={list(bv.values)}", ok)


def _claim_bounds_grid(cache):
    bad = 0
    checked = 0
    for b in range(1, 51):
        for r in range(1, 51):
            for d in range(1, 51):
                x = d + 1
                top = bd.floor_two_ell(b, r, x)
                for p in range(2, top + 1):
                    if bd.is_prime_power(p):
                        checked += 1
                        if bd.quadratic_margin(p, b, r, x) < 0:
                            bad += 1
    return ("zero violations on the 50^3 grid",
            f"{checked} prime powers checked, {bad} violations", bad == 0)


def _trial_division_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, n + 1):
        if n % p == 0:
            # the first divisor found is prime
            while n % p == 0:
                n //= p
            return n == 1
    return False


def _claim_npp_oracle(cache):
    bad = [n for n in range(10_001)
           if bd.is_prime_power(n) != _trial_division_prime_power(n)]
    npp_bad = []
    for n in range(0, 101):
        k = bd.npp_ceiling(n)
        if bd.is_prime_power(k) or k < max(2, n):
            npp_bad.append(n)
    return ("prime-power test matches trial division up to 10^4",
            f"mismatches={bad[:5]}, bad_ceilings={npp_bad[:5]}",
            not bad and not npp_bad)


def _claim_random_h_vs_betti(cache, seed=2024, count=200):
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        cpx, order = random_shellable_complex(rng)
        res = verify_shelling_pairwise(cpx, order)
        if not res.ok:
            bad += 1
            continue
        h = f_triangle(cpx).h_diagonal
        bv = betti_numbers(cpx)
        if any((bv[j - 1] if j - 1 < len(bv) else 0) != h[j] for j in range(1, len(h))):
            bad += 1
    return (f"{count} random shellable complexes match h to Betti",
            f"failures={bad}", bad == 0)


def _claim_random_verifier_agreement(cache, seed=4096, count=200):
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        cpx, order = random_complex_and_order(rng)
        a = verify_shelling_pairwise(cpx, order).ok
        b = verify_shelling_intersection(cpx, order)
        if a != b:
            bad += 1
    return (f"{count} random orders judged identically by both verifiers",
            f"disagreements={bad}", bad == 0)


REGISTRY = [
    # (claim id, description, min rmax, fn(cache, budget, rmax))
    ("deleted-join.r2.invariants", "square family r=2: Euler 2, b2 nonzero, trivial pi1",
     2, lambda c, bud, rm: _claim_join_betti_r2(c, bud)),
    ("deleted-join.r3.betti", "square family r=3: zeros through 3, then 8 and >=1",
     3, lambda c, bud, rm: _claim_join_betti(3, 3, 8, 1, c)),
    ("deleted-join.r4.betti", "square family r=4: zeros through 5, then 54 and >=625",
     4, lambda c, bud, rm: _claim_join_betti(4, 5, 54, 625, c)),
    ("deleted-join.r3.shelling", "square family r=3: certified shelling, h equals Betti",
     3, lambda c, bud, rm: _claim_join_shelling(3, c)),
    ("deleted-join.r4.shelling", "square family r=4: certified shelling, h equals Betti",
     4, lambda c, bud, rm: _claim_join_shelling(4, c)),
    ("wide-family.r2.betti", "wide family r=2: pure and 2-connected",
     2, lambda c, bud, rm: _claim_wide_betti(2, c)),
    ("wide-family.r3.betti", "wide family r=3: pure, 4-connected, shellable",
     3, lambda c, bud, rm: _claim_wide_betti(3, c)),
    ("covering.r3", "two-piece covering of the r=3 deleted join",
     3, lambda c, bud, rm: _claim_covering_r3(c)),
    ("involution.freeness.r3", "row swap acts freely on middle homology",
     3, lambda c, bud, rm: _claim_involution_r3(c, bud)),
    ("non-shellable.chessboard-2-2", "2x2 chessboard complex is not shellable",
     2, lambda c, bud, rm: _claim_nonshellable(2, 2, bud)),
    ("non-shellable.chessboard-3-3", "3x3 chessboard complex is not shellable",
     2, lambda c, bud, rm: _claim_nonshellable(3, 3, bud)),
    ("link-obstruction.r5k3", "pivotal link in the 3-fold join is a 2x2 chessboard",
     2, lambda c, bud, rm: _claim_link_obstruction(bud)),
    ("vertex-decomposability.r3", "r=3 deleted join is not vertex-decomposable",
     3, lambda c, bud, rm: _claim_vertex_decomposability(bud)),
    ("deleted-product.simplex.k2", "2-fold products of simplices are single spheres",
     2, lambda c, bud, rm: _claim_simplex_spheres(c)),
    ("deleted-product.simplex.k3-connectivity",
     "3-fold products of simplices: connectivity exactly r-4",
     2, lambda c, bud, rm: _claim_simplex_connectivity_k3(c)),
    ("deleted-product.connectivity-floor", "floor bound over the matroid corpus",
     2, lambda c, bud, rm: _claim_product_floor(c, rm)),
    ("configuration-space.wide-r3", "two points in the wide r=3 family",
     3, lambda c, bud, rm: _claim_conf2_wide_r3(c)),
    ("bounds.quadratic-grid", "admissible prime powers satisfy the quadratic, exactly",
     2, lambda c, bud, rm: _claim_bounds_grid(c)),
    ("bounds.npp-oracle", "prime-power and ceiling tests against trial division",
     2, lambda c, bud, rm: _claim_npp_oracle(c)),
    ("random.h-vs-betti", "random shellable corpus: h equals Betti",
     2, lambda c, bud, rm: _claim_random_h_vs_betti(c)),
    ("random.verifier-agreement", "random orders: the two verifiers agree",
     2, lambda c, bud, rm: _claim_random_verifier_agreement(c)),
]


def run_registry(rmax: int = 3, budget: int = 100_000,
                 cache_dir: str | None = None, only: list | None = None) -> VerificationReport:
    if rmax not in (2, 3, 4):
        raise ValueError("rmax must be 2, 3, or 4")
    cache = ResultCache(cache_dir)
    results = []
    for claim_id, desc, min_rmax, fn in REGISTRY:
        if only and claim_id not in only:
            continue
        t0 = time.time()
        if rmax < min_rmax:
            results.append(ClaimResult(claim_id, desc, "", f"needs rmax >= {min_rmax}",
                                       "skipped", 0.0))
            continue
        try:
            expected, computed, ok = fn(cache, budget, rmax)
            status = "exhausted" if ok is None else ("pass" if ok else "fail")
        except Exception as exc:  # a crashed claim is a failed claim
            expected, computed, status = "", f"error: {exc}", "fail"
        results.append(ClaimResult(claim_id, desc, _fmt(expected), _fmt(computed),
                                   status, time.time() - t0))
    return VerificationReport(rmax, budget, results)
