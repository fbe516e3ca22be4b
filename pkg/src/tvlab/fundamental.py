"""Edge-path group presentations and Tietze simplification.

Generators are the edges outside a spanning tree of the 1-skeleton; each
triangle contributes one relator.  ``try_trivialize`` is a semi-decision:
it answers "trivial" only when every generator has been eliminated within
the rewrite budget, and "inconclusive" otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, connected_components
from .errors import Disconnected


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple            # generator ids (indices of non-tree edges)
    relators: tuple              # tuples of nonzero ints, sign = exponent
    edge_of_generator: dict      # generator id -> edge (u, v)

    def describe(self) -> str:
        return f"<{len(self.generators)} generators | {len(self.relators)} relators>"


def pi1_presentation(complex_: SimplicialComplex) -> GroupPresentation:
    """Spanning-tree presentation of the fundamental group of the 2-skeleton."""
    byd = complex_.faces_by_dim()
    verts = [f[0] for f in byd.get(0, [])]
    if not verts:
        raise Disconnected("complex has no vertices")
    if len(connected_components(complex_)) != 1:
        raise Disconnected("fundamental group needs a connected complex")
    edges = byd.get(1, [])
    triangles = byd.get(2, [])

    adj: dict[int, list] = {v: [] for v in verts}
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, i))
        adj[v].append((u, i))

    root = verts[0]
    tree_edges: set[int] = set()
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for v, ei in adj[u]:
            if v not in seen:
                seen.add(v)
                tree_edges.add(ei)
                stack.append(v)

    gen_ids = [i for i in range(len(edges)) if i not in tree_edges]
    gen_index = {ei: gi + 1 for gi, ei in enumerate(gen_ids)}  # 1-based letters
    edge_pos = {edges[i]: i for i in range(len(edges))}

    def letter(u, v) -> int:
        """Signed generator for the oriented edge u -> v (0 if a tree edge)."""
        key = (u, v) if u < v else (v, u)
        ei = edge_pos[key]
        if ei in tree_edges:
            return 0
        g = gen_index[ei]
        return g if u < v else -g

    relators = []
    for a, b, c in triangles:
        word = [letter(a, b), letter(b, c), letter(c, a)]
        word = tuple(x for x in word if x != 0)
        relators.append(word)

    return GroupPresentation(
        tuple(range(1, len(gen_ids) + 1)),
        tuple(relators),
        {gi + 1: edges[ei] for gi, ei in enumerate(gen_ids)},
    )


def _free_reduce(word: tuple) -> tuple:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    # cyclic reduction
    while len(out) >= 2 and out[0] == -out[-1]:
        out = out[1:-1]
    return tuple(out)


def _substitute(word: tuple, gen: int, repl: tuple) -> tuple:
    inv = tuple(-x for x in reversed(repl))
    out: list[int] = []
    for x in word:
        if x == gen:
            out.extend(repl)
        elif x == -gen:
            out.extend(inv)
        else:
            out.append(x)
    return _free_reduce(tuple(out))


def try_trivialize(pres: GroupPresentation, budget: int = 100_000) -> str:
    """Tietze simplification; returns "trivial" or "inconclusive"."""
    gens = set(pres.generators)
    relators = [_free_reduce(w) for w in pres.relators]
    steps = 0

    while gens and steps < budget:
        relators = [w for w in relators if w]
        progressed = False

        # kill generators defined by length-1 relators
        for w in relators:
            if len(w) == 1:
                g = abs(w[0])
                relators = [_free_reduce(tuple(x for x in r if abs(x) != g))
                            for r in relators]
                gens.discard(g)
                steps += 1
                progressed = True
                break
        if progressed:
            continue

        # identify generators via length-2 relators with distinct letters
        for w in relators:
            if len(w) == 2 and abs(w[0]) != abs(w[1]):
                g = abs(w[1])
                # w = (a, b) means b = a^{-1}
                a = w[0]
                repl = (-a,) if w[1] == g else (a,)
                relators = [_substitute(r, g, repl) for r in relators]
                gens.discard(g)
                steps += 1
                progressed = True
                break
        if progressed:
            continue

        # eliminate a generator occurring exactly once in some relator
        candidate = None
        for r in sorted(relators, key=lambda w: (len(w), w)):
            for g in sorted(gens):
                if sum(1 for x in r if abs(x) == g) == 1:
                    candidate = (r, g)
                    break
            if candidate:
                break
        if candidate is None:
            break
        r, g = candidate
        # rotate so the +-g letter leads, then g = inverse of the rest
        pos = next(i for i, x in enumerate(r) if abs(x) == g)
        rot = r[pos:] + r[:pos]
        rest = rot[1:]
        repl = tuple(-x for x in reversed(rest))
        if rot[0] == -g:
            repl = tuple(-x for x in reversed(repl))
        new_relators = []
        for other in relators:
            if other is r:
                continue
            new_relators.append(_substitute(other, g, repl))
            steps += len(other)
        relators = new_relators
        gens.discard(g)
        steps += 1

    return "trivial" if not gens else "inconclusive"
