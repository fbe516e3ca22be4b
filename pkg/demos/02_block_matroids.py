"""The block matroid family: rank r, a prescribed number of disjoint bases.

The square family (width r) is the tight example: r disjoint bases, and
its 2-fold deleted join fails to be as connected as its dimension allows.
Widening the blocks by one column adds a basis and repairs connectivity.

Run:  python3 demos/02_block_matroids.py
"""

from tvlab.matroids import (
    block_deleted_join,
    block_matroid,
    disjoint_bases,
    has_coloops,
    is_matroid,
    uniform_matroid,
)

for r in (2, 3, 4):
    m = block_matroid(r)
    print(f"square family r={r}: {m.complex.n_vertices} elements, "
          f"{len(m.bases())} bases, {len(m.disjoint_bases)} disjoint, "
          f"coloops={has_coloops(m)}")

print()
m3 = block_matroid(3)
ok, _ = is_matroid(m3.complex, mode="exchange")
print(f"exchange axiom holds: {ok}")
ok, _ = is_matroid(m3.complex, mode="restrictions")
print(f"every restriction is pure: {ok}")
print(f"maximum disjoint basis packing: {len(disjoint_bases(m3))}")

print()
wide = block_matroid(3, 4)
print(f"wide family r=3: {wide.complex.n_vertices} elements, "
      f"{len(wide.disjoint_bases)} disjoint bases")

dj = block_deleted_join(m3, 2)
djw = block_deleted_join(wide, 2)
print(f"\n2-fold deleted joins: square r=3 has facet dims "
      f"{dj.facet_dimension_profile()} (not pure); "
      f"wide r=3 has {djw.facet_dimension_profile()} (pure)")

print()
u = uniform_matroid(2, 5)
print(f"uniform rank 2 on 5 elements: {len(u.bases())} bases, "
      f"{len(disjoint_bases(u))} disjoint")
