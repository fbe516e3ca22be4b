"""Deleted products as configuration-space models.

The 2-fold deleted product deformation retracts the space of two distinct
points.  For matroids with b disjoint bases the homological connectivity
of the k-fold product is at least r - 2 - floor(r(k-1)/b); with enough
bases it is exactly r - 2 and no better.

Run:  python3 demos/05_deleted_products.py
"""

from tvlab.complexes import simplex
from tvlab.matroids import block_matroid, uniform_matroid
from tvlab.products import (
    basis_surplus_flags,
    conf2,
    connectivity_floor,
    deleted_product,
    homological_connectivity,
    product_betti,
)

print("== products of simplices ==")
for r in (2, 3, 4, 5):
    p = deleted_product(simplex(r), 2)
    print(f"two points in the {r - 1}-simplex: Betti {list(product_betti(p).values)}")
for r in (3, 4, 5):
    p = deleted_product(simplex(r), 3)
    bv = product_betti(p)
    print(f"three points in the {r - 1}-simplex: Betti {list(bv.values)} "
          f"(a wedge, not a single sphere)")

print("\n== configuration spaces of matroids ==")
corpus = [
    ("square r=2", block_matroid(2), 2),
    ("square r=3", block_matroid(3), 3),
    ("wide r=3", block_matroid(3, 4), 4),
    ("uniform 2 of 5", uniform_matroid(2, 5), 2),
]
for name, m, b in corpus:
    c = conf2(m)
    bv = product_betti(c)
    conn = homological_connectivity(c, bv)
    floor = connectivity_floor(m.rank, b, 2)
    print(f"{name}: connectivity {conn} (floor {floor}), "
          f"Betti {list(bv.values)}")

print("\n== the exactness regime ==")
wide = block_matroid(3, 4)
flags = basis_surplus_flags(4, 3, 2)
c = conf2(wide)
bv = product_betti(c)
print(f"wide r=3 with 4 bases: hypothesis flags {flags}")
print(f"connectivity exactly {homological_connectivity(c, bv)} "
      f"and Betti_2 = {bv[2]} is nonzero")
