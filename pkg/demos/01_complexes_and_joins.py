"""Tour of the combinatorial layer: complexes, joins, deleted joins.

Run:  python3 demos/01_complexes_and_joins.py
"""

from tvlab.complexes import (
    deleted_join,
    euler_characteristic,
    f_triangle,
    join,
    link,
    points,
    reduced_euler,
    restriction,
    simplex,
    skeleton,
)

print("== joins ==")
bipartite = join([points(2), points(3)])
print(f"join of 2 and 3 points: {len(bipartite.facets)} edges, dim {bipartite.dim}")

triple = join([points(3)] * 3)
print(f"3-fold join of 3 points: {len(triple.facets)} triangles, "
      f"Euler {euler_characteristic(triple)}")

print("\n== deleted joins ==")
board = deleted_join(points(4), 2)
print(f"2-fold deleted join of 4 points = 2x4 chessboard: "
      f"{len(board.facets)} rook pairs")

print("\n== skeleta and links ==")
sphere = skeleton(simplex(4), 2)
print(f"boundary of the tetrahedron: {len(sphere.facets)} triangles, "
      f"reduced Euler {reduced_euler(sphere)}")
lk = link(simplex(4), (0,))
print(f"link of a vertex in the 3-simplex has dim {lk.dim}")

print("\n== face counts refined by degree ==")
cpx = join([points(3), simplex(2)])
ft = f_triangle(cpx)
print(f"f-vector {ft.f_vector()}")
print(f"h-diagonal {ft.h_diagonal}")

print("\n== restriction ==")
sub = restriction(cpx, range(3))
print(f"restriction to the first three vertices: {len(sub.facets)} facets")
