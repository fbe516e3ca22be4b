import pytest

from tvlab.complexes import complex_from_facets, simplex
from tvlab.errors import CellBudgetExceeded
from tvlab.matroids import block_matroid, uniform_matroid
from tvlab.products import (
    basis_surplus_flags,
    conf2,
    connectivity_floor,
    deleted_product,
    factor_transposed,
    homological_connectivity,
    product_betti,
    product_chain_complex,
)


def test_two_point_configuration_of_an_edge():
    p = deleted_product(complex_from_facets([(0, 1)]), 2)
    assert p.dim == 0
    assert p.total_cells() == 2
    assert product_betti(p).values == (1,)


def test_product_of_triangle_boundary_is_hexagon():
    circle = complex_from_facets([(0, 1), (1, 2), (0, 2)])
    p = deleted_product(circle, 2)
    assert p.n_cells(0) == 6 and p.n_cells(1) == 6
    assert product_betti(p).values == (0, 1)


def test_boundary_of_product_cell():
    tri = simplex(3)
    p = deleted_product(tri, 2)
    cc = product_chain_complex(p, check="full")
    # pick the cell ((0,1), (2,)) and check its boundary is the two vertices
    cells1 = cc.cells[1]
    target = ((0, 1), (2,))
    i = cells1.index(target)
    faces = [cc.cells[0][j] for j in cc.boundaries[1][i]]
    assert sorted(faces) == [((0,), (2,)), ((1,), (2,))]


def test_simplex_products_k2_are_spheres():
    for r in (2, 3, 4, 5, 6):
        p = deleted_product(simplex(r), 2)
        assert p.dim == r - 2
        bv = product_betti(p)
        assert tuple(bv.values) == tuple(1 if i == r - 2 else 0 for i in range(r - 1))


def test_simplex_product_k3_wedge_counts():
    # 3-fold products of simplices are wedges of many (r-3)-spheres
    expected = {3: (5,), 4: (0, 13), 5: (0, 0, 29)}
    for r, want in expected.items():
        p = deleted_product(simplex(r), 3)
        assert tuple(product_betti(p).values) == want


def test_product_dimension_of_block_matroid():
    for r, k in ((3, 2), (3, 3)):
        m = block_matroid(r)
        p = deleted_product(m.complex, k)
        assert p.dim == (r - 1) * k


def test_top_cells_count_disjoint_basis_tuples():
    m = block_matroid(3)
    p = deleted_product(m.complex, 2)
    bases = m.bases()
    want = sum(1 for b1 in bases for b2 in bases if not set(b1) & set(b2))
    assert len(p.top_cells()) == want


def test_cell_budget_is_enforced():
    with pytest.raises(CellBudgetExceeded):
        deleted_product(simplex(6), 3, max_cells=100)


def test_connectivity_conventions():
    empty = deleted_product(complex_from_facets([(0,)]), 2)
    assert empty.total_cells() == 0
    assert homological_connectivity(empty) == -2
    two_points = deleted_product(complex_from_facets([(0, 1)]), 2)
    assert homological_connectivity(two_points) == -1
    contractible = deleted_product(simplex(4), 1)
    assert homological_connectivity(contractible) == contractible.dim


def test_connectivity_floor_on_corpus():
    corpus = [
        (block_matroid(2), 2, 2),
        (block_matroid(3), 3, 2),
        (block_matroid(3), 3, 3),
        (block_matroid(2, 3), 3, 2),
        (block_matroid(3, 4), 4, 2),
        (uniform_matroid(2, 4), 2, 2),
        (uniform_matroid(2, 5), 2, 2),
        (uniform_matroid(4, 4), 1, 2),
    ]
    for matroid, b, k in corpus:
        p = deleted_product(matroid.complex, k)
        conn = homological_connectivity(p)
        assert conn >= connectivity_floor(matroid.rank, b, k)


def test_conf2_wide_family_r3_exact_connectivity():
    c = conf2(block_matroid(3, 4))
    bv = product_betti(c)
    assert homological_connectivity(c, bv) == 1
    assert bv[2] != 0


def test_conf2_of_two_points():
    c = conf2(uniform_matroid(1, 2))
    assert product_betti(c).values == (1,)


def test_conf2_of_square_family_r3_meets_floor():
    c = conf2(block_matroid(3))
    bv = product_betti(c)
    assert homological_connectivity(c, bv) >= 0


def test_factor_transposition_preserves_betti():
    m = block_matroid(2)
    p = deleted_product(m.complex, 2)
    q = factor_transposed(p, 0, 1)
    assert product_betti(p).values == product_betti(q).values
    p3 = deleted_product(uniform_matroid(2, 4).complex, 3)
    q3 = factor_transposed(p3, 0, 2)
    assert product_betti(p3).values == product_betti(q3).values


def test_basis_surplus_flags():
    flags = basis_surplus_flags(b=4, r=3, k=2)
    assert flags == {"b_ge_r_km1_plus_1": True, "b_ge_rm1_km1_plus_1": True}
    flags = basis_surplus_flags(b=3, r=3, k=2)
    assert flags == {"b_ge_r_km1_plus_1": False, "b_ge_rm1_km1_plus_1": True}


def test_product_boundary_squared_is_zero():
    for r, k in ((4, 2), (3, 3)):
        p = deleted_product(simplex(r), k)
        cc = product_chain_complex(p, check="none")
        assert cc.check_boundary_squared()
