import random

import numpy as np
import pytest

from tvlab.complexes import (
    complex_from_facets,
    deleted_join,
    empty_face_complex,
    join,
    points,
    reduced_euler,
    restriction,
    row_swap_permutation,
    simplex,
    skeleton,
    void_complex,
)
from tvlab.errors import NotAnAutomorphism, NotInvolution
from tvlab.gf2 import BitMatrix
from tvlab.homology import (
    betti_f2,
    betti_numbers,
    chain_complex,
    induced_involution,
    is_free_f2z2,
)
from tvlab.matroids import block_deleted_join, block_matroid, chessboard


def test_simplex_is_acyclic():
    for n in (1, 2, 4):
        assert all(b == 0 for b in betti_numbers(simplex(n)))


def test_boundary_of_edge():
    cc = chain_complex(complex_from_facets([(0, 1)]))
    assert cc.boundaries[1] == [(0, 1)]
    assert cc.boundaries[0] == [(0,), (0,)]  # both vertices hit the empty face


def test_sphere_boundaries():
    for n in (3, 4, 5):
        s = skeleton(simplex(n), n - 2)
        bv = betti_numbers(s)
        want = tuple(1 if i == n - 2 else 0 for i in range(n - 1))
        assert tuple(bv.values) == want


def test_two_points_have_reduced_b0_one():
    assert betti_numbers(points(2)).values == (1,)


def test_void_and_empty_conventions():
    assert betti_numbers(void_complex()).values == ()
    assert betti_numbers(empty_face_complex()).values == ()


def test_chain_complex_boundary_squared_checked():
    cc = chain_complex(complex_from_facets([(0, 1, 2), (1, 2, 3)]), check="full")
    assert cc.check_boundary_squared()


def test_betti_restriction_of_block_matroid():
    # dropping the free block leaves a wedge of (r-1)^(r-1) circles
    m3 = block_matroid(3)
    vblocks = [v.index for v in m3.complex.vertices if v.block != 3]
    sub = restriction(m3.complex, vblocks)
    assert betti_numbers(sub).values == (0, 4)


def test_betti_block_deleted_join_r2():
    dj = block_deleted_join(block_matroid(2), 2)
    bv = betti_numbers(dj)
    assert bv[0] == 0 and bv[1] == 0 and bv[2] != 0


def test_betti_block_deleted_join_r3_both_methods():
    dj = block_deleted_join(block_matroid(3), 2)
    cc = chain_complex(dj)
    dense = betti_f2(cc, method="dense")
    core = betti_f2(cc, method="coreduce")
    assert dense.values == core.values == (0, 0, 0, 0, 8, 1)


def test_methods_agree_on_midsize_join():
    # join of three chessboards: 9261 faces, enough to exercise the
    # coreduction path against plain elimination
    cpx = join([chessboard(2, 4)] * 3)
    cc = chain_complex(cpx, check="none")
    assert betti_f2(cc, "dense").values == betti_f2(cc, "coreduce").values


def test_methods_agree_on_random_corpus():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(3, 8)
        facets = {tuple(sorted(rng.sample(range(n), rng.randint(1, min(5, n)))))
                  for _ in range(rng.randint(1, 6))}
        cpx = complex_from_facets(sorted(facets), vertices=n)
        cc = chain_complex(cpx, check="full")
        assert betti_f2(cc, "dense").values == betti_f2(cc, "coreduce").values


def test_betti_alternating_sum_is_reduced_euler():
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randint(3, 8)
        facets = {tuple(sorted(rng.sample(range(n), rng.randint(1, min(4, n)))))
                  for _ in range(rng.randint(1, 6))}
        cpx = complex_from_facets(sorted(facets), vertices=n)
        bv = betti_numbers(cpx)
        assert sum((-1) ** i * b for i, b in enumerate(bv)) == reduced_euler(cpx)


def test_join_homology_kunneth_over_f2():
    # reduced homology of a join convolves with a degree shift
    pairs = [
        (skeleton(simplex(3), 1), points(3)),
        (points(2), points(2)),
        (skeleton(simplex(3), 1), skeleton(simplex(4), 2)),
    ]
    for x, y in pairs:
        bx, by = betti_numbers(x), betti_numbers(y)
        j = join([x, y])
        bj = betti_numbers(j)
        dim = j.dim
        for n in range(dim + 1):
            want = sum(bx[i] * by[n - 1 - i] for i in range(n))
            assert bj[n] == want


def test_induced_involution_identity():
    dj = block_deleted_join(block_matroid(3), 2)
    imap = induced_involution(dj, list(range(dj.n_vertices)), 4)
    assert np.array_equal(imap.matrix, np.eye(8, dtype=np.uint8))
    assert not is_free_f2z2(imap)


def test_induced_involution_row_swap_r3():
    dj = block_deleted_join(block_matroid(3), 2)
    imap = induced_involution(dj, row_swap_permutation(dj), 4)
    assert imap.space_dim == 8
    one_plus = (imap.matrix + np.eye(8, dtype=np.uint8)) % 2
    assert BitMatrix.from_dense(one_plus).rank() == 4
    assert is_free_f2z2(imap)


def test_induced_involution_on_chessboard():
    # row swap on the 2 x r chessboard acts on first homology
    cb = chessboard(2, 4)
    perm = row_swap_permutation(cb)
    bv = betti_numbers(cb)
    imap = induced_involution(cb, perm, 1)
    assert imap.space_dim == bv[1]
    sq = (imap.matrix @ imap.matrix) % 2
    assert np.array_equal(sq, np.eye(imap.space_dim, dtype=np.uint8))


def test_induced_involution_rejects_bad_maps():
    dj = block_deleted_join(block_matroid(2), 2)
    n = dj.n_vertices
    with pytest.raises(NotAnAutomorphism):
        induced_involution(dj, [0] * n, 1)
    rot = list(range(1, n)) + [0]
    with pytest.raises((NotInvolution, NotAnAutomorphism)):
        induced_involution(dj, rot, 1)


def test_is_free_f2z2_swap_and_identity():
    swap = np.array([[0, 1], [1, 0]], dtype=np.uint8)
    ident = np.eye(2, dtype=np.uint8)
    from tvlab.homology import InducedMap

    assert is_free_f2z2(InducedMap(0, swap, []))
    assert not is_free_f2z2(InducedMap(0, ident, []))
    odd = np.eye(3, dtype=np.uint8)
    assert not is_free_f2z2(InducedMap(0, odd, []))


def test_deleted_join_of_two_points_is_circle_pair():
    # 2-fold deleted join of 2 points is two disjoint edges = S^0 join-ish
    dj = deleted_join(points(2), 2)
    assert betti_numbers(dj).values == (1, 0)
