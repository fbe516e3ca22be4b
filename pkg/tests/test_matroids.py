import pytest

from tvlab.complexes import (
    complex_from_facets,
    deleted_join,
    euler_characteristic,
    join,
)
from tvlab.errors import BadParameter, BadRank
from tvlab.matroids import (
    block_deleted_join,
    block_matroid,
    chessboard,
    direct_sum,
    disjoint_bases,
    has_coloops,
    is_matroid,
    uniform_matroid,
)


def test_uniform_full_rank_is_simplex():
    u = uniform_matroid(4, 4)
    assert len(u.complex.facets) == 1
    assert u.complex.dim == 3


def test_uniform_rank_zero_is_empty_face():
    u = uniform_matroid(0, 5)
    assert u.complex.facets == ((),)


def test_uniform_rank_one_is_points():
    u = uniform_matroid(1, 4)
    assert u.complex.dim == 0
    assert len(u.complex.facets) == 4


def test_uniform_bad_rank():
    with pytest.raises(BadRank):
        uniform_matroid(5, 3)
    with pytest.raises(BadRank):
        uniform_matroid(-1, 3)


def test_direct_sum_equals_join():
    a = uniform_matroid(1, 3)
    b = uniform_matroid(2, 3)
    s = direct_sum([a, b])
    j = join([a.complex, b.complex])
    assert set(s.complex.facets) == set(j.facets)
    assert s.rank == 3


def test_direct_sum_single_is_identity():
    a = uniform_matroid(2, 4)
    assert direct_sum([a]) is a


def test_block_matroid_r3_shape():
    m = block_matroid(3)
    assert m.complex.n_vertices == 9
    assert m.rank == 3
    assert len(m.disjoint_bases) == 3
    for b in m.disjoint_bases:
        assert len(b) == 3
    flat = [v for b in m.disjoint_bases for v in b]
    assert len(set(flat)) == len(flat)
    assert m.verified


def test_block_matroid_rank_is_sum_of_summand_ranks():
    # r-1 singleton blocks plus the free block, truncated at r
    for r in (2, 3, 4):
        m = block_matroid(r)
        assert m.rank == r
        assert m.complex.dim == r - 1
        assert m.complex.n_vertices == r * r


def test_block_matroid_r2_has_five_bases():
    m = block_matroid(2)
    assert len(m.bases()) == 5


def test_block_matroid_face_constraints():
    for r in (2, 3, 4):
        m = block_matroid(r)
        blocks = {v.index: v.block for v in m.complex.vertices}
        for f in m.complex.face_set():
            assert len(f) <= r
            for blk in range(1, r):
                assert sum(1 for v in f if blocks[v] == blk) <= 1


def test_block_matroid_is_matroid():
    for r in (2, 3, 4):
        ok, _ = is_matroid(block_matroid(r).complex, mode="exchange")
        assert ok


def test_block_matroid_width_parameter():
    m = block_matroid(2, 3)
    assert m.rank == 2
    assert len(m.disjoint_bases) == 3
    assert m.complex.n_vertices == 6
    mp3 = block_matroid(3, 4)
    assert mp3.complex.n_vertices == 12  # r(r+1)
    dj = block_deleted_join(mp3, 2)
    assert dj.is_pure() and dj.dim == 5


def test_block_matroid_bad_parameters():
    with pytest.raises(BadParameter):
        block_matroid(1)
    with pytest.raises(BadParameter):
        block_matroid(3, 2)


def test_is_matroid_rejects_impure_restriction():
    # two disjoint edges plus an isolated vertex: restricting to
    # {0,1,2} strands the vertex 2 below the edge
    cpx = complex_from_facets([(0, 1), (2,)], vertices=3)
    ok, witness = is_matroid(cpx, mode="exchange")
    assert not ok and witness is not None
    ok2, witness2 = is_matroid(cpx, mode="restrictions")
    assert not ok2 and witness2 is not None


def test_is_matroid_uniform_true_all_modes():
    u = uniform_matroid(2, 5).complex
    assert is_matroid(u, mode="exchange")[0]
    assert is_matroid(u, mode="restrictions")[0]
    assert is_matroid(u, mode="exhaustive")[0]
    assert is_matroid(u, mode="sampled")[0]


def test_matroid_verifier_agreement_small_corpus():
    import random

    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 6)
        facets = {tuple(sorted(rng.sample(range(n), rng.randint(1, n))))
                  for _ in range(rng.randint(1, 4))}
        cpx = complex_from_facets(sorted(facets), vertices=n)
        assert (is_matroid(cpx, mode="exchange")[0]
                == is_matroid(cpx, mode="restrictions")[0])


def test_disjoint_bases_of_block_matroid():
    for r in (2, 3):
        m = block_matroid(r)
        packing = disjoint_bases(m)
        assert len(packing) == r
    m23 = block_matroid(2, 3)
    assert len(disjoint_bases(m23)) == 3


def test_disjoint_bases_uniform():
    assert len(disjoint_bases(uniform_matroid(2, 5))) == 2
    assert len(disjoint_bases(uniform_matroid(3, 3))) == 1


def test_coloops():
    assert has_coloops(uniform_matroid(3, 3))
    assert not has_coloops(uniform_matroid(2, 4))
    for r in (2, 3, 4):
        assert not has_coloops(block_matroid(r))
    assert not has_coloops(block_matroid(2, 3))
    assert not has_coloops(block_matroid(3, 4))


def test_chessboard_2_2_two_disjoint_edges():
    cb = chessboard(2, 2)
    assert cb.n_vertices == 4
    assert len(cb.facets) == 2
    a, b = cb.facets
    assert not set(a) & set(b)


def test_chessboard_1_r_is_points():
    cb = chessboard(1, 4)
    assert cb.dim == 0 and len(cb.facets) == 4


def test_chessboard_join_euler():
    # r-fold join of the 2 x r chessboard has Euler 1 - (r^2-3r+1)^r
    for r in (3, 4):
        cb = chessboard(2, r)
        j = join([cb] * r)
        assert euler_characteristic(j) == 1 - (r * r - 3 * r + 1) ** r


def test_block_deleted_join_matches_generic():
    for r, width in ((2, 2), (3, 3), (2, 3)):
        m = block_matroid(r, width)
        fast = block_deleted_join(m, 2)
        slow = deleted_join(m.complex, 2)
        assert set(fast.facets) == set(slow.facets)
        # degree prefill agrees with the generic containment sweep
        generic = slow.degrees()
        assert fast.degrees() == generic


def test_block_deleted_join_k3_profile():
    m = block_matroid(3)
    dj = block_deleted_join(m, 3)
    assert dj.facet_dimension_profile() == (6, 7, 8)
    assert dj.dim == 3 * m.rank - 1


def test_top_facets_are_disjoint_basis_pairs():
    m = block_matroid(3)
    dj = block_deleted_join(m, 2)
    tops = [f for f in dj.facets if len(f) == 6]
    bases = m.bases()
    count = 0
    for b1 in bases:
        s1 = set(b1)
        for b2 in bases:
            if not s1 & set(b2):
                count += 1
    assert len(tops) == count == 432
