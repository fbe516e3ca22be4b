import random

import numpy as np
import pytest

from tvlab.gf2 import BitMatrix, TrackedEchelon, first_set_bit, matmul, rank_of_rows


def naive_rank_mod2(rows, ncols):
    """Reference elimination on plain integer rows."""
    rows = [list(r) for r in rows]
    dense = [[0] * ncols for _ in rows]
    for i, r in enumerate(rows):
        for c in r:
            dense[i][c] ^= 1
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(dense)):
            if dense[r][col]:
                piv = r
                break
        if piv is None:
            continue
        dense[row], dense[piv] = dense[piv], dense[row]
        for r in range(len(dense)):
            if r != row and dense[r][col]:
                dense[r] = [a ^ b for a, b in zip(dense[r], dense[row])]
        row += 1
        rank += 1
    return rank


@pytest.mark.parametrize("seed", range(8))
def test_rank_matches_naive_elimination(seed):
    rng = random.Random(seed)
    nrows, ncols = rng.randint(1, 40), rng.randint(1, 90)
    rows = [sorted(rng.sample(range(ncols), rng.randint(0, min(12, ncols))))
            for _ in range(nrows)]
    assert rank_of_rows(rows, ncols) == naive_rank_mod2(rows, ncols)


def test_rank_crosses_word_boundaries():
    rows = [[i, i + 64, 127] for i in range(40)]
    m = BitMatrix.from_rows(rows, 128)
    assert m.rank() == naive_rank_mod2(rows, 128)


@pytest.mark.parametrize("seed", range(5))
def test_nullspace_annihilates(seed):
    rng = random.Random(100 + seed)
    nrows, ncols = rng.randint(2, 25), rng.randint(2, 60)
    rows = [sorted(rng.sample(range(ncols), rng.randint(0, 8))) for _ in range(nrows)]
    m = BitMatrix.from_rows(rows, ncols)
    ns = m.nullspace()
    assert m.rank() + ns.nrows == ncols
    if ns.nrows:
        prod = matmul(m, ns.transpose())
        assert not prod.words.any()


def test_transpose_roundtrip():
    rows = [[0, 3], [1], [], [2, 3]]
    m = BitMatrix.from_rows(rows, 4)
    assert np.array_equal(m.transpose().transpose().to_dense(), m.to_dense())


def test_rref_pivots():
    m = BitMatrix.from_rows([[0, 1], [1, 2], [0, 2]], 3)
    red, pivots = m.rref()
    assert pivots == [0, 1]
    assert red.is_zero_row(2)


def test_first_set_bit():
    m = BitMatrix.zeros(1, 200)
    assert first_set_bit(m.words[0]) == -1
    m.set(0, 131)
    assert first_set_bit(m.words[0]) == 131


def test_tracked_echelon_expresses_combinations():
    ech = TrackedEchelon(8, 4)
    rows = [[0, 1], [1, 2], [2, 3]]
    mats = BitMatrix.from_rows(rows, 8)
    for i in range(3):
        assert ech.add(mats.words[i], tag_index=i)
    combo = mats.words[0] ^ mats.words[2]
    ok, used = ech.express(combo)
    assert ok and used == [0, 2]
    outside = BitMatrix.from_rows([[5]], 8)
    ok, _ = ech.express(outside.words[0])
    assert not ok
