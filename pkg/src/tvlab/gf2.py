"""Dense linear algebra over the two-element field with bit-packed rows.

Rows are packed little-endian into uint64 words, so a row XOR touches
ncols/64 words.  This is the rank engine behind every homology computation.
"""

from __future__ import annotations

import numpy as np

_ONE = np.uint64(1)
_SIX3 = np.uint64(63)


def n_words(ncols: int) -> int:
    return max(1, (ncols + 63) >> 6)


class BitMatrix:
    """A matrix over GF(2) stored as packed uint64 rows."""

    __slots__ = ("words", "nrows", "ncols")

    def __init__(self, words: np.ndarray, nrows: int, ncols: int):
        self.words = words
        self.nrows = nrows
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(np.zeros((nrows, n_words(ncols)), dtype=np.uint64), nrows, ncols)

    @classmethod
    def from_rows(cls, rows, ncols: int) -> "BitMatrix":
        """Build from an iterable of column-index iterables."""
        rows = list(rows)
        mat = cls.zeros(len(rows), ncols)
        w = mat.words
        for i, cols in enumerate(rows):
            for c in cols:
                w[i, c >> 6] |= _ONE << np.uint64(c & 63)
        return mat

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        mat = cls.zeros(n, n)
        for i in range(n):
            mat.set(i, i)
        return mat

    @classmethod
    def from_dense(cls, arr) -> "BitMatrix":
        arr = np.asarray(arr, dtype=np.uint8) & 1
        mat = cls.zeros(arr.shape[0], arr.shape[1])
        for i in range(arr.shape[0]):
            for c in np.nonzero(arr[i])[0]:
                mat.set(i, int(c))
        return mat

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.words.copy(), self.nrows, self.ncols)

    def get(self, i: int, j: int) -> int:
        return int((self.words[i, j >> 6] >> np.uint64(j & 63)) & _ONE)

    def set(self, i: int, j: int) -> None:
        self.words[i, j >> 6] |= _ONE << np.uint64(j & 63)

    def row_indices(self, i: int) -> list[int]:
        """Column indices of the set bits in row i."""
        out = []
        for wi in np.nonzero(self.words[i])[0]:
            word = int(self.words[i, wi])
            base = int(wi) << 6
            while word:
                low = word & -word
                out.append(base + low.bit_length() - 1)
                word ^= low
        return out

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        for i in range(self.nrows):
            for j in self.row_indices(i):
                out[i, j] = 1
        return out

    def is_zero_row(self, i: int) -> bool:
        return not self.words[i].any()

    def rank(self) -> int:
        """Rank via in-place forward elimination on a copy."""
        return _eliminate(self.words.copy(), self.nrows, self.ncols, full=False)[0]

    def rref(self) -> tuple["BitMatrix", list[int]]:
        """Reduced row echelon form and its pivot columns."""
        w = self.words.copy()
        rank, pivots = _eliminate(w, self.nrows, self.ncols, full=True)
        return BitMatrix(w, self.nrows, self.ncols), pivots

    def transpose(self) -> "BitMatrix":
        out = BitMatrix.zeros(self.ncols, self.nrows)
        for i in range(self.nrows):
            for j in self.row_indices(i):
                out.set(j, i)
        return out

    def nullspace(self) -> "BitMatrix":
        """Rows form a basis of the right kernel."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = BitMatrix.zeros(len(free), self.ncols)
        for bi, fc in enumerate(free):
            basis.set(bi, fc)
            for ri, pc in enumerate(pivots):
                if red.get(ri, fc):
                    basis.set(bi, pc)
        return basis


def _eliminate(w: np.ndarray, nrows: int, ncols: int, full: bool) -> tuple[int, list[int]]:
    """Gaussian elimination on packed rows; returns (rank, pivot columns)."""
    r = 0
    pivots: list[int] = []
    for col in range(ncols):
        if r == nrows:
            break
        wi = col >> 6
        bit = _ONE << np.uint64(col & 63)
        hits = np.nonzero(w[r:, wi] & bit)[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            w[[r, p]] = w[[p, r]]
        if full:
            others = np.nonzero(w[:, wi] & bit)[0]
            others = others[others != r]
        else:
            others = r + 1 + np.nonzero(w[r + 1:, wi] & bit)[0]
        if others.size:
            w[others] ^= w[r]
        pivots.append(col)
        r += 1
    return r, pivots


def rank_of_rows(rows, ncols: int) -> int:
    return BitMatrix.from_rows(rows, ncols).rank()


def matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Product over GF(2); a is (m x n), b is (n x p)."""
    if a.ncols != b.nrows:
        raise ValueError("shape mismatch")
    out = BitMatrix.zeros(a.nrows, b.ncols)
    for i in range(a.nrows):
        idx = a.row_indices(i)
        if idx:
            out.words[i] = np.bitwise_xor.reduce(b.words[np.array(idx)], axis=0)
    return out


def first_set_bit(words: np.ndarray) -> int:
    """Index of the lowest set bit, or -1."""
    nz = np.nonzero(words)[0]
    if nz.size == 0:
        return -1
    wi = int(nz[0])
    word = int(words[wi])
    return (wi << 6) + (word & -word).bit_length() - 1


class TrackedEchelon:
    """Incremental echelon basis that tracks combination coefficients.

    Rows added with a tag accumulate tag vectors, so reducing a vector
    reports which tagged rows were used.  Used to express cycles in a
    chosen homology basis.
    """

    def __init__(self, ncols: int, ntags: int):
        self.ncols = ncols
        self.ntags = ntags
        self._rows: dict[int, tuple[np.ndarray, np.ndarray]] = {}

    def _reduce(self, vec: np.ndarray, tag: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
        while True:
            lead = first_set_bit(vec)
            if lead < 0 or lead not in self._rows:
                return vec, tag, lead
            row, rtag = self._rows[lead]
            vec = vec ^ row
            tag = tag ^ rtag

    def add(self, vec: np.ndarray, tag_index: int | None = None) -> bool:
        """Insert a row; returns False if it was already in the span."""
        tag = np.zeros(n_words(self.ntags), dtype=np.uint64)
        if tag_index is not None:
            tag[tag_index >> 6] |= _ONE << np.uint64(tag_index & 63)
        vec, tag, lead = self._reduce(vec.copy(), tag)
        if lead < 0:
            return False
        self._rows[lead] = (vec, tag)
        return True

    def express(self, vec: np.ndarray) -> tuple[bool, list[int]]:
        """Reduce vec to zero and report the tagged rows used."""
        tag = np.zeros(n_words(self.ntags), dtype=np.uint64)
        vec, tag, lead = self._reduce(vec.copy(), tag)
        if lead >= 0:
            return False, []
        used = []
        for wi in np.nonzero(tag)[0]:
            word = int(tag[wi])
            base = int(wi) << 6
            while word:
                low = word & -word
                used.append(base + low.bit_length() - 1)
                word ^= low
        return True, sorted(used)

    def __len__(self) -> int:
        return len(self._rows)
