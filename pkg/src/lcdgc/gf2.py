"""Dense GF(2) matrices with rows packed into 64-bit words."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

WORD = 64


def _words(cols: int) -> int:
    return (cols + WORD - 1) // WORD


class BitMatrix:
    """Immutable GF(2) matrix.

    ``data`` has shape ``(rows, ceil(cols / 64))`` and dtype ``uint64``.
    Column ``j`` of a row lives in word ``j // 64`` at bit ``j % 64``; bits
    past ``cols - 1`` in the last word are always zero.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        shape = (rows, _words(cols))
        if data is None:
            data = np.zeros(shape, dtype=np.uint64)
        else:
            data = np.array(data, dtype=np.uint64, copy=True).reshape(shape)
            tail = cols % WORD
            if tail and rows:
                data[:, -1] &= np.uint64((1 << tail) - 1)
        data.setflags(write=False)
        self.rows = rows
        self.cols = cols
        self.data = data

    # -- construction -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_dense(cls, arr) -> BitMatrix:
        """Build from a 2-D array-like of 0/1 values."""
        a = np.asarray(arr, dtype=np.uint8)
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        rows, cols = a.shape
        nw = _words(cols)
        padded = np.zeros((rows, nw * WORD), dtype=np.uint8)
        padded[:, :cols] = a & 1
        packed = np.packbits(padded, axis=1, bitorder="little")
        data = packed.view("<u8").astype(np.uint64) if nw else np.zeros((rows, 0), np.uint64)
        return cls(rows, cols, data)

    @classmethod
    def from_ints(cls, rows: Iterable[int], cols: int) -> BitMatrix:
        """Build from row bitmasks (bit ``j`` of the int is column ``j``)."""
        rows = list(rows)
        nw = _words(cols)
        data = np.zeros((len(rows), nw), dtype=np.uint64)
        mask = (1 << WORD) - 1
        for r, v in enumerate(rows):
            if v < 0 or v >> cols:
                raise ValueError(f"row {r} has bits outside {cols} columns")
            for w in range(nw):
                data[r, w] = (v >> (WORD * w)) & mask
        return cls(len(rows), cols, data)

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> BitMatrix:
        """Build from strings such as ``"1101"`` (leftmost char is column 0)."""
        if not rows:
            return cls(0, 0)
        return cls.from_dense([[int(ch) for ch in r] for r in rows])

    # -- views ---------------------------------------------------------------

    def to_dense(self) -> np.ndarray:
        nw = self.data.shape[1]
        if self.rows == 0 or nw == 0:
            return np.zeros((self.rows, self.cols), dtype=np.uint8)
        raw = np.ascontiguousarray(self.data.astype("<u8")).view(np.uint8)
        bits = np.unpackbits(raw, axis=1, bitorder="little")
        return bits[:, : self.cols].copy()

    def to_ints(self) -> list[int]:
        out = []
        for row in self.data:
            v = 0
            for w in reversed(range(len(row))):
                v = (v << WORD) | int(row[w])
            out.append(v)
        return out

    def to_strings(self) -> list[str]:
        return ["".join(str(b) for b in row) for row in self.to_dense()]

    def __getitem__(self, idx: tuple[int, int]) -> int:
        r, c = idx
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(idx)
        return int(self.data[r, c // WORD] >> np.uint64(c % WORD)) & 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and np.array_equal(self.data, other.data)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self) -> str:
        body = ", ".join(self.to_strings()[:8])
        more = ", ..." if self.rows > 8 else ""
        return f"BitMatrix({self.rows}x{self.cols}: [{body}{more}])"

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols


def vstack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.cols != b.cols:
        raise ValueError(f"column mismatch: {a.cols} vs {b.cols}")
    return BitMatrix(a.rows + b.rows, a.cols, np.vstack([a.data, b.data]))


def _eliminate(m: BitMatrix, full: bool) -> tuple[np.ndarray, list[int]]:
    """Row-reduce a private copy; returns (words, pivot columns)."""
    work = np.array(m.data, dtype=np.uint64, copy=True)
    pivots: list[int] = []
    r = 0
    for col in range(m.cols):
        if r == m.rows:
            break
        w = col // WORD
        bit = np.uint64(1) << np.uint64(col % WORD)
        hits = np.nonzero(work[r:, w] & bit)[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            work[[r, p]] = work[[p, r]]
        if full:
            targets = np.nonzero(work[:, w] & bit)[0]
            targets = targets[targets != r]
        else:
            targets = r + 1 + np.nonzero(work[r + 1 :, w] & bit)[0]
        if targets.size:
            work[targets] ^= work[r]
        pivots.append(col)
        r += 1
    return work, pivots


def rank(m: BitMatrix) -> int:
    return len(_eliminate(m, full=False)[1])


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form; zero rows are kept at the bottom."""
    work, pivots = _eliminate(m, full=True)
    return BitMatrix(m.rows, m.cols, work), pivots


def row_basis(m: BitMatrix) -> BitMatrix:
    """The nonzero rows of ``rref(m)``."""
    work, pivots = _eliminate(m, full=True)
    return BitMatrix(len(pivots), m.cols, work[: len(pivots)])


def is_invertible(m: BitMatrix) -> bool:
    if m.rows != m.cols:
        raise ValueError(f"is_invertible needs a square matrix, got {m.rows}x{m.cols}")
    return rank(m) == m.rows


def transpose(m: BitMatrix) -> BitMatrix:
    return BitMatrix.from_dense(m.to_dense().T)


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    prod = a.to_dense().astype(np.int64) @ b.to_dense().astype(np.int64)
    return BitMatrix.from_dense(prod & 1)


def nullspace_basis(m: BitMatrix) -> BitMatrix:
    """Basis (as rows) of ``{x : m x^T = 0}``."""
    reduced, pivots = rref(m)
    dense = reduced.to_dense()
    free = [c for c in range(m.cols) if c not in set(pivots)]
    out = np.zeros((len(free), m.cols), dtype=np.uint8)
    for i, f in enumerate(free):
        out[i, f] = 1
        for r, p in enumerate(pivots):
            out[i, p] = dense[r, f]
    return BitMatrix.from_dense(out) if free else BitMatrix(0, m.cols)


def row_space_intersection_dim(a: BitMatrix, b: BitMatrix) -> int:
    if a.cols != b.cols:
        raise ValueError(f"column mismatch: {a.cols} vs {b.cols}")
    return rank(a) + rank(b) - rank(vstack(a, b))
