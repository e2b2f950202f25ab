"""Bit-packed linear algebra over GF(2).

Vectors are plain Python ints.  A vector of length ``n`` stores coordinate
``k`` (0-based) in bit ``n - 1 - k``, so the integer order agrees with the
lexicographic order of the written bit string: ``(0,1,1,1,1,0)`` is ``0b011110``.

Matrices are immutable :class:`BitMatrix` values holding one such int per row.
They act on row vectors from the right.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "BitMatrix",
    "popcount",
    "parity",
    "bits_of",
    "from_bits",
    "format_bits",
    "rank",
    "rref_canonical",
    "span",
    "det_adjugate3",
    "det3",
    "vec_mat",
    "minor",
    "all_minors",
]


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def bits_of(v: int, n: int) -> tuple[int, ...]:
    """Coordinates of ``v`` as a tuple, first coordinate first."""
    return tuple((v >> (n - 1 - k)) & 1 for k in range(n))


def from_bits(bits: Iterable[int]) -> int:
    v = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"not a bit: {b!r}")
        v = (v << 1) | b
    return v


def format_bits(v: int, n: int) -> str:
    return "(" + "".join(str(b) for b in bits_of(v, n)) + ")"


def vec_mat(v: int, rows: Sequence[int], n: int) -> int:
    """Row vector ``v`` (length ``n``) times the matrix with the given rows."""
    out = 0
    for k in range(n):
        if (v >> (n - 1 - k)) & 1:
            out ^= rows[k]
    return out


class BitMatrix:
    """Small dense matrix over GF(2) with row-major int rows."""

    __slots__ = ("rows", "ncols", "_hash")

    def __init__(self, rows: Iterable[int], ncols: int):
        rows = tuple(int(r) for r in rows)
        if ncols <= 0 or ncols > 64:
            raise ValueError("ncols must be in 1..64")
        mask = (1 << ncols) - 1
        for r in rows:
            if r < 0 or r & ~mask:
                raise ValueError(f"row {r:#x} does not fit in {ncols} columns")
        self.rows = rows
        self.ncols = ncols
        self._hash = hash((rows, ncols))

    # construction ---------------------------------------------------------

    @classmethod
    def from_lists(cls, grid: Sequence[Sequence[int]]) -> "BitMatrix":
        if not grid:
            raise ValueError("empty matrix")
        ncols = len(grid[0])
        if any(len(row) != ncols for row in grid):
            raise ValueError("ragged matrix")
        return cls((from_bits(row) for row in grid), ncols)

    @classmethod
    def from_strings(cls, *rows: str) -> "BitMatrix":
        return cls.from_lists([[int(c) for c in r if c in "01"] for r in rows])

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls((1 << (n - 1 - i) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    @classmethod
    def unpack(cls, key: int, n: int) -> "BitMatrix":
        """Inverse of :meth:`pack` for a square ``n`` x ``n`` matrix."""
        mask = (1 << n) - 1
        return cls(((key >> (n * (n - 1 - i))) & mask for i in range(n)), n)

    # shape and access -----------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return (self.rows[i] >> (self.ncols - 1 - j)) & 1

    def to_lists(self) -> list[list[int]]:
        return [list(bits_of(r, self.ncols)) for r in self.rows]

    def pack(self) -> int:
        """Concatenate the rows into one int, first row in the high bits."""
        key = 0
        for r in self.rows:
            key = (key << self.ncols) | r
        return key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"BitMatrix({self.to_text()!r})"

    def to_text(self) -> str:
        return "\n".join("".join(map(str, bits_of(r, self.ncols))) for r in self.rows)

    # algebra --------------------------------------------------------------

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return BitMatrix((a ^ b for a, b in zip(self.rows, other.rows)), self.ncols)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        n = self.ncols
        return BitMatrix((vec_mat(r, other.rows, n) for r in self.rows), other.ncols)

    def __pow__(self, k: int) -> "BitMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = BitMatrix.identity(self.ncols)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, v: int) -> int:
        """Right action on a row vector: ``v @ self``."""
        return vec_mat(v, self.rows, self.nrows)

    def transpose(self) -> "BitMatrix":
        m, n = self.shape
        cols = []
        for j in range(n):
            c = 0
            for i in range(m):
                c = (c << 1) | self[i, j]
            cols.append(c)
        return BitMatrix(cols, m)

    T = property(transpose)

    def trace(self) -> int:
        t = 0
        for i in range(min(self.shape)):
            t ^= self[i, i]
        return t

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def submatrix(self, cols: Sequence[int]) -> "BitMatrix":
        """Keep the listed columns, in the listed order."""
        n = self.ncols
        out = []
        for r in self.rows:
            x = 0
            for j in cols:
                x = (x << 1) | ((r >> (n - 1 - j)) & 1)
            out.append(x)
        return BitMatrix(out, len(cols))

    def blocks(self, k: int) -> tuple["BitMatrix", "BitMatrix"]:
        """Split columns into the first ``k`` and the rest."""
        return (self.submatrix(range(k)), self.submatrix(range(k, self.ncols)))

    def inverse(self) -> "BitMatrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = [(r << n) | (1 << (n - 1 - i)) for i, r in enumerate(self.rows)]
        for col in range(n):
            bit = 1 << (2 * n - 1 - col)
            piv = next((i for i in range(col, n) if aug[i] & bit), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            for i in range(n):
                if i != col and aug[i] & bit:
                    aug[i] ^= aug[col]
        mask = (1 << n) - 1
        return BitMatrix((r & mask for r in aug), n)


def _reduce(rows: Sequence[int], ncols: int) -> list[int]:
    """Reduced row echelon form, zero rows dropped."""
    rows = [r for r in rows if r]
    out: list[int] = []
    for col in range(ncols):
        bit = 1 << (ncols - 1 - col)
        piv = next((i for i, r in enumerate(rows) if r & bit), None)
        if piv is None:
            continue
        p = rows.pop(piv)
        rows = [r ^ p if r & bit else r for r in rows]
        out = [r ^ p if r & bit else r for r in out]
        out.append(p)
        rows = [r for r in rows if r]
    return out


def rank(m: BitMatrix) -> int:
    return len(_reduce(m.rows, m.ncols))


def rref_canonical(m: BitMatrix) -> BitMatrix:
    """Unique reduced row echelon form, keeping the row count (zero rows last)."""
    red = _reduce(m.rows, m.ncols)
    return BitMatrix(red + [0] * (m.nrows - len(red)), m.ncols)


def span(vectors: Iterable[int]) -> frozenset[int]:
    """All GF(2) linear combinations, zero included."""
    out = {0}
    for v in vectors:
        if v not in out:
            out |= {x ^ v for x in out}
    return frozenset(out)


def det3(m: BitMatrix) -> int:
    a = m.to_lists()
    return (
        a[0][0] & a[1][1] & a[2][2]
        ^ a[0][1] & a[1][2] & a[2][0]
        ^ a[0][2] & a[1][0] & a[2][1]
        ^ a[0][2] & a[1][1] & a[2][0]
        ^ a[0][1] & a[1][0] & a[2][2]
        ^ a[0][0] & a[1][2] & a[2][1]
    )


def det_adjugate3(m: BitMatrix) -> tuple[int, BitMatrix]:
    """Determinant and transposed cofactor matrix of a 3x3 matrix.

    Over GF(2) cofactor signs vanish, so ``adj[i][j]`` is the 2x2 minor of
    ``m`` with row ``j`` and column ``i`` deleted.
    """
    if m.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got {m.shape}")
    a = m.to_lists()
    adj = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [x for x in range(3) if x != j]
            c = [x for x in range(3) if x != i]
            adj[i][j] = (a[r[0]][c[0]] & a[r[1]][c[1]]) ^ (a[r[0]][c[1]] & a[r[1]][c[0]])
    return det3(m), BitMatrix.from_lists(adj)


def minor(rows: Sequence[int], ncols: int, cols: Sequence[int]) -> int:
    """Determinant of the square submatrix on the given columns."""
    k = len(cols)
    if k != len(rows):
        raise ValueError("minor needs as many columns as rows")
    sub = BitMatrix(rows, ncols).submatrix(cols)
    return 1 if rank(sub) == k else 0


def all_minors(rows: Sequence[int], ncols: int) -> dict[tuple[int, ...], int]:
    k = len(rows)
    return {c: minor(rows, ncols, c) for c in combinations(range(ncols), k)}
