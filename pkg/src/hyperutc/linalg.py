"""Exact linear algebra over GF(2) (row bitsets) and over the rationals (Bareiss)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BitMatrix:
    """Dense 0/1 matrix; bit j of ``data[i]`` is entry (i, j)."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        limit = 1 << self.cols
        for i, r in enumerate(self.data):
            if r < 0 or r >= limit:
                raise ValueError(f"row {i} has bits beyond column {self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            x = 0
            for j, e in enumerate(r):
                if e & 1:
                    x |= 1 << j
            data.append(x)
        return cls(len(rows), cols, tuple(data))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def ones(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, ((1 << cols) - 1,) * rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return (self.data[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.cols
        for i, r in enumerate(self.data):
            bit = 1 << i
            j = 0
            while r:
                if r & 1:
                    cols[j] |= bit
                r >>= 1
                j += 1
        return BitMatrix(self.cols, self.rows, tuple(cols))

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.cols != self.cols:
            raise ValueError("column counts differ")
        return BitMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.rows != self.rows:
            raise ValueError("row counts differ")
        shift = self.cols
        return BitMatrix(self.rows, self.cols + other.cols,
                         tuple(a | (b << shift) for a, b in zip(self.data, other.data)))

    def mul_vec(self, x: int) -> int:
        """m.x over GF(2); x and the result are bit vectors."""
        out = 0
        for i, r in enumerate(self.data):
            if bin(r & x).count("1") & 1:
                out |= 1 << i
        return out

    def vec_mul(self, y: int) -> int:
        """y.m over GF(2), i.e. the XOR of the rows selected by y."""
        out = 0
        for i, r in enumerate(self.data):
            if (y >> i) & 1:
                out ^= r
        return out

    def lift(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(r) for r in self.to_lists()))

    def to_text(self) -> str:
        return "".join(
            "".join("1" if (r >> j) & 1 else "0" for j in range(self.cols)) + "\n" for r in self.data
        )

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        for n, ln in enumerate(lines, 1):
            if set(ln) - {"0", "1"}:
                raise ValueError(f"line {n}: expected only 0/1 characters")
        return cls.from_rows([[int(c) for c in ln] for ln in lines])


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match declared dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(tuple(int(e) for e in r) for r in rows))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )


def _rref(rows: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over GF(2).

    Returns the nonzero reduced rows and their pivot columns, pivots taken as
    the lowest set bit and sorted increasingly.
    """
    pivots: dict[int, int] = {}  # pivot column -> row
    for x in rows:
        while x:
            low = x & -x
            col = low.bit_length() - 1
            p = pivots.get(col)
            if p is None:
                break
            x ^= p
        if x:
            pivots[(x & -x).bit_length() - 1] = x
    # each pivot row's lowest bit is its pivot, so clearing columns in
    # increasing order never reintroduces an already cleared one
    order = sorted(pivots)
    for col in order:
        x = pivots[col]
        for c in order:
            if c != col and (pivots[c] >> col) & 1:
                pivots[c] ^= x
    return [pivots[c] for c in order], order


def gf2_rank(m: BitMatrix) -> int:
    pivots: dict[int, int] = {}
    for x in m.data:
        while x:
            col = (x & -x).bit_length() - 1
            p = pivots.get(col)
            if p is None:
                pivots[col] = x
                break
            x ^= p
    return len(pivots)


def gf2_kernel_basis(m: BitMatrix) -> list[int]:
    """Basis of {x : m.x = 0}, one vector per free column in increasing order."""
    rows, pivot_cols = _rref(m.data)
    pivot_set = set(pivot_cols)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        x = 1 << f
        for r, p in zip(rows, pivot_cols):
            if (r >> f) & 1:
                x |= 1 << p
        basis.append(x)
    return basis


def gf2_in_span(basis: Sequence[int], x: int, length: int) -> bool:
    limit = 1 << length
    for b in (*basis, x):
        if b < 0 or b >= limit:
            raise ValueError(f"vector has bits beyond length {length}")
    pivots: dict[int, int] = {}
    for b in basis:
        while b:
            col = (b & -b).bit_length() - 1
            p = pivots.get(col)
            if p is None:
                pivots[col] = b
                break
            b ^= p
    while x:
        col = (x & -x).bit_length() - 1
        p = pivots.get(col)
        if p is None:
            return False
        x ^= p
    return True


def rational_rank(m: IntMatrix) -> int:
    """Rank over Q by Bareiss fraction-free elimination; every division is exact."""
    a = [list(r) for r in m.entries]
    n_rows, n_cols = m.rows, m.cols
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        top = a[r]
        p = top[c]
        for i in range(r + 1, n_rows):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, n_cols):
                    row[j] = (p * row[j] - f * top[j]) // prev
            elif p != prev:
                for j in range(c + 1, n_cols):
                    if row[j]:
                        row[j] = p * row[j] // prev
            row[c] = 0
        prev = p
        r += 1
    return r
