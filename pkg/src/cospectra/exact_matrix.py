"""Dense integer matrices, block assembly and exact characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import NotSquare, OrderMismatch, ShapeMismatch
from .polynomial import IntPoly


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense matrix of Python ints, stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch(f"negative shape {self.rows}x{self.cols}")
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{len(entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ShapeMismatch(f"row {i} has {len(r)} entries, expected {cols}")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (1,) * (rows * cols))

    @classmethod
    def complete(cls, n: int) -> IntMatrix:
        """(J - I)_n, the adjacency matrix of K_n."""
        return cls(n, n, tuple(int(i != j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def order(self) -> int:
        if self.rows != self.cols:
            raise NotSquare(f"{self.rows}x{self.cols} matrix has no order")
        return self.rows

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_numpy(self, dtype=float) -> np.ndarray:
        return np.array(self.entries, dtype=dtype).reshape(self.rows, self.cols)

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        n = self.rows
        e = self.entries
        return all(e[i * n + j] == e[j * n + i] for i in range(n) for j in range(i + 1, n))

    def row_sums(self) -> list[int]:
        return [sum(self.row(i)) for i in range(self.rows)]

    def col_sums(self) -> list[int]:
        return self.T.row_sums()

    def _check_same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols_b = [other.T.row(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in cols_b)
        return IntMatrix(self.rows, other.cols, tuple(out))

    def permuted(self, perm: Sequence[int]) -> IntMatrix:
        """P M P^T for the relabeling new index k <- old index perm[k]."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise ValueError("not a permutation")
        return IntMatrix(n, n, tuple(self[perm[i], perm[j]] for i in range(n) for j in range(n)))

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{x:>2}" for x in self.row(i)) for i in range(self.rows))


@dataclass(frozen=True)
class Zero:
    """Symbolic zero block with an explicitly declared shape."""

    rows: int
    cols: int

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols


Cell = Union[IntMatrix, Zero]


@dataclass(frozen=True)
class BlockGrid:
    """A rectangular grid of blocks to be concatenated into one matrix."""

    cells: tuple[tuple[Cell, ...], ...]

    def __init__(self, cells: Iterable[Iterable[Cell]]):
        object.__setattr__(self, "cells", tuple(tuple(r) for r in cells))

    @property
    def block_rows(self) -> int:
        return len(self.cells)

    @property
    def block_cols(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    def row_heights(self) -> list[int]:
        heights = []
        for bi, brow in enumerate(self.cells):
            if len(brow) != self.block_cols:
                raise ShapeMismatch(f"block row {bi} has {len(brow)} cells, expected {self.block_cols}")
            hs = {c.rows for c in brow}
            if len(hs) != 1:
                raise ShapeMismatch(f"block row {bi} mixes heights {sorted(hs)}")
            heights.append(hs.pop())
        return heights

    def col_widths(self) -> list[int]:
        widths = []
        for bj in range(self.block_cols):
            ws = {brow[bj].cols for brow in self.cells}
            if len(ws) != 1:
                raise ShapeMismatch(f"block column {bj} mixes widths {sorted(ws)}")
            widths.append(ws.pop())
        return widths


def block_assemble(grid: BlockGrid | Sequence[Sequence[Cell]]) -> IntMatrix:
    """Concatenate a shape-consistent grid of blocks into one matrix."""
    if not isinstance(grid, BlockGrid):
        grid = BlockGrid(grid)
    heights = grid.row_heights()
    widths = grid.col_widths()
    total_cols = sum(widths)
    out: list[int] = []
    for brow, h in zip(grid.cells, heights):
        for r in range(h):
            for cell, w in zip(brow, widths):
                if isinstance(cell, Zero):
                    out.extend([0] * w)
                else:
                    out.extend(cell.row(r))
    return IntMatrix(sum(heights), total_cols, tuple(out))


def direct_sum(*blocks: IntMatrix) -> IntMatrix:
    """Block-diagonal matrix of the given blocks (empty sum is the 0x0 matrix)."""
    blocks = tuple(b for b in blocks)
    if not blocks:
        return IntMatrix.zeros(0)
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [0] * (rows * cols)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            base = (r0 + i) * cols + c0
            out[base:base + b.cols] = b.row(i)
        r0 += b.rows
        c0 += b.cols
    return IntMatrix(rows, cols, tuple(out))


# determinants and characteristic polynomials -----------------------------


def _require_square(m: IntMatrix) -> int:
    if not m.is_square():
        raise NotSquare(f"expected a square matrix, got {m.rows}x{m.cols}")
    return m.rows


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = _require_square(m)
    a = m.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def char_poly(m: IntMatrix) -> IntPoly:
    """det(xI - m) by Faddeev-LeVerrier.

    With M_0 = 0 the recurrence M_k = m M_{k-1} + c_{n-k+1} I,
    c_{n-k} = -tr(m M_k) / k keeps every quantity integral, so each division
    is exact. Products with m skip its zero entries.
    """
    n = _require_square(m)
    nz_rows = [[(j, a) for j, a in enumerate(m.row(i)) if a] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    # mk holds m @ M_k; start from m @ M_1 = m
    mk = [list(m.row(i)) for i in range(n)]
    for k in range(1, n + 1):
        tr = sum(mk[i][i] for i in range(n))
        c, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = c
        if k == n:
            break
        # M_{k+1} = m M_k + c I, then multiply by m
        for i in range(n):
            mk[i][i] += c
        nxt = []
        for i in range(n):
            acc = [0] * n
            for j, a in nz_rows[i]:
                rj = mk[j]
                if a == 1:
                    for t in range(n):
                        acc[t] += rj[t]
                else:
                    for t in range(n):
                        acc[t] += a * rj[t]
            nxt.append(acc)
        mk = nxt
    return IntPoly(coeffs)


def _lmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _lsub(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a = a + [0] * (len(b) - len(a))
    out = a[:]
    for i, y in enumerate(b):
        out[i] -= y
    while out and out[-1] == 0:
        out.pop()
    return out


def _ldiv_exact(a: list[int], b: list[int]) -> list[int]:
    """Quotient a / b over Z[x]; the caller guarantees exactness."""
    if len(b) == 1:
        d = b[0]
        return [x // d for x in a]
    rem = a[:]
    db, lb = len(b) - 1, b[-1]
    quot = [0] * (len(a) - db)
    for i in range(len(quot) - 1, -1, -1):
        top = rem[i + db]
        if top:
            qi = top // lb
            quot[i] = qi
            for j, c in enumerate(b):
                rem[i + j] -= qi * c
    return quot


def poly_det(entries: Sequence[Sequence[IntPoly]]) -> IntPoly:
    """Determinant of a square matrix over Z[x] by Bareiss elimination.

    Every Bareiss quotient is an exact division in Z[x]; pivots are chosen
    as the first nonzero entry at or below the diagonal.
    """
    n = len(entries)
    for i, r in enumerate(entries):
        if len(r) != n:
            raise NotSquare(f"row {i} has {len(r)} entries, expected {n}")
    if n == 0:
        return IntPoly.constant(1)
    a = [[list(e.coeffs) for e in r] for r in entries]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return IntPoly()
        akk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                x, y = row_i[j], row_k[j]
                if aik and y:
                    num = _lsub(_lmul(akk, x), _lmul(aik, y))
                elif x:
                    num = _lmul(akk, x)
                else:
                    continue
                row_i[j] = _ldiv_exact(num, prev) if num else []
        prev = akk
    return IntPoly(a[n - 1][n - 1]) * sign


def gen_char_poly(m: IntMatrix, w: IntMatrix) -> IntPoly:
    """det(x*w - m), the determinant of the pencil as a polynomial in x.

    For the normalized Laplacian pencil pass m = D - A and w = D.
    """
    n = _require_square(m)
    if _require_square(w) != n:
        raise OrderMismatch(f"pencil orders differ: {n} vs {w.rows}")
    entries = [
        [IntPoly((-m[i, j], w[i, j])) for j in range(n)]
        for i in range(n)
    ]
    return poly_det(entries)
