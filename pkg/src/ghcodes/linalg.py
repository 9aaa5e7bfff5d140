"""Dense matrices over GF(2^r).

Entries are stored as an int64 numpy array of element bitmasks.  Row
operations go through the field's log tables, so everything stays exact.

Text format::

    rows cols r modulus
    e11 e12 ... e1n
    ...

Entries are written in decimal (or 0x-prefixed hex) and read back either way.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

import numpy as np

from .field import FieldContext, FieldError


@dataclass(frozen=True, eq=False)
class CodeMatrix:
    entries: np.ndarray
    field: FieldContext

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=np.int64, copy=True)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        if a.size and (a.min() < 0 or a.max() >= self.field.order):
            raise FieldError("matrix entry outside the field")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldContext) -> "CodeMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), field)

    @classmethod
    def identity(cls, n: int, field: FieldContext) -> "CodeMatrix":
        return cls(np.eye(n, dtype=np.int64), field)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def T(self) -> "CodeMatrix":
        return CodeMatrix(self.entries.T, self.field)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CodeMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __matmul__(self, other: "CodeMatrix") -> "CodeMatrix":
        return matmul(self, other)

    def is_zero(self) -> bool:
        return not self.entries.any()

    def __repr__(self) -> str:
        return f"CodeMatrix({self.rows}x{self.cols} over GF(2^{self.field.r}))"


def matmul(A: CodeMatrix, B: CodeMatrix) -> CodeMatrix:
    if A.field != B.field:
        raise FieldError("matrices over different fields")
    if A.cols != B.rows:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    F = A.field
    out = np.zeros((A.rows, B.cols), dtype=np.int64)
    for t in range(A.cols):
        out ^= F.mul_array(A.entries[:, t, None], B.entries[None, t, :])
    return CodeMatrix(out, F)


def rref(M: CodeMatrix) -> tuple[CodeMatrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns.

    Pivots are the first nonzero entry found scanning down each column.
    """
    F = M.field
    a = np.array(M.entries, dtype=np.int64)
    rows, cols = a.shape
    pivots: list[int] = []
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        p = rank + int(nz[0])
        if p != rank:
            a[[rank, p]] = a[[p, rank]]
        a[rank] = F.scale_array(F.inv(int(a[rank, c])), a[rank])
        col = a[:, c].copy()
        col[rank] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] ^= F.mul_array(col[hit, None], a[rank][None, :])
        pivots.append(c)
        rank += 1
    return CodeMatrix(a, F), rank, pivots


def rank(M: CodeMatrix) -> int:
    return rref(M)[1]


def row_basis(M: CodeMatrix) -> CodeMatrix:
    """Nonzero rows of the reduced echelon form."""
    R, rk, _ = rref(M)
    return CodeMatrix(R.entries[:rk], M.field)


def kernel_basis(M: CodeMatrix) -> CodeMatrix:
    """Rows spanning {v : M v^T = 0}; there are cols - rank of them."""
    F = M.field
    R, rk, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    K = np.zeros((len(free), M.cols), dtype=np.int64)
    for row, f in enumerate(free):
        K[row, f] = 1
        # characteristic 2: -x == x
        for i, p in enumerate(pivots):
            K[row, p] = R.entries[i, f]
    return CodeMatrix(K, F)


def same_row_space(A: CodeMatrix, B: CodeMatrix) -> bool:
    if A.field != B.field or A.cols != B.cols:
        return False
    ra, rb = rank(A), rank(B)
    if ra != rb:
        return False
    stacked = CodeMatrix(np.vstack([A.entries, B.entries]), A.field)
    return rank(stacked) == ra


def write_matrix(M: CodeMatrix, out: TextIO | str | Path, hex: bool = False) -> None:
    fmt = (lambda v: f"{v:#x}") if hex else str
    lines = [f"{M.rows} {M.cols} {M.field.r} {M.field.modulus}"]
    lines.extend(" ".join(fmt(int(v)) for v in row) for row in M.entries)
    text = "\n".join(lines) + "\n"
    if isinstance(out, (str, Path)):
        Path(out).write_text(text)
    else:
        out.write(text)


def format_matrix(M: CodeMatrix, hex: bool = False) -> str:
    buf = io.StringIO()
    write_matrix(M, buf, hex=hex)
    return buf.getvalue()


def parse_matrix(text: str) -> CodeMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 4:
        raise ValueError("header must be 'rows cols r modulus'")
    rows, cols, r, modulus = (int(x) for x in header)
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"expected {rows} rows, found {len(body)}")
    data = [[int(x, 0) for x in ln.split()] for ln in body]
    if any(len(row) != cols for row in data):
        raise ValueError(f"every row must have {cols} entries")
    arr = np.array(data, dtype=np.int64).reshape(rows, cols)
    return CodeMatrix(arr, FieldContext(r, modulus))


def read_matrix(path: str | Path) -> CodeMatrix:
    return parse_matrix(Path(path).read_text())
