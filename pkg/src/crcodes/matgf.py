"""Dense vectors and matrices over GF(q) with exact row reduction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ColumnMismatch, LengthMismatch
from .gfq import FieldSpec, field_new


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class GFVector:
    field: FieldSpec
    entries: np.ndarray

    def __post_init__(self):
        arr = _frozen(self.entries)
        if arr.ndim != 1:
            raise ValueError("vector entries must be one-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.q):
            raise ValueError(f"entries must lie in [0, {self.field.q})")
        object.__setattr__(self, "entries", arr)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, GFVector)
            and self.field == other.field
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.field, self.entries.tobytes()))

    def __repr__(self):
        return f"GFVector(q={self.field.q}, {self.entries.tolist()})"

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.entries))

    def tolist(self) -> list[int]:
        return self.entries.tolist()


@dataclass(frozen=True, eq=False)
class GFMatrix:
    field: FieldSpec
    data: np.ndarray

    def __post_init__(self):
        arr = np.array(self.data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.q):
            raise ValueError(f"entries must lie in [0, {self.field.q})")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "GFMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "GFMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __eq__(self, other):
        return (
            isinstance(other, GFMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and np.array_equal(self.data, other.data)
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.data.tobytes()))

    def __repr__(self):
        return f"GFMatrix(q={self.field.q}, {self.rows}x{self.cols})"

    def row(self, i: int) -> GFVector:
        return GFVector(self.field, self.data[i])

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def transpose(self) -> "GFMatrix":
        return GFMatrix(self.field, self.data.T)


def hstack(blocks: list[GFMatrix]) -> GFMatrix:
    return GFMatrix(blocks[0].field, np.hstack([b.data for b in blocks]))


def vstack(blocks: list[GFMatrix]) -> GFMatrix:
    return GFMatrix(blocks[0].field, np.vstack([b.data for b in blocks]))


def scale(field: FieldSpec, a, s: int) -> np.ndarray:
    return field.mul_table[s, a]


def add(field: FieldSpec, a, b) -> np.ndarray:
    return field.add_table[a, b]


def sub(field: FieldSpec, a, b) -> np.ndarray:
    return field.add_table[a, field.neg_table[b]]


def dot_rows(field: FieldSpec, A: np.ndarray, x: np.ndarray) -> np.ndarray:
    """``A @ x`` over the field for a 2-D ``A`` and 1-D ``x``."""
    out = np.zeros(A.shape[0], dtype=np.int64)
    prods = field.mul_table[A, x[None, :]]
    for j in range(A.shape[1]):
        out = field.add_table[out, prods[:, j]]
    return out


def matmul(A: GFMatrix, B: GFMatrix) -> GFMatrix:
    if A.cols != B.rows:
        raise ColumnMismatch(f"cannot multiply {A.shape} by {B.shape}")
    f = A.field
    out = np.zeros((A.rows, B.cols), dtype=np.int64)
    for j in range(A.cols):
        term = f.mul_table[A.data[:, j][:, None], B.data[j][None, :]]
        out = f.add_table[out, term]
    return GFMatrix(f, out)


def mat_vec(M: GFMatrix, v: GFVector) -> GFVector:
    if M.cols != len(v):
        raise LengthMismatch(f"matrix has {M.cols} columns, vector has length {len(v)}")
    return GFVector(M.field, dot_rows(M.field, M.data, v.entries))


def _rref_array(field: FieldSpec, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    a = np.array(a, dtype=np.int64, copy=True)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, col])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = field.mul_table[field.inv_table[a[r, col]], a[r]]
        for i in range(rows):
            if i != r and a[i, col]:
                factor = field.neg_table[a[i, col]]
                a[i] = field.add_table[a[i], field.mul_table[factor, a[r]]]
        pivots.append(col)
        r += 1
    return a, pivots


def rref(M: GFMatrix) -> tuple[GFMatrix, int]:
    """Reduced row echelon form (same shape as ``M``) and the rank."""
    red, pivots = _rref_array(M.field, M.data)
    return GFMatrix(M.field, red), len(pivots)


def rank(M: GFMatrix) -> int:
    return rref(M)[1]


def row_basis(M: GFMatrix) -> GFMatrix:
    """Maximal linearly independent subset of the rows of ``M``, in order."""
    keep: list[int] = []
    current = 0
    for i in range(M.rows):
        trial = keep + [i]
        _, piv = _rref_array(M.field, M.data[trial])
        if len(piv) > current:
            keep = trial
            current = len(piv)
    return GFMatrix(M.field, M.data[keep].reshape(len(keep), M.cols))


def null_space(M: GFMatrix) -> GFMatrix:
    """Basis of ``{x : M x^T = 0}``, one basis vector per free column."""
    f = M.field
    n = M.cols
    red, pivots = _rref_array(f, M.data)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for b, j in enumerate(free):
        basis[b, j] = 1
        for r, pc in enumerate(pivots):
            basis[b, pc] = f.neg_table[red[r, j]]
    return GFMatrix(f, basis)


def row_space_equal(A: GFMatrix, B: GFMatrix) -> bool:
    if A.field != B.field or A.cols != B.cols:
        raise ColumnMismatch(f"cannot compare {A.shape} with {B.shape}")
    ra, ka = rref(A)
    rb, kb = rref(B)
    return ka == kb and np.array_equal(ra.data[:ka], rb.data[:kb])


def dumps_matrix(M: GFMatrix) -> str:
    lines = [f"{M.field.p} {M.field.m} {M.rows} {M.cols}"]
    lines += [" ".join(str(int(x)) for x in row) for row in M.data]
    return "\n".join(lines) + "\n"


def loads_matrix(text: str) -> GFMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    p, m, r, n = (int(t) for t in lines[0].split())
    data = [[int(t) for t in ln.split()] for ln in lines[1 : 1 + r]]
    if len(data) != r or any(len(row) != n for row in data):
        raise ValueError(f"expected {r} rows of {n} entries")
    return GFMatrix(field_new(p, m), np.array(data, dtype=np.int64).reshape(r, n))
