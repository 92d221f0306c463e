"""Builders for the concatenated code families and the sporadic codes."""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd

import numpy as np

from .code import LinearCode, code_from_parity, extend_code
from .errors import BadC, BadShape, FieldTooLarge, NotCyclic, UnknownId
from .gfq import FieldSpec, field_new, field_of_order
from .matgf import GFMatrix, GFVector, hstack, vstack

MAX_EXTENSION_ORDER = 1 << 20


def hamming_length(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


def cyclic_shift(x, i: int):
    """Right cyclic shift applied ``i`` times; negative ``i`` is taken mod ``n``."""
    if isinstance(x, GFVector):
        return GFVector(x.field, cyclic_shift(x.entries, i))
    arr = np.asarray(x)
    n = arr.shape[-1]
    if n == 0:
        return arr.copy()
    return np.roll(arr, i % n, axis=-1)


def shift_columns(H: GFMatrix, i: int) -> GFMatrix:
    """Every row replaced by its ``i``-fold right cyclic shift."""
    return GFMatrix(H.field, cyclic_shift(H.data, i))


def _times_x(f: FieldSpec, v: np.ndarray, poly: np.ndarray) -> np.ndarray:
    """Multiply a coefficient vector by ``x`` modulo the monic ``poly``."""
    top = v[-1]
    out = np.empty_like(v)
    out[0] = 0
    out[1:] = v[:-1]
    return f.add_table[out, f.neg_table[f.mul_table[top, poly[:-1]]]]


def primitive_polynomial(f: FieldSpec, k: int) -> np.ndarray:
    """Monic degree-k polynomial over ``f`` whose root ``x`` generates GF(q^k)*.

    Candidates are scanned in increasing base-q encoding of their lower
    coefficients; the first one for which ``x`` has order ``q^k - 1`` wins.
    """
    q = f.q
    order = q**k - 1
    one = np.zeros(k, dtype=np.int64)
    one[0] = 1
    for low in range(1, q**k):
        digits = [(low // q**i) % q for i in range(k)]
        if digits[0] == 0:
            continue
        poly = np.array(digits + [1], dtype=np.int64)
        v = one.copy()
        period = 0
        for e in range(1, order + 1):
            v = _times_x(f, v, poly)
            if not (v != one).any():
                period = e
                break
        if period == order:
            return poly
    raise AssertionError(f"no primitive polynomial of degree {k} over GF({q})")  # pragma: no cover


def cyclic_hamming(q: int, k: int) -> GFMatrix:
    """Parity-check matrix of the cyclic q-ary Hamming code of redundancy ``k``.

    Column ``j`` holds the coordinates of ``beta**j`` in the basis
    ``1, alpha, ..., alpha**(k-1)``, where ``alpha`` is a root of the
    primitive polynomial above and ``beta = alpha**(q-1)`` has order ``n``.
    """
    f = field_of_order(q)
    if q**k > MAX_EXTENSION_ORDER:
        raise FieldTooLarge(f"GF({q}^{k}) is above the supported size")
    n = hamming_length(q, k)
    if gcd(n, q - 1) != 1:
        raise NotCyclic(f"gcd({n}, {q - 1}) != 1: no cyclic Hamming code for q={q}, k={k}")
    if gcd(n, q ** (k - 1)) != 1:  # pragma: no cover - holds for every prime power
        raise AssertionError("gcd(n, q^(k-1)) != 1")
    poly = primitive_polynomial(f, k)
    cols = np.zeros((n, k), dtype=np.int64)
    v = np.zeros(k, dtype=np.int64)
    v[0] = 1
    for j in range(n):
        cols[j] = v
        for _ in range(q - 1):
            v = _times_x(f, v, poly)
    H = GFMatrix(f, cols.T)
    _check_pairwise_independent(H)
    return H


def _check_pairwise_independent(H: GFMatrix) -> None:
    f = H.field
    cols = H.data.T
    normalized = set()
    for col in cols:
        nz = np.nonzero(col)[0]
        if len(nz) == 0:
            raise AssertionError("zero column in Hamming matrix")
        lead = f.inv_table[col[nz[0]]]
        normalized.add(tuple(f.mul_table[lead, col].tolist()))
    if len(normalized) != len(cols):
        raise AssertionError("Hamming matrix has parallel columns")


@dataclass(frozen=True)
class FamilyParams:
    family: str
    q: int
    k: int
    c: int

    @property
    def n(self) -> int:
        """Length of the underlying Hamming code."""
        return hamming_length(self.q, self.k)

    @property
    def length(self) -> int:
        return self.c * self.n if self.family == "I" else (self.c + 3) * self.n

    def validate(self) -> None:
        field_of_order(self.q)
        if self.k < 2:
            raise BadC(f"k must be >= 2, got {self.k}")
        n = self.n
        if gcd(n, self.q - 1) != 1:
            raise NotCyclic(f"gcd({n}, {self.q - 1}) != 1")
        hi = n if self.family == "I" else n - 1
        if not 1 <= self.c <= hi:
            raise BadC(f"family {self.family} needs 1 <= c <= {hi}, got c={self.c}")

    def to_json(self) -> dict:
        return {"q": self.q, "k": self.k, "c": self.c}


def construction_I(q: int, k: int, c: int) -> LinearCode:
    """Code with parity matrix ``[H H ... H ; H_1 H_2 ... H_c]``."""
    fp = FamilyParams("I", q, k, c)
    fp.validate()
    H = cyclic_hamming(q, k)
    top = hstack([H] * c)
    bottom = hstack([shift_columns(H, i) for i in range(1, c + 1)])
    return code_from_parity(vstack([top, bottom]), "I", fp.to_json())


def construction_II(q: int, k: int, c: int) -> LinearCode:
    """Code with parity matrix ``[H 0 H H ... H ; 0 H H H_1 ... H_c]``."""
    fp = FamilyParams("II", q, k, c)
    fp.validate()
    H = cyclic_hamming(q, k)
    Z = GFMatrix.zeros(H.field, H.rows, H.cols)
    top = hstack([H, Z, H] + [H] * c)
    bottom = hstack([Z, H, H] + [shift_columns(H, i) for i in range(1, c + 1)])
    return code_from_parity(vstack([top, bottom]), "II", fp.to_json())


# The 2x3 matrix printed for the sporadic codes; it equals cyclic_hamming(2, 2).
K_MATRIX = ((1, 0, 1), (0, 1, 1))

D23 = (
    (0, 0, 0, 0, 0, 0),
    (0, 0, 1, 2, 2, 1),
    (0, 1, 0, 1, 2, 2),
    (0, 2, 1, 0, 1, 2),
    (0, 2, 2, 1, 0, 1),
    (0, 1, 2, 2, 1, 0),
)

SPORADIC_IDS = ("1", "1x", "2", "3")


@dataclass(frozen=True)
class DifferenceMatrix:
    u: int
    q: int
    entries: tuple[tuple[int, ...], ...]


def difference_matrix_check(D: DifferenceMatrix) -> bool:
    """Every ordered pair of distinct rows differs by each element of Z_q exactly u times."""
    arr = np.array(D.entries, dtype=np.int64)
    size = D.q * D.u
    if arr.ndim != 2 or arr.shape != (size, size):
        raise BadShape(f"expected a {size}x{size} matrix, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= D.q):
        raise BadShape(f"entries must lie in Z_{D.q}")
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            diff = (arr[i] - arr[j]) % D.q
            if not (np.bincount(diff, minlength=D.q) == D.u).all():
                return False
    return True


def _k_blocks() -> list[GFMatrix]:
    K = GFMatrix(field_new(2, 1), np.array(K_MATRIX))
    return [K, shift_columns(K, 1), shift_columns(K, 2)]


def _substitute(pattern, blocks: list[GFMatrix]) -> GFMatrix:
    """Block matrix replacing entry ``i`` by ``blocks[i]``."""
    return vstack([hstack([blocks[i] for i in row]) for row in pattern])


def sporadic_parity(ident: str) -> GFMatrix:
    ident = str(ident)
    K, K1, K2 = _k_blocks()
    Z = GFMatrix.zeros(K.field, 2, 3)
    if ident == "1":
        return vstack([
            hstack([K, Z, Z, K, K]),
            hstack([Z, K, Z, K, K1]),
            hstack([Z, Z, K, K, K2]),
        ])
    if ident == "2":
        return _substitute(D23, [K, K1, K2])
    if ident == "3":
        return _substitute([row[1:] for row in D23], [K, K1, K2])
    raise UnknownId(f"unknown sporadic code {ident!r}; expected one of {SPORADIC_IDS}")


def sporadic_code(ident) -> LinearCode:
    """Sporadic codes: ``1`` [15,9], ``1x`` its extension [16,9], ``2`` [18,12], ``3`` [15,9]."""
    ident = str(ident)
    if ident == "1x":
        return replace(extend_code(sporadic_code("1")), family="sporadic1x", params={})
    H = sporadic_parity(ident)
    return code_from_parity(H, f"sporadic{ident}", {})
