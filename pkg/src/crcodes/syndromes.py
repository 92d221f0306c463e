"""Integer-indexed syndrome arithmetic shared by the code and coset modules.

A syndrome ``(s_0, ..., s_{r-1})`` is stored as the base-q integer
``sum(s_i * q**i)`` where ``s_i`` belongs to row ``i`` of a full-rank row
basis of the parity-check matrix.  For characteristic 2 the field addition
is XOR of encodings, so syndrome addition is XOR of indices.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from .errors import LengthMismatch, TooLarge
from .gfq import FieldSpec
from .matgf import GFMatrix, row_basis

CHUNK = 1 << 16


class SyndromeSpace:
    """Syndrome indexing for one parity-check matrix."""

    def __init__(self, H: GFMatrix):
        self.field: FieldSpec = H.field
        self.basis = row_basis(H)
        self.q = self.field.q
        self.r = self.basis.rows
        self.n = H.cols
        self.size = self.q**self.r
        self._weights = self.q ** np.arange(self.r, dtype=np.int64)
        self._xor = self.field.p == 2
        f = self.field
        # step[beta - 1, j] = syndrome index of beta * e_j
        cols = self.basis.data.T  # (n, r)
        self.step = np.zeros((self.q - 1, self.n), dtype=np.int64)
        for beta in range(1, self.q):
            self.step[beta - 1] = f.mul_table[beta, cols] @ self._weights

    def encode(self, digits: np.ndarray) -> np.ndarray:
        return np.asarray(digits, dtype=np.int64) @ self._weights

    def decode(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // self._weights) % self.q

    def add(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._xor:
            return a ^ b
        a, b = np.broadcast_arrays(a, b)
        return self.encode(self.field.add_table[self.decode(a), self.decode(b)])

    def neg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self._xor:
            return a
        return self.encode(self.field.neg_table[self.decode(a)])

    def of_vector(self, v) -> int:
        v = np.asarray(v, dtype=np.int64)
        if len(v) != self.n:
            raise LengthMismatch(f"vector length {len(v)} != {self.n}")
        out = np.zeros((), dtype=np.int64)
        for j in np.nonzero(v)[0]:
            out = self.add(out, self.step[v[j] - 1, j])
        return int(out)

    def steps_flat(self) -> np.ndarray:
        """Syndromes of all weight-1 vectors, ordered by position then scalar."""
        return self.step.T.reshape(-1)

    def weight_count(self, w: int) -> int:
        return comb(self.n, w) * (self.q - 1) ** w

    def iter_weight(self, w: int, budget: int):
        """Yield ``(supports, scalars, syndromes)`` chunks over all weight-w vectors."""
        total = self.weight_count(w)
        if total > budget:
            raise TooLarge(f"{total} weight-{w} vectors exceed budget {budget}")
        if w == 0:
            yield (np.zeros((1, 0), np.int64), np.zeros((1, 0), np.int64), np.zeros(1, np.int64))
            return
        scalars = np.array(list(itertools.product(range(1, self.q), repeat=w)), dtype=np.int64)
        per = max(1, CHUNK // len(scalars))
        combos = itertools.combinations(range(self.n), w)
        while True:
            block = list(itertools.islice(combos, per))
            if not block:
                return
            sup = np.array(block, dtype=np.int64)  # (B, w)
            S = len(scalars)
            sup_r = np.repeat(sup, S, axis=0)
            sc_r = np.tile(scalars, (len(sup), 1))
            syn = self.step[sc_r[:, 0] - 1, sup_r[:, 0]]
            for t in range(1, w):
                syn = self.add(syn, self.step[sc_r[:, t] - 1, sup_r[:, t]])
            yield sup_r, sc_r, syn

    def weight_slice(self, w: int, budget: int) -> np.ndarray:
        """Number of weight-w vectors in each coset, indexed by syndrome."""
        counts = np.zeros(self.size, dtype=np.int64)
        for _, _, syn in self.iter_weight(w, budget):
            counts += np.bincount(syn, minlength=self.size)
        return counts

    def vectors_with_syndrome(self, w: int, target: int, budget: int) -> np.ndarray:
        """All weight-w vectors whose syndrome is ``target``, as dense rows."""
        found = []
        for sup, sc, syn in self.iter_weight(w, budget):
            hit = syn == target
            if hit.any():
                rows = np.zeros((int(hit.sum()), self.n), dtype=np.int64)
                np.put_along_axis(rows, sup[hit], sc[hit], axis=1)
                found.append(rows)
        if not found:
            return np.zeros((0, self.n), dtype=np.int64)
        return np.vstack(found)
