"""Linear codes over GF(q): duals, weight distributions, MacWilliams, distances."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from math import comb
from typing import Optional

import numpy as np

from .errors import EmptyCode, NonIntegerOutput, TooLarge
from .gfq import FieldSpec, field_new
from .matgf import GFMatrix, hstack, matmul, null_space, rank, row_basis, row_space_equal, vstack
from .syndromes import SyndromeSpace

DEFAULT_BUDGET = 1 << 24
BUDGET_ENV = "CRCODES_BUDGET"
MAX_DEPENDENCY_SEARCH = 5


def default_budget() -> int:
    """Enumeration budget, overridable through ``CRCODES_BUDGET``."""
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        return int(raw)
    return DEFAULT_BUDGET


def _budget(budget: Optional[int]) -> int:
    return default_budget() if budget is None else budget


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A linear ``[n, k]_q`` code held as a generator / parity-check pair.

    ``H`` is kept exactly as supplied and may be rank deficient; the
    effective redundancy is always ``n - k``.
    """

    field: FieldSpec
    n: int
    k: int
    G: GFMatrix
    H: GFMatrix
    family: str = "custom"
    params: dict = field(default_factory=dict)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.q}, family={self.family!r})"

    def same_code(self, other: "LinearCode") -> bool:
        """Set equality of the two codes."""
        if self.field != other.field or self.n != other.n or self.k != other.k:
            return False
        if self.k == 0:
            return True
        return row_space_equal(self.G, other.G)

    def syndrome_space(self) -> SyndromeSpace:
        return SyndromeSpace(self.H)

    def to_json(self) -> dict:
        return {
            "p": self.field.p,
            "m": self.field.m,
            "n": self.n,
            "k": self.k,
            "H": self.H.tolist(),
            "family": self.family,
            "params": dict(self.params),
        }


def code_from_parity(H: GFMatrix, family: str = "custom", params: Optional[dict] = None) -> LinearCode:
    """Code ``{x : H x^T = 0}``; ``H`` may be rank deficient."""
    G = null_space(H)
    if G.rows == 0:
        raise EmptyCode("parity-check matrix has full column rank; the code is {0}")
    return LinearCode(H.field, H.cols, G.rows, G, H, family, dict(params or {}))


def code_from_generator(G: GFMatrix, family: str = "custom", params: Optional[dict] = None) -> LinearCode:
    Gb = row_basis(G)
    if Gb.rows == 0:
        raise EmptyCode("generator matrix has rank 0")
    H = null_space(Gb)
    if H.rows == 0:
        H = GFMatrix.zeros(G.field, 1, G.cols)
    return LinearCode(G.field, G.cols, Gb.rows, Gb, H, family, dict(params or {}))


def code_from_json(doc: dict) -> LinearCode:
    f = field_new(int(doc["p"]), int(doc["m"]))
    H = GFMatrix(f, np.array(doc["H"], dtype=np.int64).reshape(len(doc["H"]), int(doc["n"])))
    code = code_from_parity(H, doc.get("family", "custom"), doc.get("params", {}))
    if "k" in doc and int(doc["k"]) != code.k:
        raise ValueError(f"document claims k={doc['k']} but H gives k={code.k}")
    return code


def dumps_code(code: LinearCode) -> str:
    return json.dumps(code.to_json(), indent=2) + "\n"


def dual(code: LinearCode) -> LinearCode:
    """The dual code; its generator is a row basis of ``H``."""
    Gd = row_basis(code.H)
    if Gd.rows == 0:
        raise EmptyCode("dual of the full space is {0}")
    return LinearCode(code.field, code.n, Gd.rows, Gd, code.G, f"dual({code.family})", dict(code.params))


def check_orthogonal(code: LinearCode) -> bool:
    """``G H^T = 0`` together with the rank identities."""
    prod = matmul(code.G, code.H.transpose())
    return (
        not prod.data.any()
        and rank(code.G) == code.k
        and rank(code.H) == code.n - code.k
    )


def iter_codewords(G: GFMatrix, chunk_rows: int = 14):
    """Yield all codewords spanned by ``G`` as ``(N, n)`` arrays, in blocks."""
    f = G.field
    q = f.q
    k, n = G.shape
    low = min(k, chunk_rows)
    # all combinations of the first `low` rows
    words = np.zeros((1, n), dtype=np.int64)
    for i in range(low):
        g = G.data[i]
        parts = [words] + [f.add_table[words, f.mul_table[s, g][None, :]] for s in range(1, q)]
        words = np.vstack(parts)
    high = G.data[low:]
    for coeffs in np.ndindex(*([q] * (k - low))):
        offset = np.zeros(n, dtype=np.int64)
        for s, g in zip(coeffs, high):
            if s:
                offset = f.add_table[offset, f.mul_table[s, g]]
        yield f.add_table[words, offset[None, :]]


def enumerate_codewords(code: LinearCode, budget: Optional[int] = None) -> np.ndarray:
    size = code.q**code.k
    if size > _budget(budget):
        raise TooLarge(f"{size} codewords exceed budget {_budget(budget)}")
    return np.vstack(list(iter_codewords(code.G)))


@dataclass(frozen=True)
class WeightDistribution:
    """Counts ``A_0 .. A_n`` of codewords by Hamming weight."""

    counts: tuple[int, ...]

    def __getitem__(self, w: int) -> int:
        return self.counts[w] if 0 <= w < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def nonzero_weights(self) -> list[int]:
        return [w for w, a in enumerate(self.counts) if w > 0 and a]

    def support(self) -> dict[int, int]:
        return {w: a for w, a in enumerate(self.counts) if a}


def weight_distribution(code: LinearCode, budget: Optional[int] = None) -> WeightDistribution:
    """Exact distribution by enumerating all ``q^k`` codewords."""
    size = code.q**code.k
    if size > _budget(budget):
        raise TooLarge(
            f"{size} codewords exceed budget {_budget(budget)}; enumerate the dual and use macwilliams"
        )
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for block in iter_codewords(code.G):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=code.n + 1)
    return WeightDistribution(tuple(int(a) for a in counts))


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
        for s in range(j + 1)
    )


def macwilliams(W: WeightDistribution, n: int, k: int, q: int) -> WeightDistribution:
    """Weight distribution of the dual of an ``[n, k]_q`` code with distribution ``W``."""
    if len(W) != n + 1:
        raise ValueError(f"distribution has {len(W)} entries, expected {n + 1}")
    denom = q**k
    support = [(i, a) for i, a in enumerate(W.counts) if a]
    out = []
    for j in range(n + 1):
        num = sum(a * krawtchouk(j, i, n, q) for i, a in support)
        if num % denom or num < 0:
            raise NonIntegerOutput(f"A'_{j} = {num}/{denom} is not a nonnegative integer")
        out.append(num // denom)
    return WeightDistribution(tuple(out))


def exact_weight_distribution(code: LinearCode, budget: Optional[int] = None) -> WeightDistribution:
    """Distribution of ``code`` from whichever side is enumerable."""
    b = _budget(budget)
    if code.q**code.k <= min(b, code.q ** (code.n - code.k)):
        return weight_distribution(code, b)
    if code.q ** (code.n - code.k) <= b:
        return macwilliams(weight_distribution(dual(code), b), code.n, code.n - code.k, code.q)
    if code.q**code.k <= b:
        return weight_distribution(code, b)
    raise TooLarge(f"neither [{code.n},{code.k}] nor its dual fits budget {b}")


def dual_weight_distribution(code: LinearCode, budget: Optional[int] = None) -> WeightDistribution:
    b = _budget(budget)
    if code.q ** (code.n - code.k) <= b:
        return weight_distribution(dual(code), b)
    if code.q**code.k <= b:
        return macwilliams(weight_distribution(code, b), code.n, code.k, code.q)
    raise TooLarge(f"neither [{code.n},{code.k}] nor its dual fits budget {b}")


def _dependency_exists(space: SyndromeSpace, w: int, budget: int) -> bool:
    """True iff some weight-w vector has zero syndrome, given none of smaller weight does.

    Splits the support into halves of weights ``a`` and ``b``: any pair of
    vectors with cancelling syndromes is either ``(u, -u)`` or sums to a
    codeword of weight exactly ``a + b`` (smaller weights being excluded).
    """
    if w == 1:
        return bool((space.step == 0).any())
    a, b = w // 2, w - w // 2
    Na = space.weight_slice(a, budget)
    Nb = Na if b == a else space.weight_slice(b, budget)
    neg = space.neg(np.arange(space.size, dtype=np.int64))
    pairs = int(np.dot(Na, Nb[neg]))
    trivial = int(Na.sum()) if a == b else 0
    return pairs > trivial


def min_distance(code: LinearCode, budget: Optional[int] = None) -> int:
    """Minimum nonzero weight, by enumeration or dependent-column search on ``H``."""
    b = _budget(budget)
    if code.q**code.k <= min(b, code.q ** (code.n - code.k)):
        W = weight_distribution(code, b)
        return min(W.nonzero_weights())
    space = code.syndrome_space()
    try:
        for w in range(1, MAX_DEPENDENCY_SEARCH + 1):
            if _dependency_exists(space, w, b):
                return w
    except TooLarge:
        pass
    if code.q**code.k <= b:
        return min(weight_distribution(code, b).nonzero_weights())
    raise TooLarge(f"no dependent column set of size <= {MAX_DEPENDENCY_SEARCH} within budget {b}")


def external_distance(code: LinearCode, budget: Optional[int] = None) -> int:
    """Number of distinct nonzero weights in the dual code."""
    return len(dual_weight_distribution(code, budget).nonzero_weights())


def packing_radius(d: int) -> int:
    return (d - 1) // 2


def extend_code(code: LinearCode) -> LinearCode:
    """Append a final coordinate making every coordinate sum zero."""
    f = code.field
    H = hstack([code.H, GFMatrix.zeros(f, code.H.rows, 1)])
    H = vstack([H, GFMatrix(f, np.ones((1, code.n + 1), dtype=np.int64))])
    G = code.G.data
    total = np.zeros(code.k, dtype=np.int64)
    for j in range(code.n):
        total = f.add_table[total, G[:, j]]
    Gx = GFMatrix(f, np.hstack([G, f.neg_table[total][:, None]]))
    params = dict(code.params)
    params["extended"] = True
    return LinearCode(f, code.n + 1, code.k, Gx, H, code.family, params)
