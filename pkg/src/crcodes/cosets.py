"""Coset analytics: leader weights, covering radius and complete regularity.

Cosets are identified by syndrome index.  Leader weights come from a
breadth-first search over the syndrome space in which every edge adds the
syndrome of a weight-1 vector; the depth of a syndrome is the weight of its
coset leader, which equals ``d(x, C)`` for every ``x`` in that coset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .code import LinearCode, _budget, enumerate_codewords, min_distance, packing_radius
from .errors import NotQuasiPerfect, TooLarge
from .matgf import GFVector, mat_vec
from .syndromes import SyndromeSpace

SYNDROME_BUDGET = 1 << 26
BRUTEFORCE_BUDGET = 1 << 20
_PROFILE_CHUNK = 1 << 14


@dataclass(frozen=True)
class IntersectionArray:
    """``{b_0, ..., b_{rho-1}; c_1, ..., c_rho}`` of a completely regular code."""

    b: tuple[int, ...]
    c: tuple[int, ...]
    degree: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.b) != len(self.c):
            raise ValueError("b and c must both have rho entries")
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))

    @property
    def rho(self) -> int:
        return len(self.b)

    def b_at(self, l: int) -> int:
        return self.b[l] if l < self.rho else 0

    def c_at(self, l: int) -> int:
        return self.c[l - 1] if l >= 1 else 0

    def a_at(self, l: int) -> int:
        """``a_l = (q-1) n - b_l - c_l``; needs ``degree = (q-1) n``."""
        if self.degree is None:
            raise ValueError("degree (q-1)n unknown for this array")
        return self.degree - self.b_at(l) - self.c_at(l)

    def __str__(self):
        return "{" + ", ".join(map(str, self.b)) + "; " + ", ".join(map(str, self.c)) + "}"

    def to_json(self) -> dict:
        return {"b": list(self.b), "c": list(self.c)}


@dataclass(frozen=True, eq=False)
class CosetAnalysis:
    code: LinearCode
    space: SyndromeSpace
    leader_weight: np.ndarray
    rho: int
    subconstituent_counts: tuple[int, ...]
    profiles: np.ndarray  # (num_syndromes, 3): counts of steps to levels l-1, l, l+1

    def subconstituent_sizes(self) -> list[int]:
        """``|C(i)| = q^k * #cosets of leader weight i``."""
        size = self.code.q**self.code.k
        return [size * cnt for cnt in self.subconstituent_counts]


@dataclass(frozen=True)
class CRReport:
    is_cr: bool
    rho: int
    coset_counts: tuple[int, ...]
    ia: Optional[IntersectionArray] = None
    witness: Optional[tuple[int, int]] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "is_cr": self.is_cr,
            "rho": self.rho,
            "b": list(self.ia.b) if self.ia else None,
            "c": list(self.ia.c) if self.ia else None,
            "coset_counts": list(self.coset_counts),
        }


def syndrome(H, v: GFVector) -> GFVector:
    """``H v^T``."""
    return mat_vec(H, v)


def analyze_cosets(code: LinearCode, budget: Optional[int] = None) -> CosetAnalysis:
    limit = SYNDROME_BUDGET if budget is None else budget
    space = code.syndrome_space()
    if space.size > limit:
        raise TooLarge(f"{space.size} syndromes exceed budget {limit}")
    steps = space.steps_flat()

    leader = np.full(space.size, -1, dtype=np.int64)
    leader[0] = 0
    frontier = np.array([0], dtype=np.int64)
    level = 0
    while len(frontier):
        nxt = []
        for lo in range(0, len(frontier), _PROFILE_CHUNK):
            nb = space.add(frontier[lo : lo + _PROFILE_CHUNK, None], steps[None, :]).ravel()
            nb = np.unique(nb)
            nb = nb[leader[nb] < 0]
            leader[nb] = level + 1
            nxt.append(nb)
        frontier = np.concatenate(nxt) if nxt else np.zeros(0, dtype=np.int64)
        level += 1
    if (leader < 0).any():  # pragma: no cover - a full-rank basis spans everything
        raise AssertionError("unreachable syndromes")
    rho = int(leader.max())

    profiles = np.zeros((space.size, 3), dtype=np.int64)
    all_syn = np.arange(space.size, dtype=np.int64)
    for lo in range(0, space.size, _PROFILE_CHUNK):
        s = all_syn[lo : lo + _PROFILE_CHUNK]
        nb_level = leader[space.add(s[:, None], steps[None, :])]
        own = leader[s][:, None]
        profiles[lo : lo + len(s), 0] = (nb_level == own - 1).sum(axis=1)
        profiles[lo : lo + len(s), 1] = (nb_level == own).sum(axis=1)
        profiles[lo : lo + len(s), 2] = (nb_level == own + 1).sum(axis=1)
    counts = tuple(int(x) for x in np.bincount(leader, minlength=rho + 1))
    leader.setflags(write=False)
    profiles.setflags(write=False)
    return CosetAnalysis(code, space, leader, rho, counts, profiles)


def _report_from_levels(levels: np.ndarray, profiles: np.ndarray, rho: int, counts, degree: int) -> CRReport:
    """Shared CR decision for the coset and brute-force paths."""
    first = np.zeros(rho + 1, dtype=np.int64)
    for l in range(rho + 1):
        first[l] = int(np.argmax(levels == l))
    ref = profiles[first[levels]]
    bad = (profiles != ref).any(axis=1)
    if bad.any():
        s = int(np.argmax(bad))
        return CRReport(False, rho, tuple(counts), None, (int(first[levels[s]]), s))
    b = [int(profiles[first[l], 2]) for l in range(rho)]
    c = [int(profiles[first[l], 0]) for l in range(1, rho + 1)]
    return CRReport(True, rho, tuple(counts), IntersectionArray(b, c, degree))


def verify_completely_regular(code: LinearCode, budget: Optional[int] = None,
                              analysis: Optional[CosetAnalysis] = None) -> CRReport:
    """Complete-regularity check on coset profiles; witnesses are syndrome indices."""
    an = analysis if analysis is not None else analyze_cosets(code, budget)
    degree = (code.q - 1) * code.n
    return _report_from_levels(an.leader_weight, an.profiles, an.rho, an.subconstituent_counts, degree)


def _vector_neighbors(idx: np.ndarray, q: int, n: int, add_table: np.ndarray) -> np.ndarray:
    """Indices of all ``(q-1) n`` neighbors of each vector index, shape ``(B, (q-1) n)``."""
    pw = q ** np.arange(n, dtype=np.int64)
    if q & (q - 1) == 0:
        # characteristic 2: adding beta to digit j is XOR with beta * q**j
        flips = (np.arange(1, q, dtype=np.int64)[:, None] * pw[None, :]).ravel()
        return idx[:, None] ^ flips[None, :]
    x = (idx[:, None] // pw) % q
    parts = [idx[:, None] + (add_table[x, beta] - x) * pw[None, :] for beta in range(1, q)]
    return np.concatenate(parts, axis=1)


def verify_cr_bruteforce(code: LinearCode, budget: Optional[int] = None) -> CRReport:
    """Per-vector check over all of ``F_q^n``; witnesses are vector indices.

    Vector ``x`` has index ``sum(x_j * q**j)``.  ``d(x, C)`` is the graph
    distance from ``x`` to the codeword set in the Hamming graph, found by a
    breadth-first search seeded with every codeword; no syndromes are used.
    """
    q, n = code.q, code.n
    limit = BRUTEFORCE_BUDGET if budget is None else budget
    if q**n > limit:
        raise TooLarge(f"{q}^{n} vectors exceed brute-force budget {limit}")
    add_table = code.field.add_table
    total = q**n
    pw = q ** np.arange(n, dtype=np.int64)
    words = enumerate_codewords(code, budget=q**code.k)

    dist = np.full(total, -1, dtype=np.int64)
    frontier = np.unique(words @ pw)
    dist[frontier] = 0
    level = 0
    while len(frontier):
        nxt = []
        for lo in range(0, len(frontier), _PROFILE_CHUNK):
            nb = np.unique(_vector_neighbors(frontier[lo : lo + _PROFILE_CHUNK], q, n, add_table))
            nb = nb[dist[nb] < 0]
            dist[nb] = level + 1
            nxt.append(nb)
        frontier = np.concatenate(nxt)
        level += 1
    rho = int(dist.max())

    profiles = np.zeros((total, 3), dtype=np.int64)
    for lo in range(0, total, _PROFILE_CHUNK):
        idx = np.arange(lo, min(total, lo + _PROFILE_CHUNK), dtype=np.int64)
        lv = dist[_vector_neighbors(idx, q, n, add_table)]
        own = dist[idx][:, None]
        profiles[idx, 0] = (lv == own - 1).sum(axis=1)
        profiles[idx, 1] = (lv == own).sum(axis=1)
        profiles[idx, 2] = (lv == own + 1).sum(axis=1)
    sizes = np.bincount(dist, minlength=rho + 1)
    per_coset = q**code.k
    if (sizes % per_coset).any():  # pragma: no cover - |C(i)| is a union of cosets
        raise AssertionError("subconstituent sizes are not multiples of |C|")
    counts = tuple(int(s // per_coset) for s in sizes)
    return _report_from_levels(dist, profiles, rho, counts, (q - 1) * n)


def coset_weight_slice(code: LinearCode, w: int, budget: Optional[int] = None) -> np.ndarray:
    """Number of weight-w vectors in each coset, indexed by syndrome."""
    return code.syndrome_space().weight_slice(w, _budget(budget))


def codewords_of_weight(code: LinearCode, w: int, budget: Optional[int] = None) -> np.ndarray:
    """All codewords of weight ``w`` as dense rows (zero-syndrome slice)."""
    return code.syndrome_space().vectors_with_syndrome(w, 0, _budget(budget))


def uniformly_packed_params(code: LinearCode, analysis: Optional[CosetAnalysis] = None,
                            d: Optional[int] = None, budget: Optional[int] = None) -> Optional[tuple[int, int]]:
    """``(lambda, mu)`` of a quasi-perfect code, or ``None`` when not uniformly packed.

    The number of codewords at distance ``e + 1`` from ``x`` equals the number
    of weight-``(e + 1)`` vectors in the coset of ``x``.
    """
    an = analysis if analysis is not None else analyze_cosets(code)
    d = min_distance(code, budget) if d is None else d
    e = packing_radius(d)
    if an.rho != e + 1:
        raise NotQuasiPerfect(f"rho = {an.rho} but e + 1 = {e + 1}")
    slice_ = coset_weight_slice(code, e + 1, budget)
    out = []
    for level in (e, e + 1):
        vals = np.unique(slice_[an.leader_weight == level])
        if len(vals) != 1:
            return None
        out.append(int(vals[0]))
    return out[0], out[1]
