"""Closed-form predictions for the code families and design checks.

Every predictor is integer arithmetic; divisions that must be exact are
checked and raise :class:`NotIntegral` on a remainder.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations, product
from math import comb, gcd
from typing import Iterable, Optional

import numpy as np

from .code import LinearCode, _budget, enumerate_codewords, exact_weight_distribution, extend_code
from .constructions import hamming_length
from .cosets import IntersectionArray
from .errors import MixedWeights, NotExtensionPair, NotIntegral, OutOfRange, TooLarge
from .matgf import GFVector

# Parameters (n, k, d, rho) and intersection arrays of the sporadic codes.
SPORADIC_EXPECTED = {
    "1": ((15, 9, 3, 3), ((15, 12, 1), (1, 4, 15))),
    "1x": ((16, 9, 4, 4), ((16, 15, 12, 1), (1, 4, 15, 16))),
    "2": ((18, 12, 3, 2), ((18, 15), (1, 6))),
    "3": ((15, 9, 3, 3), ((15, 12, 1), (1, 4, 15))),
}


def exact_div(num: int, den: int, what: str = "value") -> int:
    if den == 0 or num % den:
        raise NotIntegral(f"{what}: {num}/{den} is not an integer")
    return num // den


def _family_n(family: str, q: int, k: int, c: int) -> int:
    if family not in ("I", "II"):
        raise OutOfRange(f"unknown family {family!r}")
    if q < 2 or k < 2:
        raise OutOfRange(f"need q >= 2 and k >= 2, got q={q}, k={k}")
    n = hamming_length(q, k)
    if gcd(n, q - 1) != 1:
        raise OutOfRange(f"no cyclic Hamming code for q={q}, k={k}")
    hi = n if family == "I" else n - 1
    if not 1 <= c <= hi:
        raise OutOfRange(f"family {family} needs 1 <= c <= {hi}, got {c}")
    return n


def _is_hamming_case(family: str, q: int, k: int, c: int, n: int) -> bool:
    """Parameter choices that collapse to a Hamming code."""
    if family == "I":
        return c == 1
    return q == 2 and c == n - 1


def predicted_ia(family: str, q: int, k: int, c: int) -> IntersectionArray:
    n = _family_n(family, q, k, c)
    if _is_hamming_case(family, q, k, c, n):
        raise OutOfRange(f"family {family} with c={c} is a perfect (Hamming) code")
    if family == "I":
        b = ((q - 1) * n * c, ((q - 1) * n - c + 2) * (c - 1))
        cc = (1, c * (c - 1))
        degree = (q - 1) * n * c
    else:
        b = ((c + 3) * n * (q - 1), (c + 2) * ((q - 1) * n - 1 - c))
        cc = (1, (c + 2) * (c + 3))
        degree = (q - 1) * n * (c + 3)
    return IntersectionArray(b, cc, degree)


def predicted_c3(family: str, q: int, k: int, c: int) -> int:
    """Number of weight-3 codewords."""
    n = _family_n(family, q, k, c)
    if family == "I":
        num = (q - 1) * c * n * ((q - 1) * (n - 1) + (c - 1) * (c - 2))
    else:
        num = (c + 3) * n * (q - 1) * ((n - 1) * (q - 1) + (c + 1) * (c + 2))
    return exact_div(num, 6, "|C_3|")


def predicted_dual_weights(family: str, q: int, k: int, c: int) -> dict[int, Optional[int]]:
    """Nonzero dual weights mapped to their multiplicities (``None`` when not predicted)."""
    n = _family_n(family, q, k, c)
    base = q ** (k - 1)
    if family == "I":
        if c == 1:
            raise OutOfRange("c = 1 gives a Hamming code; its dual is the simplex code")
        return {
            c * base: q ** (2 * k) - c * (q**k - 1) - 1,
            (c - 1) * base: c * (q**k - 1),
        }
    if q == 2 and c == n - 1:
        return {2 ** (2 * k - 1): 2 ** (2 * k) - 1}
    return {(c + 3) * base: None, (c + 2) * base: None}


def _extended_II_c(k: int) -> int:
    if k < 3:
        raise OutOfRange(f"k={k}: c = 2^(k-1) - 2 must be at least 1")
    return 2 ** (k - 1) - 2


def predicted_ia_extended_II(k: int) -> IntersectionArray:
    """Array of the extension of the binary family-II code with ``c = 2^(k-1) - 2``."""
    _extended_II_c(k)
    N = 2 ** (k - 1) * (2**k + 1)
    return IntersectionArray(
        (N, N - 1, 2 ** (2 * k - 2)),
        (1, 2 ** (k - 1) * (2 ** (k - 1) + 1), N),
        N,
    )


def predicted_extended_II_coset_counts(k: int) -> tuple[int, int, int, int]:
    """Cosets per leader weight 0..3, i.e. ``|C*(i)| / |C*|``."""
    _extended_II_c(k)
    N = 2 ** (k - 1) * (2**k + 1)
    return (1, N, 2 ** (2 * k) - 1, 2 ** (k - 1) * (2**k - 1))


def predicted_extended_II_c4(k: int) -> int:
    """``|C*_4|`` of the extended code."""
    _extended_II_c(k)
    num = 2 ** (k - 1) * (2 ** (2 * k - 2) - 1) * (2 ** (2 * k) - 1) * (2 ** (k - 2) + 1)
    return exact_div(num, 12, "|C*_4|")


def predicted_extended_II_lambda(k: int) -> int:
    """``lambda`` of the 2-design formed by weight-4 words of the extended code."""
    _extended_II_c(k)
    num = (2 ** (2 * k - 2) - 1) * (2**k - 1) * (2 ** (k - 2) + 1)
    return exact_div(num, 2 ** (k - 1) * (2**k + 1) - 1, "lambda")


def design_lambda_i(t: int, v: int, w: int, lam: int, i: int) -> int:
    """Blocks through a fixed i-set of points in a t-(v, w, lambda) design."""
    if not 0 <= i <= t:
        raise OutOfRange(f"need 0 <= i <= t, got i={i}, t={t}")
    return exact_div(lam * comb(v - i, t - i), comb(w - i, t - i), f"lambda_{i}")


def _as_rows(words) -> tuple[np.ndarray, Optional[int]]:
    if isinstance(words, np.ndarray):
        return words.astype(np.int64).reshape(len(words), -1), None
    words = list(words)
    q = None
    rows = []
    for x in words:
        if isinstance(x, GFVector):
            q = x.field.q
            rows.append(x.entries)
        else:
            rows.append(np.asarray(x, dtype=np.int64))
    if not rows:
        return np.zeros((0, 0), dtype=np.int64), q
    return np.vstack(rows), q


def verify_design(words: Iterable, t: int, q: Optional[int] = None,
                  budget: Optional[int] = None) -> Optional[int]:
    """``lambda`` if ``words`` form a q-ary t-design, else ``None``.

    A weight-t vector ``y`` is at distance ``w - t`` from a weight-w word
    ``x`` exactly when ``y`` agrees with ``x`` on the support of ``y``; each
    word therefore contributes one count to each of its ``C(w, t)``
    restrictions.
    """
    rows, q_words = _as_rows(words)
    if len(rows) == 0:
        return None
    q = q if q is not None else (q_words if q_words is not None else int(rows.max()) + 1)
    q = max(q, 2)
    weights = np.count_nonzero(rows, axis=1)
    if len(np.unique(weights)) != 1:
        raise MixedWeights(f"words have weights {sorted(set(weights.tolist()))}")
    w = int(weights[0])
    v = rows.shape[1]
    if not 0 <= t <= w:
        raise OutOfRange(f"need 0 <= t <= w, got t={t}, w={w}")
    targets = comb(v, t) * (q - 1) ** t
    if targets > _budget(budget) or len(rows) * comb(w, t) > _budget(budget):
        raise TooLarge(f"{targets} weight-{t} vectors exceed budget")
    tally: Counter = Counter()
    for row in rows:
        sup = np.nonzero(row)[0]
        for sub in combinations(sup.tolist(), t):
            tally[(sub, tuple(int(row[j]) for j in sub))] += 1
    if len(tally) != targets:
        return None
    values = set(tally.values())
    return values.pop() if len(values) == 1 else None


def check_estesos(code: LinearCode, extended: LinearCode, budget: Optional[int] = None) -> bool:
    """Weight recursions linking a binary code to its extension, for every odd ``w``.

    ``|C*_{w+1}| (w+1) = (n+1) |C_w|`` and ``(n-w) |C_w| = (w+1) |C_{w+1}|``.
    """
    if code.q != 2:
        raise NotExtensionPair("the weight recursions are stated for binary codes")
    if extended.n != code.n + 1 or not extended.same_code(extend_code(code)):
        raise NotExtensionPair("second code is not the extension of the first")
    A = exact_weight_distribution(code, budget)
    B = exact_weight_distribution(extended, budget)
    n = code.n
    for w in range(1, n + 1, 2):
        if A[w] == 0:
            continue
        if B[w + 1] * (w + 1) != (n + 1) * A[w]:
            return False
        if (n - w) * A[w] != (w + 1) * A[w + 1]:
            return False
    return True


def block_permutation_equivalence(code: LinearCode, other: LinearCode, width: int,
                                  budget: Optional[int] = None) -> Optional[list[int]]:
    """Coordinate permutation mapping ``other`` onto ``code``, searched among
    permutations that move whole blocks of ``width`` columns and reorder
    columns inside each block; ``None`` if no such permutation exists."""
    if code.n != other.n or code.k != other.k or code.n % width:
        return None
    A = enumerate_codewords(code, budget)
    B = enumerate_codewords(other, budget)
    target = {r.tobytes() for r in A}
    probe = B[: min(len(B), 64)]
    blocks = code.n // width
    inner_perms = list(permutations(range(width)))
    for order in permutations(range(blocks)):
        for inner in product(inner_perms, repeat=blocks):
            perm = [width * order[b] + inner[b][i] for b in range(blocks) for i in range(width)]
            if all(r.tobytes() in target for r in np.ascontiguousarray(probe[:, perm])):
                if all(r.tobytes() in target for r in np.ascontiguousarray(B[:, perm])):
                    return perm
    return None
