"""Reproduction suite: each published instance recomputed and compared exactly.

Every criterion returns ``(ok, detail)``.  ``run_all`` wraps them with
timing and turns budget overruns into ``SKIPPED(budget)`` rows.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import gcd
from typing import Callable, Optional

import numpy as np

from . import analysis
from .code import (
    LinearCode,
    code_from_parity,
    dual,
    dual_weight_distribution,
    exact_weight_distribution,
    external_distance,
    extend_code,
    macwilliams,
    min_distance,
    packing_radius,
    weight_distribution,
)
from .constructions import (
    D23,
    DifferenceMatrix,
    construction_I,
    construction_II,
    cyclic_hamming,
    cyclic_shift,
    difference_matrix_check,
    sporadic_code,
)
from .cosets import (
    analyze_cosets,
    codewords_of_weight,
    coset_weight_slice,
    uniformly_packed_params,
    verify_completely_regular,
    verify_cr_bruteforce,
)
from .errors import NotQuasiPerfect, TooLarge
from .report import Budgets, lemma_graph_holds


@dataclass
class Row:
    ident: int
    title: str
    limit_s: float
    status: str = "PENDING"
    detail: str = ""
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "id": self.ident,
            "title": self.title,
            "status": self.status,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
            "limit_s": self.limit_s,
        }


def _ia(code: LinearCode, bud: Budgets):
    return verify_completely_regular(code, bud.syndromes)


def _fmt(ia) -> str:
    return str(ia) if ia is not None else "none"


def criterion_1(bud: Budgets):
    details = []
    ok = True
    for c in range(2, 8):
        C = construction_I(2, 3, c)
        rep = _ia(C, bud)
        n = 7
        want = ((n * c, (n - c + 2) * (c - 1)), (1, c * (c - 1)))
        got = (rep.ia.b, rep.ia.c) if rep.ia else None
        good = rep.is_cr and rep.rho == 2 and got == want and (C.n, C.k) == (7 * c, 7 * c - 6)
        ok &= good
        details.append(f"c={c}:{_fmt(rep.ia)}")
    H1 = construction_I(2, 3, 1)
    ham = code_from_parity(cyclic_hamming(2, 3))
    rep = _ia(H1, bud)
    good = (H1.n, H1.k, min_distance(H1, bud.enum), rep.rho) == (7, 4, 3, 1) and H1.same_code(ham)
    ok &= good and rep.is_cr
    details.append(f"c=1:[{H1.n},{H1.k},{min_distance(H1, bud.enum)};{rep.rho}]")
    return ok, " ".join(details)


def criterion_2(bud: Budgets):
    ok = True
    details = []
    for (q, k, c), params, arr in (
        ((3, 3, 2), (26, 20, 3, 2), ((52, 26), (1, 2))),
        ((4, 2, 2), (10, 6, 3, 2), ((30, 15), (1, 2))),
    ):
        C = construction_I(q, k, c)
        rep = _ia(C, bud)
        got = (C.n, C.k, min_distance(C, bud.enum), rep.rho)
        pred = analysis.predicted_ia("I", q, k, c)
        good = rep.is_cr and got == params and (rep.ia.b, rep.ia.c) == arr and rep.ia == pred
        ok &= good
        details.append(f"I({q},{k},{c})=[{got[0]},{got[1]},{got[2]};{got[3]}]_{q} {_fmt(rep.ia)}")
    return ok, " ".join(details)


def criterion_3(bud: Budgets):
    C = construction_I(2, 3, 2)
    W = weight_distribution(dual(C), bud.enum).support()
    pred = analysis.predicted_dual_weights("I", 2, 3, 2)
    ok1 = W == {0: 1, 4: 14, 8: 49} and pred == {8: 49, 4: 14}
    C2 = construction_II(2, 3, 6)
    W2 = dual_weight_distribution(C2, bud.enum)
    an = analyze_cosets(C2, bud.syndromes)
    cols = {tuple(col) for col in an.space.basis.data.T.tolist()}
    is_hamming = (
        (C2.n, C2.k) == (63, 57)
        and min_distance(C2, bud.enum) == 3
        and an.rho == 1
        and len(cols) == 63
        and (0,) * 6 not in cols
    )
    ok2 = W2.nonzero_weights() == [32] and is_hamming
    ok2 &= analysis.predicted_dual_weights("II", 2, 3, 6) == {32: 63}
    return ok1 and ok2, f"I(2,3,2) dual={W}; II(2,3,6) dual weights={W2.nonzero_weights()} hamming63={is_hamming}"


def _c3_instances():
    for c in range(1, 8):
        yield "I", 2, 3, c
    yield "I", 3, 3, 2
    yield "I", 4, 2, 2
    for c in range(1, 6):
        yield "II", 2, 3, c


def criterion_4(bud: Budgets):
    ok = True
    details = []
    build = {"I": construction_I, "II": construction_II}
    for fam, q, k, c in _c3_instances():
        C = build[fam](q, k, c)
        enum = int(coset_weight_slice(C, 3, bud.enum)[0])
        pred = analysis.predicted_c3(fam, q, k, c)
        words = codewords_of_weight(C, 3, bud.enum)
        r = analysis.verify_design(words, 1, q, bud.enum)
        good = enum == pred and len(words) == enum and r is not None and 3 * enum == (q - 1) * C.n * r
        ok &= good
        details.append(f"{fam}({q},{k},{c}):{enum}/{pred}")
    literal = {("I", 2, 3, 2): 14, ("II", 2, 3, 1): 56, ("II", 2, 3, 2): 105}
    for key, val in literal.items():
        ok &= analysis.predicted_c3(*key) == val
    return ok, " ".join(details)


def criterion_5(bud: Budgets):
    ok = True
    details = []
    n = 7
    for c in range(1, 6):
        C = construction_II(2, 3, c)
        rep = _ia(C, bud)
        want = (((c + 3) * n, (c + 2) * (n - 1 - c)), (1, (c + 2) * (c + 3)))
        good = rep.is_cr and rep.rho == 2 and rep.ia is not None and (rep.ia.b, rep.ia.c) == want
        good &= rep.ia == analysis.predicted_ia("II", 2, 3, c)
        ok &= good
        details.append(f"c={c}:{_fmt(rep.ia)}")
    return ok, " ".join(details)


def criterion_6(bud: Budgets):
    C = construction_II(2, 3, 2)
    X = extend_code(C)
    rep = _ia(X, bud)
    d = min_distance(X, bud.enum)
    ok = (X.n, X.k, d, rep.rho) == (36, 29, 4, 3) and rep.is_cr
    ok &= rep.ia is not None and (rep.ia.b, rep.ia.c) == ((36, 35, 16), (1, 20, 36))
    ok &= rep.ia == analysis.predicted_ia_extended_II(3)
    ok &= rep.coset_counts == (1, 36, 63, 28) == analysis.predicted_extended_II_coset_counts(3)
    words = codewords_of_weight(X, 4, bud.enum)
    lam = analysis.verify_design(words, 2, 2, bud.enum)
    ok &= len(words) == 945 == analysis.predicted_extended_II_c4(3)
    ok &= lam == 9 == analysis.predicted_extended_II_lambda(3)
    detail = f"k=3: [{X.n},{X.k},{d};{rep.rho}] {_fmt(rep.ia)} cosets={rep.coset_counts} |C*_4|={len(words)} lambda={lam}"

    Y = extend_code(construction_II(2, 4, 6))
    rep4 = _ia(Y, bud)
    d4 = min_distance(Y, bud.enum)
    ok &= (Y.n, Y.k, d4, rep4.rho) == (136, 127, 4, 3) and rep4.is_cr
    ok &= rep4.ia is not None and (rep4.ia.b, rep4.ia.c) == ((136, 135, 64), (1, 72, 136))
    ok &= rep4.ia == analysis.predicted_ia_extended_II(4)
    ok &= rep4.coset_counts == analysis.predicted_extended_II_coset_counts(4)
    detail += f"; k=4: [{Y.n},{Y.k},{d4};{rep4.rho}] {_fmt(rep4.ia)}"
    return ok, detail


def criterion_7(bud: Budgets):
    ok = True
    details = []
    for c in (2, 3, 4):
        rep = _ia(extend_code(construction_I(2, 3, c)), bud)
        ok &= not rep.is_cr
        details.append(f"c={c}:{'CR' if rep.is_cr else 'not CR'}")
    X = extend_code(construction_I(2, 3, 5))
    rep = _ia(X, bud)
    ok &= rep.is_cr and rep.ia is not None and (rep.ia.b, rep.ia.c) == ((36, 35, 16), (1, 20, 36))
    details.append(f"c=5:{_fmt(rep.ia)}")
    return ok, " ".join(details)


def criterion_8(bud: Budgets):
    ok = True
    details = []
    for ident, (params, (b, c)) in analysis.SPORADIC_EXPECTED.items():
        C = sporadic_code(ident)
        rep = _ia(C, bud)
        d = min_distance(C, bud.enum)
        good = rep.is_cr and (C.n, C.k, d, rep.rho) == params and (rep.ia.b, rep.ia.c) == (b, c)
        ok &= good
        details.append(f"{ident}:[{C.n},{C.k},{d};{rep.rho}] {_fmt(rep.ia)}")
    ok &= sporadic_code("3").H.shape == (12, 15) and sporadic_code("2").H.shape == (12, 18)
    ok &= difference_matrix_check(DifferenceMatrix(2, 3, D23))
    same = sporadic_code("3").same_code(sporadic_code("1"))
    details.append(f"item3==item1 as sets: {same}")
    if not same:
        perm = analysis.block_permutation_equivalence(sporadic_code("1"), sporadic_code("3"), 3, bud.enum)
        details.append(f"item3~item1 via column permutation {perm}")
    return ok, " ".join(details)


def oracle_codes() -> list[tuple[str, LinearCode]]:
    return [
        ("[7,4] I(2,3,1)", construction_I(2, 3, 1)),
        ("[14,8] I(2,3,2)", construction_I(2, 3, 2)),
        ("[10,6]_4 I(4,2,2)", construction_I(4, 2, 2)),
        ("[15,8] ext I(2,3,2)", extend_code(construction_I(2, 3, 2))),
        ("[15,9] sporadic1", sporadic_code("1")),
        ("[16,9] sporadic1x", sporadic_code("1x")),
        ("[18,12] sporadic2", sporadic_code("2")),
        ("[15,9] sporadic3", sporadic_code("3")),
    ]


def criterion_9(bud: Budgets):
    ok = True
    details = []
    for name, C in oracle_codes():
        a = verify_completely_regular(C, bud.syndromes)
        b = verify_cr_bruteforce(C, bud.brute)
        ok &= a == b
        details.append(f"{name}:{'=' if a == b else '!='}")
    return ok, " ".join(details)


def invariant_codes() -> list[tuple[str, LinearCode]]:
    codes = [
        ("I(2,3,1)", construction_I(2, 3, 1)),
        ("I(2,3,2)", construction_I(2, 3, 2)),
        ("I(2,3,4)", construction_I(2, 3, 4)),
        ("I(3,3,2)", construction_I(3, 3, 2)),
        ("I(4,2,2)", construction_I(4, 2, 2)),
        ("II(2,3,1)", construction_II(2, 3, 1)),
        ("II(2,3,3)", construction_II(2, 3, 3)),
        ("II(2,3,6)", construction_II(2, 3, 6)),
        ("ext II(2,3,2)", extend_code(construction_II(2, 3, 2))),
        ("ext II(2,4,6)", extend_code(construction_II(2, 4, 6))),
        ("ext I(2,3,5)", extend_code(construction_I(2, 3, 5))),
    ]
    for c in (2, 3, 4):
        codes.append((f"ext I(2,3,{c})", extend_code(construction_I(2, 3, c))))
    for ident in ("1", "1x", "2", "3"):
        codes.append((f"sporadic{ident}", sporadic_code(ident)))
    return codes


def check_invariants(code: LinearCode, bud: Budgets) -> list[str]:
    """Names of the structural identities that fail for ``code``."""
    failures = []
    an = analyze_cosets(code, bud.syndromes)
    rep = verify_completely_regular(code, analysis=an)
    s = external_distance(code, bud.enum)
    d = min_distance(code, bud.enum)
    e = packing_radius(d)
    deg = (code.q - 1) * code.n
    if rep.rho > s:
        failures.append("rho<=s")
    if not (an.profiles.sum(axis=1) == deg).all():
        failures.append("a+b+c=(q-1)n")
    if rep.is_cr:
        if rep.rho != s:
            failures.append("rho=s")
        if not lemma_graph_holds(rep.ia, an.subconstituent_sizes()):
            failures.append("lemma_graph")
        if any(rep.ia.a_at(l) + rep.ia.b_at(l) + rep.ia.c_at(l) != deg for l in range(rep.rho + 1)):
            failures.append("ia_degree")
    try:
        up = uniformly_packed_params(code, analysis=an, d=d, budget=bud.enum)
        if (up is not None) != (s == e + 1):
            failures.append("uniformly_packed")
    except NotQuasiPerfect:
        if s == e + 1:
            failures.append("uniformly_packed")
    W = exact_weight_distribution(code, bud.enum)
    Wd = macwilliams(W, code.n, code.k, code.q)
    if macwilliams(Wd, code.n, code.n - code.k, code.q) != W or Wd != dual_weight_distribution(code, bud.enum):
        failures.append("macwilliams")
    if code.q == 2 and all(a == 0 for w, a in enumerate(W.counts) if w % 2) and d >= 2 * s - 2:
        if not rep.is_cr:
            failures.append("even_weight_cr")
    return failures


def shifts_property(trials: int = 1000, seed: int = 20160517) -> list[tuple[int, int]]:
    """Random weight-w vectors with gcd(n, w) = 1 never fixed by a nontrivial shift."""
    rng = random.Random(seed)
    bad = []
    done = 0
    while done < trials:
        n = rng.randint(2, 60)
        w = rng.randint(1, n)
        if gcd(n, w) != 1:
            continue
        q = rng.choice([2, 3, 4, 5, 7])
        x = np.zeros(n, dtype=np.int64)
        support = rng.sample(range(n), w)
        x[support] = [rng.randint(1, q - 1) for _ in support]
        if any(np.array_equal(cyclic_shift(x, i), x) for i in range(1, n)):
            bad.append((n, w))
        done += 1
    return bad


def criterion_10(bud: Budgets):
    failures = []
    for name, C in invariant_codes():
        f = check_invariants(C, bud)
        if f:
            failures.append(f"{name}:{','.join(f)}")
    est = [
        analysis.check_estesos(construction_II(2, 3, 2), extend_code(construction_II(2, 3, 2)), bud.enum),
        analysis.check_estesos(sporadic_code("1"), sporadic_code("1x"), bud.enum),
    ]
    if not all(est):
        failures.append(f"estesos:{est}")
    bad = shifts_property()
    if bad:
        failures.append(f"shifts:{bad[:3]}")
    return not failures, "all invariants hold" if not failures else "; ".join(failures)


CRITERIA: list[tuple[int, str, float, Callable]] = [
    (1, "Construction I, q=2, k=3, c=1..7", 5, criterion_1),
    (2, "Construction I over GF(3) and GF(4)", 5, criterion_2),
    (3, "Dual weight spectra", 5, criterion_3),
    (4, "Weight-3 codeword counts", 10, criterion_4),
    (5, "Construction II, q=2, k=3, c=1..5", 10, criterion_5),
    (6, "Extended Construction II codes", 30, criterion_6),
    (7, "Extensions of Construction I", 20, criterion_7),
    (8, "Sporadic codes", 10, criterion_8),
    (9, "Coset path vs whole-space oracle", 60, criterion_9),
    (10, "Invariant suite", 60, criterion_10),
]


def run_criterion(ident: int, budgets: Optional[Budgets] = None) -> Row:
    bud = budgets or Budgets.scaled()
    _, title, limit, fn = next(c for c in CRITERIA if c[0] == ident)
    row = Row(ident, title, limit)
    t0 = time.perf_counter()
    try:
        ok, detail = fn(bud)
        row.status = "PASS" if ok else "FAIL"
        row.detail = detail
    except TooLarge as exc:
        row.status = "SKIPPED(budget)"
        row.detail = str(exc)
    row.seconds = time.perf_counter() - t0
    if row.status == "PASS" and row.seconds > limit:
        row.status = "FAIL(time)"
        row.detail += f" (took {row.seconds:.1f}s, limit {limit}s)"
    return row


def run_all(budgets: Optional[Budgets] = None, only: Optional[list[int]] = None) -> list[Row]:
    return [run_criterion(c[0], budgets) for c in CRITERIA if only is None or c[0] in only]
