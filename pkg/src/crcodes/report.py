"""Verification reports: every enumerated quantity next to its prediction."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from . import analysis
from .code import (
    LinearCode,
    default_budget,
    dual_weight_distribution,
    min_distance,
    packing_radius,
)
from .cosets import (
    CosetAnalysis,
    IntersectionArray,
    analyze_cosets,
    codewords_of_weight,
    coset_weight_slice,
    uniformly_packed_params,
    verify_completely_regular,
)
from .errors import NotQuasiPerfect, OutOfRange

SCHEMA_VERSION = 1
DESIGN_BUDGET = 1 << 21


@dataclass(frozen=True)
class Budgets:
    """Caps for codeword, syndrome and whole-space enumerations."""

    enum: int
    syndromes: int
    brute: int

    @classmethod
    def scaled(cls, budget: Optional[int] = None) -> "Budgets":
        # default 2^24 gives the 2^24 / 2^26 / 2^20 triple
        b = default_budget() if budget is None else budget
        return cls(b, b << 2, b >> 4)


def expected_ia(code: LinearCode) -> Optional[IntersectionArray]:
    """Closed-form intersection array for a family or sporadic code, if one is known."""
    fam = code.family
    p = code.params
    if fam.startswith("sporadic"):
        entry = analysis.SPORADIC_EXPECTED.get(fam[len("sporadic"):])
        if entry is None:
            return None
        b, c = entry[1]
        return IntersectionArray(b, c, (code.q - 1) * code.n)
    if fam not in ("I", "II"):
        return None
    q, k, c = int(p["q"]), int(p["k"]), int(p["c"])
    try:
        if p.get("extended"):
            if q != 2:
                return None
            if fam == "II" and c == 2 ** (k - 1) - 2:
                return analysis.predicted_ia_extended_II(k)
            if fam == "I" and c == 2 ** (k - 1) + 1:
                return analysis.predicted_ia_extended_II(k)
            return None
        return analysis.predicted_ia(fam, q, k, c)
    except OutOfRange:
        return None


def _predicted_c3(code: LinearCode) -> Optional[int]:
    p = code.params
    if code.family not in ("I", "II") or p.get("extended"):
        return None
    try:
        return analysis.predicted_c3(code.family, int(p["q"]), int(p["k"]), int(p["c"]))
    except OutOfRange:
        return None


def _predicted_dual(code: LinearCode) -> Optional[dict]:
    p = code.params
    if code.family not in ("I", "II") or p.get("extended"):
        return None
    try:
        return analysis.predicted_dual_weights(code.family, int(p["q"]), int(p["k"]), int(p["c"]))
    except OutOfRange:
        return None


def lemma_graph_holds(ia: IntersectionArray, sizes: list[int]) -> bool:
    """``b_i |C(i)| = c_{i+1} |C(i+1)|`` for ``0 <= i < rho``."""
    return all(ia.b[i] * sizes[i] == ia.c[i] * sizes[i + 1] for i in range(ia.rho))


def build_report(code: LinearCode, budgets: Optional[Budgets] = None, timing: bool = False) -> dict:
    """Full verification report for ``code``; raises TooLarge past the budgets."""
    bud = budgets or Budgets.scaled()
    t0 = time.perf_counter()
    an: CosetAnalysis = analyze_cosets(code, bud.syndromes)
    cr = verify_completely_regular(code, analysis=an)
    d = min_distance(code, bud.enum)
    e = packing_radius(d)
    dual_w = dual_weight_distribution(code, bud.enum)
    s = len(dual_w.nonzero_weights())

    mismatches: list[str] = []
    notes: list[str] = []

    ia_pred = expected_ia(code)
    if ia_pred is not None and (not cr.is_cr or cr.ia != ia_pred):
        mismatches.append("ia")

    dual_pred = _predicted_dual(code)
    dual_enum = {w: dual_w[w] for w in dual_w.nonzero_weights()}
    if dual_pred is not None:
        if set(dual_pred) != set(dual_enum):
            mismatches.append("dual_weights")
        elif any(cnt is not None and dual_enum[w] != cnt for w, cnt in dual_pred.items()):
            mismatches.append("dual_weight_counts")

    c3_pred = _predicted_c3(code)
    c3_enum = int(coset_weight_slice(code, 3, bud.enum)[0]) if code.n >= 3 else 0
    if c3_pred is not None and c3_pred != c3_enum:
        mismatches.append("c3")

    if code.family.startswith("sporadic"):
        entry = analysis.SPORADIC_EXPECTED.get(code.family[len("sporadic"):])
        if entry and entry[0] != (code.n, code.k, d, cr.rho):
            mismatches.append("parameters")

    up = None
    up_note = None
    try:
        up = uniformly_packed_params(code, analysis=an, d=d, budget=bud.enum)
        up_note = "uniformly packed" if up else "quasi-perfect, not uniformly packed"
    except NotQuasiPerfect:
        up_note = "not quasi-perfect"

    invariants = {"rho_le_s": cr.rho <= s}
    design_checks = []
    if cr.is_cr:
        invariants["rho_eq_s"] = cr.rho == s
        invariants["lemma_graph"] = lemma_graph_holds(cr.ia, an.subconstituent_sizes())
        t = e if d % 2 else e + 1
        if t >= 1 and an.space.weight_count(d) > min(bud.enum, DESIGN_BUDGET):
            design_checks.append({"w": d, "t": t, "lambda": None, "skipped": "budget"})
        elif t >= 1:
            words = codewords_of_weight(code, d, bud.enum)
            lam = analysis.verify_design(words, t, code.q, bud.enum)
            design_checks.append({"w": d, "t": t, "blocks": int(len(words)), "lambda": lam})
            if lam is None:
                mismatches.append("design")
    invariants["uniformly_packed_iff_s_eq_e1"] = (up is not None) == (s == e + 1 and cr.rho == e + 1)
    if not all(invariants.values()):
        mismatches.append("invariants")

    if code.family == "sporadic3":
        from .constructions import sporadic_code

        item1 = sporadic_code("1")
        if code.same_code(item1):
            notes.append("identical to sporadic item 1 as a set")
        else:
            perm = analysis.block_permutation_equivalence(item1, code, 3, bud.enum)
            notes.append(
                "not the same set as sporadic item 1 in this coordinate order; "
                + (f"equal after the column permutation {perm}" if perm else "no block permutation maps one onto the other")
            )

    report = {
        "schema": SCHEMA_VERSION,
        "code": {
            "family": code.family,
            "params": dict(code.params),
            "q": code.q,
            "n": code.n,
            "k": code.k,
            "d": d,
        },
        "rho": cr.rho,
        "is_cr": cr.is_cr,
        "coset_counts": list(cr.coset_counts),
        "ia": cr.ia.to_json() if cr.ia else None,
        "ia_predicted": ia_pred.to_json() if ia_pred else None,
        "witness": list(cr.witness) if cr.witness else None,
        "external_distance": s,
        "dual_weights": {str(w): c for w, c in dual_enum.items()},
        "dual_weights_predicted": (
            {str(w): c for w, c in dual_pred.items()} if dual_pred is not None else None
        ),
        "c3_enumerated": c3_enum,
        "c3_predicted": c3_pred,
        "design_checks": design_checks,
        "up_params": list(up) if up else None,
        "up_status": up_note,
        "invariants": invariants,
        "notes": notes,
        "mismatches": mismatches,
        "status": "MISMATCH" if mismatches else ("CR" if cr.is_cr else "NOT_CR"),
    }
    if timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 4)}
    return report


def exit_code(report: dict) -> int:
    if report["mismatches"]:
        return 2
    return 0 if report["is_cr"] else 1
