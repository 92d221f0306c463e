"""Acceptance suite: one test per criterion, each run at its stated time limit.

Every test records a single ``criterion N: PASS|FAIL`` line for the
terminal summary.  Each test also re-asserts the headline literal values
directly, so a regression in the reproduction module cannot hide one.
"""

from conftest import ACCEPTANCE_LINES
from crcodes.analysis import predicted_c3
from crcodes.code import dual, extend_code, min_distance, weight_distribution
from crcodes.constructions import construction_I, construction_II, sporadic_code
from crcodes.cosets import IntersectionArray, codewords_of_weight, verify_completely_regular
from crcodes.reproduce import CRITERIA, run_criterion

LIMITS = {c[0]: c[2] for c in CRITERIA}


def IA(b, c):
    return IntersectionArray(tuple(b), tuple(c))


def _run(ident):
    row = run_criterion(ident)
    ok = row.status == "PASS" and row.seconds <= LIMITS[ident]
    line = (f"criterion {ident}: {'PASS' if ok else 'FAIL'} [{row.status}] "
            f"{row.seconds:.2f}s (limit {LIMITS[ident]}s)  {row.title}")
    ACCEPTANCE_LINES.append(line)
    print("\n" + line)
    assert row.status == "PASS", row.detail
    assert row.seconds <= LIMITS[ident]
    return row


def test_criterion_1_construction_I_binary():
    _run(1)
    for c in range(2, 8):
        rep = verify_completely_regular(construction_I(2, 3, c))
        assert rep.rho == 2
        assert rep.ia == IA((7 * c, (7 - c + 2) * (c - 1)), (1, c * (c - 1)))
    ham = construction_I(2, 3, 1)
    assert (ham.n, ham.k, min_distance(ham), verify_completely_regular(ham).rho) == (7, 4, 3, 1)


def test_criterion_2_nonbinary():
    _run(2)
    c3 = construction_I(3, 3, 2)
    assert (c3.n, c3.k, c3.q) == (26, 20, 3)
    assert verify_completely_regular(c3).ia == IA((52, 26), (1, 2))
    c4 = construction_I(4, 2, 2)
    assert (c4.n, c4.k, c4.q) == (10, 6, 4)
    assert verify_completely_regular(c4).ia == IA((30, 15), (1, 2))


def test_criterion_3_dual_spectra():
    _run(3)
    assert weight_distribution(dual(construction_I(2, 3, 2))).support() == {0: 1, 4: 14, 8: 49}
    assert weight_distribution(dual(construction_II(2, 3, 6))).support() == {0: 1, 32: 63}


def test_criterion_4_weight_three():
    _run(4)
    assert len(codewords_of_weight(construction_I(2, 3, 2), 3)) == 14 == predicted_c3("I", 2, 3, 2)
    assert len(codewords_of_weight(construction_II(2, 3, 1), 3)) == 56
    assert len(codewords_of_weight(construction_II(2, 3, 2), 3)) == 105


def test_criterion_5_construction_II():
    _run(5)
    for c in range(1, 6):
        assert verify_completely_regular(construction_II(2, 3, c)).ia == IA(
            ((c + 3) * 7, (c + 2) * (6 - c)), (1, (c + 2) * (c + 3)))


def test_criterion_6_extended_II():
    _run(6)
    ext = extend_code(construction_II(2, 3, 2))
    rep = verify_completely_regular(ext)
    assert (ext.n, ext.k, min_distance(ext), rep.rho) == (36, 29, 4, 3)
    assert rep.ia == IA((36, 35, 16), (1, 20, 36))
    assert rep.coset_counts == (1, 36, 63, 28)
    assert len(codewords_of_weight(ext, 4)) == 945
    ext4 = extend_code(construction_II(2, 4, 6))
    rep4 = verify_completely_regular(ext4)
    assert (ext4.n, ext4.k, rep4.rho) == (136, 127, 3)
    assert rep4.ia == IA((136, 135, 64), (1, 72, 136))


def test_criterion_7_extensions_of_I():
    _run(7)
    for c in (2, 3, 4):
        assert not verify_completely_regular(extend_code(construction_I(2, 3, c))).is_cr
    rep = verify_completely_regular(extend_code(construction_I(2, 3, 5)))
    assert rep.is_cr and rep.ia == IA((36, 35, 16), (1, 20, 36))


def test_criterion_8_sporadic():
    _run(8)
    expect = {
        "1": ((15, 9, 3, 3), IA((15, 12, 1), (1, 4, 15))),
        "1x": ((16, 9, 4, 4), IA((16, 15, 12, 1), (1, 4, 15, 16))),
        "2": ((18, 12, 3, 2), IA((18, 15), (1, 6))),
        "3": ((15, 9, 3, 3), IA((15, 12, 1), (1, 4, 15))),
    }
    for ident, (params, ia) in expect.items():
        code = sporadic_code(ident)
        rep = verify_completely_regular(code)
        assert (code.n, code.k, min_distance(code), rep.rho) == params
        assert rep.ia == ia


def test_criterion_9_oracle():
    row = _run(9)
    assert "[15,9] sporadic1:=" in row.detail


def test_criterion_10_invariants():
    _run(10)
