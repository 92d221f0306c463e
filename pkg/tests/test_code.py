import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crcodes.code import (
    WeightDistribution,
    check_orthogonal,
    code_from_json,
    code_from_parity,
    dual,
    dumps_code,
    exact_weight_distribution,
    extend_code,
    external_distance,
    macwilliams,
    min_distance,
    packing_radius,
    weight_distribution,
)
from crcodes.constructions import construction_I, construction_II, cyclic_hamming, sporadic_code, sporadic_parity
from crcodes.errors import EmptyCode, NonIntegerOutput, TooLarge
from crcodes.gfq import field_new
from crcodes.matgf import GFMatrix


def test_even_weight_code(even3):
    assert (even3.n, even3.k) == (3, 2)
    assert weight_distribution(even3).counts == (1, 0, 3, 0)


def test_hamming_from_parity(hamming7):
    assert (hamming7.n, hamming7.k) == (7, 4)
    assert check_orthogonal(hamming7)


def test_sporadic2_dimensions():
    code = code_from_parity(sporadic_parity("2"))
    assert (code.n, code.k) == (18, 12)


def test_empty_code(gf2):
    with pytest.raises(EmptyCode):
        code_from_parity(GFMatrix.identity(gf2, 3))


def test_dual(hamming7, i232):
    assert dual(dual(hamming7)).same_code(hamming7)
    simplex = dual(hamming7)
    assert simplex.k == 3
    assert weight_distribution(simplex).support() == {0: 1, 4: 7}
    assert dual(i232).k == 6


def test_dual_weights_of_construction_I(i232):
    assert weight_distribution(dual(i232)).support() == {0: 1, 4: 14, 8: 49}


def test_macwilliams_whole_space():
    n = 5
    W = WeightDistribution(tuple(int(x) for x in [1, 5, 10, 10, 5, 1]))
    assert macwilliams(W, n, n, 2).counts == (1, 0, 0, 0, 0, 0)


def test_macwilliams_simplex_to_hamming(hamming7):
    W = weight_distribution(dual(hamming7))
    assert macwilliams(W, 7, 3, 2).counts == (1, 0, 0, 7, 7, 0, 0, 1)
    assert macwilliams(W, 7, 3, 2) == weight_distribution(hamming7)


def test_macwilliams_rejects_non_code():
    with pytest.raises(NonIntegerOutput):
        macwilliams(WeightDistribution((1, 1, 1)), 2, 1, 2)


@pytest.mark.parametrize("code", [
    construction_I(2, 3, 2),
    construction_I(4, 2, 2),
    construction_II(2, 3, 1),
    sporadic_code("2"),
], ids=["I232", "I422", "II231", "sp2"])
def test_macwilliams_round_trip(code):
    W = exact_weight_distribution(code)
    Wd = macwilliams(W, code.n, code.k, code.q)
    assert macwilliams(Wd, code.n, code.n - code.k, code.q) == W


def test_min_distance(hamming7, i232):
    assert min_distance(hamming7) == 3
    assert min_distance(i232) == 3
    assert min_distance(sporadic_code("1x")) == 4
    assert packing_radius(3) == 1 and packing_radius(4) == 1


def test_external_distance(hamming7, i232):
    assert external_distance(hamming7) == 1
    assert external_distance(i232) == 2
    assert external_distance(construction_II(2, 3, 6)) == 1


def test_extend(hamming7):
    ext = extend_code(hamming7)
    assert (ext.n, ext.k) == (8, 4)
    assert min_distance(ext) == 4
    assert weight_distribution(ext).support() == {0: 1, 4: 14, 8: 1}
    x = extend_code(construction_II(2, 3, 2))
    assert (x.n, x.k) == (36, 29)


def test_weight_distribution_budget(i232):
    with pytest.raises(TooLarge):
        weight_distribution(i232, budget=100)


def test_budget_env(monkeypatch, i232):
    monkeypatch.setenv("CRCODES_BUDGET", "100")
    with pytest.raises(TooLarge):
        weight_distribution(i232)


def test_json_round_trip(i232):
    doc = json.loads(dumps_code(i232))
    back = code_from_json(doc)
    assert back.same_code(i232)
    assert back.family == "I" and back.params == {"q": 2, "k": 3, "c": 2}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2)]), st.integers(1, 3), st.integers(2, 6), st.data())
def test_macwilliams_round_trip_random(pm, r, n, data):
    f = field_new(*pm)
    rows = data.draw(st.lists(st.lists(st.integers(0, f.q - 1), min_size=n, max_size=n),
                              min_size=r, max_size=r))
    try:
        code = code_from_parity(GFMatrix(f, rows))
    except EmptyCode:
        return
    if code.k == code.n:
        return
    W = weight_distribution(code)
    Wd = macwilliams(W, code.n, code.k, code.q)
    assert Wd == weight_distribution(dual(code))
    assert macwilliams(Wd, code.n, code.n - code.k, code.q) == W
