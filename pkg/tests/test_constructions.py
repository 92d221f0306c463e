from math import gcd

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from crcodes.code import code_from_parity, min_distance
from crcodes.constructions import (
    D23,
    DifferenceMatrix,
    FamilyParams,
    construction_I,
    construction_II,
    cyclic_hamming,
    cyclic_shift,
    difference_matrix_check,
    shift_columns,
    sporadic_code,
)
from crcodes.cosets import analyze_cosets
from crcodes.errors import BadC, BadShape, NotCyclic, UnknownId
from crcodes.matgf import row_space_equal


def test_cyclic_shift():
    x = np.array([1, 2, 0, 0])
    assert cyclic_shift(x, 0).tolist() == x.tolist()
    assert cyclic_shift(x, 1).tolist() == [0, 1, 2, 0]
    assert cyclic_shift(x, -1).tolist() == cyclic_shift(x, 3).tolist()


def test_shift_of_coprime_weight_moves():
    x = np.array([1, 1, 0, 0, 0, 0, 0])
    assert all(cyclic_shift(x, i).tolist() != x.tolist() for i in range(1, 7))


def test_cyclic_hamming_binary():
    H = cyclic_hamming(2, 3)
    cols = [tuple(int(v) for v in H.data[:, j]) for j in range(7)]
    assert cols == [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1), (1, 0, 1)]


def test_cyclic_hamming_not_cyclic():
    with pytest.raises(NotCyclic):
        cyclic_hamming(3, 2)


def test_cyclic_hamming_15():
    code = code_from_parity(cyclic_hamming(2, 4))
    assert (code.n, code.k) == (15, 11)
    assert min_distance(code) == 3
    assert analyze_cosets(code).rho == 1


@pytest.mark.parametrize("q,k", [(2, 3), (3, 3), (4, 2), (2, 4)])
def test_cyclic_hamming_is_cyclic(q, k):
    H = cyclic_hamming(q, k)
    n = H.cols
    for i in (0, 1, n):
        assert row_space_equal(H, shift_columns(H, i))
    assert shift_columns(H, n) == H


def test_construction_I_small():
    code = construction_I(2, 3, 1)
    assert (code.n, code.k) == (7, 4)
    code = construction_I(2, 3, 2)
    assert (code.n, code.k) == (14, 8)
    code = construction_I(3, 3, 2)
    assert (code.n, code.k, code.q) == (26, 20, 3)


def test_construction_II_small():
    assert (construction_II(2, 3, 1).n, construction_II(2, 3, 1).k) == (28, 22)
    code = construction_II(2, 3, 6)
    assert (code.n, code.k) == (63, 57)
    # a Hamming code up to column order: 63 distinct nonzero columns
    cols = {tuple(c) for c in code.syndrome_space().basis.data.T.tolist()}
    assert len(cols) == 63 and (0,) * 6 not in cols


def test_family_params_validation():
    with pytest.raises(BadC):
        construction_I(2, 3, 8)
    with pytest.raises(BadC):
        construction_II(2, 3, 7)
    with pytest.raises(BadC):
        construction_I(2, 3, 0)
    assert FamilyParams("I", 2, 3, 2).to_json() == {"q": 2, "k": 3, "c": 2}


def test_sporadic_dimensions():
    assert (sporadic_code("1").n, sporadic_code("1").k) == (15, 9)
    assert (sporadic_code("1x").n, sporadic_code("1x").k) == (16, 9)
    assert (sporadic_code("2").n, sporadic_code("2").k) == (18, 12)
    assert (sporadic_code("3").n, sporadic_code("3").k) == (15, 9)
    with pytest.raises(UnknownId):
        sporadic_code("4")


def test_difference_matrices():
    assert difference_matrix_check(DifferenceMatrix(2, 3, D23))
    zeros = tuple(tuple(0 for _ in range(6)) for _ in range(6))
    assert not difference_matrix_check(DifferenceMatrix(2, 3, zeros))
    assert difference_matrix_check(DifferenceMatrix(1, 2, ((0, 0), (0, 1))))
    with pytest.raises(BadShape):
        difference_matrix_check(DifferenceMatrix(2, 3, ((0, 1), (1, 0))))


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 40), st.data())
def test_coprime_weight_vectors_have_trivial_stabilizer(n, data):
    w = data.draw(st.integers(1, n - 1))
    assume(gcd(n, w) == 1)
    support = data.draw(st.sets(st.integers(0, n - 1), min_size=w, max_size=w))
    x = np.zeros(n, dtype=np.int64)
    x[list(support)] = 1
    for i in range(1, n):
        assert not np.array_equal(cyclic_shift(x, i), x)
