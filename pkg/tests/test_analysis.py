import numpy as np
import pytest

from crcodes.analysis import (
    block_permutation_equivalence,
    check_estesos,
    design_lambda_i,
    exact_div,
    predicted_c3,
    predicted_dual_weights,
    predicted_extended_II_c4,
    predicted_extended_II_coset_counts,
    predicted_extended_II_lambda,
    predicted_ia,
    predicted_ia_extended_II,
    verify_design,
)
from crcodes.code import extend_code
from crcodes.constructions import construction_I, construction_II, sporadic_code
from crcodes.cosets import IntersectionArray, codewords_of_weight
from crcodes.errors import MixedWeights, NotExtensionPair, NotIntegral, OutOfRange


def test_predicted_ia():
    assert predicted_ia("I", 2, 3, 2) == IntersectionArray((14, 7), (1, 2))
    assert predicted_ia("II", 2, 3, 1) == IntersectionArray((28, 15), (1, 12))
    assert predicted_ia("I", 3, 3, 2) == IntersectionArray((52, 26), (1, 2))
    assert predicted_ia("I", 4, 2, 2) == IntersectionArray((30, 15), (1, 2))
    with pytest.raises(OutOfRange):
        predicted_ia("I", 2, 3, 1)
    with pytest.raises(OutOfRange):
        predicted_ia("I", 3, 2, 2)


def test_predicted_c3():
    assert predicted_c3("I", 2, 3, 2) == 14
    assert predicted_c3("II", 2, 3, 1) == 56
    assert predicted_c3("II", 2, 3, 2) == 105


def test_predicted_dual_weights():
    assert predicted_dual_weights("I", 2, 3, 2) == {8: 49, 4: 14}
    assert predicted_dual_weights("II", 2, 3, 6) == {32: 63}
    assert set(predicted_dual_weights("II", 2, 3, 1)) == {16, 12}


def test_extended_II_predictions():
    assert predicted_ia_extended_II(3) == IntersectionArray((36, 35, 16), (1, 20, 36))
    assert predicted_ia_extended_II(4) == IntersectionArray((136, 135, 64), (1, 72, 136))
    with pytest.raises(OutOfRange):
        predicted_ia_extended_II(2)
    assert predicted_extended_II_coset_counts(3) == (1, 36, 63, 28)
    assert predicted_extended_II_c4(3) == 945
    assert predicted_extended_II_lambda(3) == 9


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(NotIntegral):
        exact_div(7, 2)


def test_design_lambda_i():
    assert design_lambda_i(2, 7, 3, 1, 1) == 3
    assert design_lambda_i(2, 7, 3, 1, 0) == 7
    assert design_lambda_i(2, 36, 4, 9, 2) == 9


def test_fano_design(hamming7):
    words = codewords_of_weight(hamming7, 3)
    assert len(words) == 7
    assert verify_design(words, 2, 2) == 1


def test_extended_II_design():
    ext = extend_code(construction_II(2, 3, 2))
    words = codewords_of_weight(ext, 4)
    assert len(words) == 945
    assert verify_design(words, 2, 2) == 9


def test_design_single_word_and_mixed():
    assert verify_design([np.array([1, 1, 0])], 2, 2) is None
    assert verify_design([np.array([1, 1])], 2, 2) == 1
    with pytest.raises(MixedWeights):
        verify_design([np.array([1, 1, 0]), np.array([1, 0, 0])], 1, 2)


def test_estesos():
    C = construction_II(2, 3, 2)
    assert check_estesos(C, extend_code(C))
    assert check_estesos(sporadic_code("1"), sporadic_code("1x"))
    with pytest.raises(NotExtensionPair):
        check_estesos(C, extend_code(construction_II(2, 3, 3)))


def test_sporadic3_equivalent_to_sporadic1():
    one, three = sporadic_code("1"), sporadic_code("3")
    perm = block_permutation_equivalence(one, three, 3)
    assert perm is not None
    assert sorted(perm) == list(range(15))
