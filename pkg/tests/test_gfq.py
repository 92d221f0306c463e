import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crcodes.errors import FieldTooLarge, InvOfZero, NonPrimeP
from crcodes.gfq import field_new, field_of_order, from_digits, is_irreducible, to_digits

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4)]


def test_gf2_primitive():
    f = field_new(2, 1)
    assert f.q == 2 and f.primitive == 1
    assert f.add(1, 1) == 0


def test_gf3():
    f = field_new(3, 1)
    assert f.primitive == 2
    assert f.mul(2, 2) == 1


def test_gf4_modulus_and_primitive():
    f = field_new(2, 2)
    assert list(f.modulus) == [1, 1, 1]  # 1 + x + x^2
    assert f.primitive == 2
    assert f.mul(2, 2) == 3
    assert f.order(2) == 3


def test_field_of_order():
    assert field_of_order(4) is field_new(2, 2)
    with pytest.raises(NonPrimeP):
        field_of_order(6)


def test_errors():
    with pytest.raises(NonPrimeP):
        field_new(4, 1)
    with pytest.raises(FieldTooLarge):
        field_new(2, 9)
    with pytest.raises(InvOfZero):
        field_new(3, 1).inv(0)


def test_digits_roundtrip():
    for e in range(27):
        assert from_digits(to_digits(e, 3, 3), 3) == e


def test_irreducible():
    assert is_irreducible([1, 1, 0, 1], 2)  # 1 + x + x^3
    assert not is_irreducible([1, 0, 1], 2)  # (1 + x)^2


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(pm, data):
    f = field_new(*pm)
    el = st.integers(0, f.q - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, b) == f.mul(b, a)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0
    assert f.sub(f.add(a, b), b) == a
    if a:
        assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, f.q - 1) == 1


@pytest.mark.parametrize("pm", FIELDS)
def test_primitive_generates(pm):
    f = field_new(*pm)
    assert f.order(f.primitive) == f.q - 1
