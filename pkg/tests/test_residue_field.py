import hypothesis.strategies as st
import pytest
from hypothesis import given

from src.residue_field import ResidueField, find_irreducible, get_residue_field

F8 = get_residue_field(2, 3)
F9 = get_residue_field(3, 2)


def test_f4_tables():
    f4 = get_residue_field(2, 2)
    g = f4.generator()
    assert f4.mul(g, g) == f4.add(g, 1)
    assert f4.inv(g) == 3
    assert f4.format(3) == "g+1"
    assert f4.name == "F_4"
    assert not f4.in_prime_field(g)
    assert f4.in_prime_field(1)


def test_formatting_with_digits():
    assert F9.format(6) == "2*g"
    assert F9.format(0) == "0"
    assert F9.digits(7) == [1, 2]


def test_find_irreducible():
    assert find_irreducible(2, 3) == (1, 0, 1, 1)


@pytest.mark.parametrize("p,degree,modulus", [(4, 1, None), (2, 2, (1, 0, 1)), (2, 11, None), (2, 0, None)])
def test_rejects_bad_parameters(p, degree, modulus):
    with pytest.raises(ValueError):
        ResidueField(p, degree, modulus)


def test_shared_instances():
    assert get_residue_field(2, 2) is get_residue_field(2, 2)
    assert ResidueField(2, 2) == get_residue_field(2, 2)


@given(st.sampled_from([F8, F9]), st.data())
def test_field_axioms(field, data):
    element = st.integers(min_value=0, max_value=field.q - 1)
    a, b, c = data.draw(element), data.draw(element), data.draw(element)
    assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
    assert field.add(a, field.neg(a)) == 0
    assert field.sub(field.add(a, b), b) == a
    if a:
        assert field.mul(a, field.inv(a)) == 1
        assert field.pow(a, field.q - 1) == 1
        assert field.pow(a, -1) == field.inv(a)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        F8.inv(0)
