import pytest

from src.exceptions import PolynomialParseError
from src.local_fields import LaurentField, PadicField
from src.parsing import (parse_base, parse_element_terms, parse_extension, parse_polynomial,
                         parse_scalar, tokenize)


def test_tokenize_positions():
    tokens = tokenize("X**2 + 3")
    assert [(tok.kind, tok.text, tok.position) for tok in tokens] == [
        ("name", "X", 0), ("op", "^", 1), ("int", "2", 3), ("op", "+", 5), ("int", "3", 7), ("end", "", 8)]


def test_bad_character_names_position():
    with pytest.raises(PolynomialParseError) as info:
        tokenize("X^2 + $")
    assert info.value.token == "$"
    assert info.value.position == 6


def test_parse_base_kinds():
    f4 = parse_base("laurent:p=2,d=2")
    assert isinstance(f4, LaurentField)
    assert f4.q == 4
    assert f4.spec() == "laurent:p=2,d=2,modulus=111"
    assert isinstance(parse_base("padic:p=3"), PadicField)
    custom = parse_base("laurent:p=3,d=2,modulus=1/0/1", 8)
    assert custom.residue.modulus == (1, 0, 1)
    assert custom.precision == 8


@pytest.mark.parametrize("spec", ["laurent:p=4", "padic", "adelic:p=2", "laurent:p=2,d", "laurent:p=2,modulus=101,d=2"])
def test_parse_base_errors(spec):
    with pytest.raises(PolynomialParseError):
        parse_base(spec)


def test_parse_polynomial_expands(f2):
    coeffs = parse_polynomial(f2, "(X + t)^2")
    assert [str(c) for c in coeffs] == ["t^2", "0", "1"]


def test_parse_padic_polynomial():
    base = parse_base("padic:p=2")
    coeffs = parse_polynomial(base, "X^4 + 2*X + 2")
    assert [str(c) for c in coeffs] == ["1*2^1", "1*2^1", "0", "0", "1"]


def test_unexpected_token_is_reported(f2):
    with pytest.raises(PolynomialParseError) as info:
        parse_polynomial(f2, "X^8 + t*Y")
    assert info.value.token == "Y"
    assert info.value.position == 8


def test_t_is_not_allowed_over_padics():
    with pytest.raises(PolynomialParseError):
        parse_polynomial(parse_base("padic:p=2"), "X^2 + t")


def test_generator_needs_extension_residue_field(f2, f4):
    with pytest.raises(PolynomialParseError):
        parse_scalar(f2, "g")
    assert str(parse_scalar(f4, "g*t")) == "g*t"


@pytest.mark.parametrize("text", ["X^", "X^t", "(X + 1", "X + 1)", "0", ""])
def test_malformed_polynomials(f2, text):
    with pytest.raises(PolynomialParseError):
        parse_polynomial(f2, text)


def test_parse_extension(f2):
    ext = parse_extension(f2, "X^8 + t*X^3 + t*X^2 + t")
    assert ext.n == 8
    assert ext.format() == "X^8 + t*X^3 + t*X^2 + t"


def test_element_terms(f4):
    terms = parse_element_terms(f4, "1@1, (g+1)@2 + t@3")
    assert [(i, str(a)) for i, a in terms] == [(1, "1"), (2, "(g+1)"), (3, "t")]
    assert parse_element_terms(f4, "@4")[0][0] == 4


@pytest.mark.parametrize("text", ["1@1, 1@1", "1@x", "1"])
def test_element_term_errors(f4, text):
    with pytest.raises(PolynomialParseError):
        parse_element_terms(f4, text)
