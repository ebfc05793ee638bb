import hypothesis.strategies as st
import pytest
import sympy
from hypothesis import given

from src.exceptions import BoundExceededError, DimensionMismatchError
from src.partitions import Partition, enumerate_partitions
from src.symmetric_functions import (MultiSymPoly, brute_force_psi, e_product, eh_of_series,
                                     elementary_sym, frobenius_twist, monomial_product, monomial_sym,
                                     newton_power_sum, poly_from_terms, power_sum, psi_by_elimination,
                                     rk_membership, rk_witness_poly)

P = Partition.parse


def test_monomial_product_small():
    # m_1 · m_1 = m_2 + 2 m_{1,1}
    assert monomial_product(P("{1}"), P("{1}"), 3) == {P("{2}"): 1, P("{1,1}"): 2}
    # with one variable m_{1,1} vanishes
    assert monomial_product(P("{1}"), P("{1}"), 1) == {P("{2}"): 1}


def test_e_product_matches_repeated_multiplication():
    n = 4
    expected = elementary_sym(2, n) * elementary_sym(1, n)
    assert e_product(P("{2,1}"), n) == expected
    assert e_product(P("{5}"), n).is_zero()


def test_psi_of_power_sum_two():
    psi = brute_force_psi(P("{2}"), 2)
    assert psi.terms == {P("{1,1}"): 1, P("{2}"): -2}
    assert psi.lines() == ["-2 * X_2", "1 * X_1·X_1"]


def test_psi_example_line():
    psi = brute_force_psi(P("{1,1,2,2}"), 6)
    assert psi.coefficient(P("{6}")) == 9


@pytest.mark.parametrize("w", range(1, 6))
def test_reconstruction(w):
    for mu in enumerate_partitions(w):
        assert brute_force_psi(mu, w).evaluate_monomial() == monomial_sym(mu, w)


def test_fewer_variables_than_weight():
    # p_3 in two variables: e_1^3 - 3 e_1 e_2
    psi = brute_force_psi(P("{3}"), 2)
    assert psi.terms == {P("{1,1,1}"): 1, P("{2,1}"): -3}


def test_psi_bounds():
    with pytest.raises(BoundExceededError):
        brute_force_psi(P("{13}"), 13)
    with pytest.raises(DimensionMismatchError):
        brute_force_psi(P("{1,1,1}"), 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_newton_identities(n):
    for k in range(1, 7):
        assert newton_power_sum(k, n) == power_sum(k, n)


def test_multisympoly_checks_variable_count():
    with pytest.raises(DimensionMismatchError):
        MultiSymPoly(2, {P("{1,1,1}"): 1})
    with pytest.raises(DimensionMismatchError):
        monomial_sym(P("{1}"), 2) + monomial_sym(P("{1}"), 3)


def test_eh_of_series_terms():
    terms = eh_of_series(4, 8, 1, 6)
    mus = [str(term.mu) for term in terms]
    assert mus == ["{1,1,1,1}", "{2,1,1,1}", "{3,1,1,1}", "{2,2,1,1}"]
    a1, a2 = sympy.symbols("a1 a2")
    assert terms[3].monomial == a1 ** 2 * a2 ** 2
    with pytest.raises(DimensionMismatchError):
        eh_of_series(9, 8, 1, 10)


def test_rk_membership_examples():
    # x^2 + 2xy is in R_1 for p = 2, x + y is not
    assert rk_membership({(2, 0): 1, (1, 1): 2}, 1, 2)
    result = rk_membership({(1, 0): 1, (0, 1): 1}, 1, 2)
    assert not result
    assert result.offending == ((0, 1), 1)
    assert rk_membership({(1, 0): 4}, 2, 2)
    with pytest.raises(ValueError):
        rk_membership({(1, 0): 1}, -1, 2)


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5), max_size=5),
       st.sampled_from([2, 3]), st.integers(0, 2))
def test_witness_rebuilds_polynomial(terms, p, k):
    scaled = {tuple(e * p ** k for e in exponent): c for exponent, c in terms.items() if c}
    result = rk_membership(scaled, k, p)
    assert result
    assert rk_witness_poly(result) == scaled


@pytest.mark.parametrize("p,j,lam", [(2, 1, "{1,1}"), (2, 1, "{2,1}"), (2, 2, "{2,1}"), (3, 1, "{1,1}"), (3, 1, "{2,1,1}")])
def test_scaled_psi_in_subring(p, j, lam):
    mu = P(lam).scale(p ** j)
    psi = brute_force_psi(mu, mu.weight)
    assert rk_membership(psi.as_poly(), j, p)


def test_power_of_subring_element():
    x, y = sympy.symbols("x y")
    poly = poly_from_terms({(2, 0): 1, (1, 1): 2}, (x, y))
    assert rk_membership(poly, 1, 2)
    assert rk_membership(poly ** 2, 2, 2)
    assert frobenius_twist({(1, 2): 3}, 2, 1) == {(2, 4): 3}


@pytest.mark.parametrize("w", range(1, 8))
def test_elimination_matches_linear_algebra(w):
    for mu in enumerate_partitions(w):
        for n in range(mu.length, w + 1):
            assert psi_by_elimination(mu, n).terms == brute_force_psi(mu, n).terms


def test_elimination_has_no_sigma_bound():
    mu = P("{9,9,9,9}")
    assert psi_by_elimination(mu, 4).terms == {P("{4,4,4,4,4,4,4,4,4}"): 1}
    psi = psi_by_elimination(P("{27,9}"), 2)
    assert psi.evaluate_monomial() == monomial_sym(P("{27,9}"), 2)
    assert rk_membership(psi.as_poly(), 2, 3)
    with pytest.raises(DimensionMismatchError):
        psi_by_elimination(P("{1,1,1}"), 2)


def test_e_product_counts_zero_one_matrices():
    # e_2 e_1 = m_{2,1} + 3 m_{1,1,1}
    assert e_product(P("{2,1}"), 3).terms == {P("{2,1}"): 1, P("{1,1,1}"): 3}
    assert e_product(P("{2,1}"), 2).terms == {P("{2,1}"): 1}
