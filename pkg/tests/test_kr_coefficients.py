import hypothesis.strategies as st
import pytest
from hypothesis import given

from src.exceptions import DimensionMismatchError
from src.kr_coefficients import (CycleDigraph, TilingPair, aut_order, count_tiling_classes,
                                 cycle_digraphs, d_closed_form, d_coefficient, d_terms, eta,
                                 eta_closed_form, format_terms, tiling_classes)
from src.partitions import Partition, enumerate_partitions
from src.symmetric_functions import brute_force_psi

P = Partition.parse


def partition_pairs(max_weight):
    return st.integers(min_value=1, max_value=max_weight).flatmap(
        lambda w: st.tuples(st.sampled_from(list(enumerate_partitions(w))),
                            st.sampled_from(list(enumerate_partitions(w)))))


@pytest.mark.parametrize("lam,mu,expected", [
    ("{6}", "{1,1,1,3}", 6),
    ("{6}", "{1,1,2,2}", 9),
    ("{5}", "{1,1,1,2}", -5),
    ("{2}", "{1,1}", 1),
    ("{1,1}", "{2}", 1),
    ("{2}", "{2}", -2),
    ("{2,2}", "{2,2}", 1),
])
def test_tabulated_coefficients(lam, mu, expected):
    assert d_coefficient(P(lam), P(mu)) == expected


@pytest.mark.parametrize("length,lam,mu,expected", [
    (6, "{2,2,2}", "{3,1,1,1}", 2),
    (5, "{3,2}", "{4,1}", 5),
])
def test_eta_single_cycle(length, lam, mu, expected):
    digraph = CycleDigraph(Partition.of(length))
    assert eta(digraph, P(lam), P(mu)) == expected
    assert eta_closed_form(digraph, P(lam), P(mu)) == expected


def test_cycle_digraph_sign():
    assert CycleDigraph(Partition.of(3, 1)).sign == 1
    assert CycleDigraph(Partition.of(2)).sign == -1
    assert str(CycleDigraph(Partition.of(2, 1))) == "C{2,1}"
    assert [g.order for g in cycle_digraphs(4)] == [4] * 5


def test_aut_order_of_symmetric_tiling():
    digraph = CycleDigraph(Partition.of(4))
    symmetric = TilingPair(digraph, (frozenset({0, 2}),), (frozenset({0, 2}),))
    assert symmetric.lam == Partition.of(2, 2)
    assert aut_order(symmetric) == 2
    assert not symmetric.admissible
    plain = TilingPair(digraph, (frozenset({0}),), (frozenset({0, 1}),))
    assert plain.mu == Partition.of(3, 1)
    assert plain.admissible


def test_tiling_pair_rejects_bad_cuts():
    with pytest.raises(DimensionMismatchError):
        TilingPair(CycleDigraph(Partition.of(3)), (frozenset({5}),), (frozenset({0}),))


@given(partition_pairs(6))
def test_tiling_representatives_match_counts(pair):
    lam, mu = pair
    for digraph in cycle_digraphs(lam.weight):
        reps = tiling_classes(digraph, lam, mu)
        assert len(reps) == eta(digraph, lam, mu)
        assert all(tp.lam == lam and tp.mu == mu and tp.admissible for tp in reps)
        everything = tiling_classes(digraph, lam, mu, admissible_only=False)
        assert len(everything) == count_tiling_classes(digraph, lam, mu)


@given(partition_pairs(7))
def test_symmetry(pair):
    lam, mu = pair
    assert d_coefficient(lam, mu) == d_coefficient(mu, lam)


@given(partition_pairs(6))
def test_matches_basis_change(pair):
    lam, mu = pair
    assert d_coefficient(lam, mu) == brute_force_psi(mu, mu.weight).coefficient(lam)


@given(partition_pairs(8))
def test_closed_forms_agree(pair):
    lam, mu = pair
    closed = d_closed_form(lam, mu)
    if closed is not None:
        assert closed == d_coefficient(lam, mu)


def test_equal_parts_vanishing_case():
    # u = gcd(2,1) = 1 < v = gcd(2,4) = 2
    assert d_closed_form(P("{2,2}"), P("{1,1,1,1}")) == 0
    assert d_coefficient(P("{2,2}"), P("{1,1,1,1}")) == 0


def test_trace_terms_sum_to_coefficient():
    lam, mu = P("{6}"), P("{1,1,1,3}")
    terms = format_terms(lam, mu)
    assert all(set(term) == {"digraph", "sign", "eta"} for term in terms)
    total = sum(sign * count for _, sign, count in d_terms(lam, mu))
    assert (-1) ** (lam.length + mu.length) * total == 6


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        d_coefficient(P("{3}"), P("{1,1}"))
    with pytest.raises(DimensionMismatchError):
        eta(CycleDigraph(Partition.of(4)), P("{3}"), P("{2,1}"))
