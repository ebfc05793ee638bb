import hypothesis.strategies as st
import pytest
import sympy
from hypothesis import given, settings

from src.exceptions import (BoundExceededError, InsepError, InseparableInputError,
                            InsufficientPrecisionError, ResidueFieldTooSmallError)
from src.inseparability import (EXACT, LOWER_BOUND, breakpoints, check_index_facts, crude_bound,
                                e_h_via_monomials, eh_symbolic, format_symbolic, g_exact,
                                gamma_lower_bound, higher_different, m_mu_value, profile,
                                residue_field_sufficient, trace_ideal, vbar_p, verify_lemma_bound,
                                verify_partition_bound)
from src.local_fields import INF, EisensteinExtension, e_h, elementary_symmetric_values, from_series
from src.parsing import parse_base, parse_extension
from src.partitions import Partition


def test_vbar_p():
    assert vbar_p(12, 3, 2) == 2
    assert vbar_p(16, 3, 2) == 3
    assert vbar_p(0, 2, 3) == 2
    assert vbar_p(5, 2, 5) == 1


def test_example_profile(example_profile):
    assert example_profile.i == [3, 2, 2, 0]
    assert example_profile.i_pi == [3, 2, 2, 0]
    assert example_profile.a == [1, 1, 1, 1]
    assert example_profile.b == [5, 6, 6, 8]
    assert example_profile.differents == [10, 4, 2, 0]
    data = example_profile.to_dict()
    assert data["e_L"] == "inf"
    assert data["d_j"] == [10, 4, 2, 0]


@pytest.mark.parametrize("base,poly,expected", [
    ("laurent:p=2,d=1", "X^4 + t*X + t", [1, 1, 0]),
    ("laurent:p=2,d=1", "X^3 - t", [0]),
    ("padic:p=2", "X^4 + 2*X + 2", [1, 1, 0]),
    ("padic:p=2", "X^2 - 2", [2, 0]),
    ("padic:p=3", "X^3 - 3", [3, 0]),
])
def test_known_profiles(base, poly, expected):
    prof = profile(parse_extension(parse_base(base, 32), poly))
    assert prof.i == expected
    assert check_index_facts(prof) == []


def test_inseparable_polynomial_is_rejected(f2):
    with pytest.raises(InseparableInputError):
        profile(parse_extension(f2, "X^2 + t"))


@pytest.mark.parametrize("fixture,equality", [("example_ext", [5, 6, 8]), ("small_ext", [3, 4]), ("tame_ext", [3])])
def test_coefficient_bound(request, fixture, equality):
    ext = request.getfixturevalue(fixture)
    result = verify_lemma_bound(ext, profile(ext))
    assert result.passed
    assert result.equality == equality


def test_coefficient_bound_needs_precision():
    base = parse_base("padic:p=2", 32)
    ext = parse_extension(base, "X^4 + 4*X + 2")
    prof = profile(ext)
    assert verify_lemma_bound(ext, prof).passed
    # -4 vanishes mod 2^2, so v_L(c_3) >= 8 cannot be told apart from the bound 5 + 3
    truncated = EisensteinExtension(base, tuple(c.truncate(2) for c in ext.c))
    with pytest.raises(InsufficientPrecisionError) as info:
        verify_lemma_bound(truncated, prof)
    assert "c_3" in str(info.value)


def test_partition_bound(example_ext, example_profile, dyadic_ext):
    assert verify_partition_bound(example_ext, example_profile, 10) == []
    assert verify_partition_bound(dyadic_ext, profile(dyadic_ext), 8) == []


def test_breakpoints(example_profile):
    assert breakpoints(example_profile, 4) == [1, 3, 5, 7]
    assert breakpoints(example_profile, 2) == [3, 7]
    assert gamma_lower_bound(example_profile, 4, 1) == 1


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=-8, max_value=24))
def test_crude_bound_never_beats_gamma(example_profile, h, r):
    assert crude_bound(example_profile, h, r) <= gamma_lower_bound(example_profile, h, r)


def test_symbolic_congruence(example_ext, example_profile):
    expansion = eh_symbolic(example_ext, 4, 1, 2, example_profile)
    assert {str(term.mu): str(value.to_sympy()) for term, value in expansion} == {"{2,1,1,1}": "t", "{2,2,1,1}": "t"}
    assert all(value.prec == 2 for _, value in expansion)
    a1, a2, t = sympy.symbols("a1 a2 t")
    assert sympy.sympify(format_symbolic(expansion)) == a1 ** 3 * a2 * t + a1 ** 2 * a2 ** 2 * t


def test_monomial_sum_matches_charpoly(example_ext, example_profile):
    terms = [(1, 1), (2, 1), (3, 1)]
    alpha = from_series(example_ext, terms)
    values = elementary_symmetric_values(example_ext, alpha, 2)
    for h in range(1, 9):
        via = e_h_via_monomials(example_ext, terms, h, 2, example_profile)
        assert (values[h - 1] - via).low() >= 2


def test_m_mu_needs_few_parts(small_ext):
    with pytest.raises(InsepError):
        m_mu_value(small_ext, Partition.of(1, 1, 1, 1, 1))


def test_example_needs_larger_residue_field(example_ext, example_profile):
    with pytest.raises(ResidueFieldTooSmallError):
        g_exact(example_ext, example_profile, 4, 1, "witness")


def test_example_exhaustive_sweep(example_ext, example_profile):
    result = g_exact(example_ext, example_profile, 4, 1, "exhaustive")
    assert (result.gamma, result.value, result.status) == (1, 2, EXACT)
    assert result.to_dict()["g"] == 2


def test_example_over_f4(example_ext_f4):
    prof = profile(example_ext_f4)
    result = g_exact(example_ext_f4, prof, 4, 1, "witness")
    assert (result.value, result.status) == (1, EXACT)
    residue = example_ext_f4.base.residue
    digits = [c for coeff in result.witness.coeffs for c in coeff.terms().values()]
    assert any(not residue.in_prime_field(c) for c in digits)
    assert residue_field_sufficient(prof, 4)
    assert not residue_field_sufficient(prof, 2)


def test_sweep_limit(example_ext_f4):
    with pytest.raises(BoundExceededError):
        g_exact(example_ext_f4, profile(example_ext_f4), 4, 1, "exhaustive")


def test_distinct_levels_attain_gamma(example_ext, example_profile):
    for h in (1, 2, 8):
        for r in breakpoints(example_profile, h):
            result = g_exact(example_ext, example_profile, h, r, "witness")
            assert result.status == EXACT
            assert result.value == result.gamma


def test_beta_witness_on_small_field(small_ext):
    prof = profile(small_ext)
    for r in breakpoints(prof, 2):
        result = g_exact(small_ext, prof, 2, r, "witness")
        assert result.status == EXACT
        assert result.value == gamma_lower_bound(prof, 2, r)


@pytest.mark.parametrize("base,poly,h,r,value,status", [
    ("laurent:p=2,d=1", "X^5 - t", 2, 5, 3, LOWER_BOUND),
    ("laurent:p=3,d=1", "X^4 - t", 2, 4, 3, LOWER_BOUND),
    ("laurent:p=2,d=1", "X^3 - t", 3, 2, 2, EXACT),
])
def test_tame_criterion(base, poly, h, r, value, status):
    ext = parse_extension(parse_base(base, 32), poly)
    result = g_exact(ext, profile(ext), h, r, "witness")
    assert (result.value, result.status) == (value, status)
    sweep = g_exact(ext, profile(ext), h, r, "exhaustive")
    assert sweep.value >= value if status == LOWER_BOUND else sweep.value == value


def test_periodicity_shift(tame_ext):
    prof = profile(tame_ext)
    base = g_exact(tame_ext, prof, 3, 2, "witness")
    shifted = g_exact(tame_ext, prof, 3, 5, "witness")
    assert shifted.value == base.value + 3
    assert shifted.gamma == base.gamma + 3
    assert shifted.r == 5


@pytest.mark.parametrize("base,poly,h,r", [
    ("laurent:p=2,d=1", "X^3 - t", 3, 5),
    ("laurent:p=2,d=1", "X^3 - t", 3, -1),
    ("padic:p=3", "X^2 - 3", 2, 3),
    ("padic:p=3", "X^2 - 3", 2, -1),
])
def test_periodicity_shift_moves_witness(base, poly, h, r):
    ext = parse_extension(parse_base(base, 32), poly)
    result = g_exact(ext, profile(ext), h, r, "witness")
    assert result.status == EXACT
    assert result.witness is not None
    assert result.witness.v_L() >= r
    assert e_h(ext, result.witness, h, 32).valuation() == result.value


def test_shifted_breakpoint_witnesses(example_ext, example_profile):
    for h in (1, 2, 8):
        for r in breakpoints(example_profile, h):
            result = g_exact(example_ext, example_profile, h, r + 8, "witness")
            assert result.status == EXACT
            assert result.witness.v_L() >= r + 8
            assert e_h(example_ext, result.witness, h, 32).valuation() == result.value


def test_bad_arguments(example_ext, example_profile):
    with pytest.raises(InsepError):
        g_exact(example_ext, example_profile, 9, 1)
    with pytest.raises(InsepError):
        g_exact(example_ext, example_profile, 4, 1, "guess")


def test_trace_ideal(example_ext, example_profile, tame_ext):
    assert higher_different(example_profile, 0) == 10
    assert trace_ideal(example_ext, 0, example_profile) == 1
    assert trace_ideal(example_ext, 6, example_profile) == 2
    assert trace_ideal(tame_ext, 1) == 1


def test_trace_ideal_matches_sweep(small_ext):
    prof = profile(small_ext)
    for r in range(0, 4):
        sweep = g_exact(small_ext, prof, 1, r, "exhaustive")
        assert sweep.status == EXACT
        assert sweep.value == trace_ideal(small_ext, r, prof)


@given(st.integers(min_value=1, max_value=4), st.lists(st.integers(0, 1), min_size=4, max_size=4))
def test_values_respect_gamma(small_ext, r, digits):
    prof = profile(small_ext)
    alpha = from_series(small_ext, [(r + k, d) for k, d in enumerate(digits)])
    for h, value in enumerate(elementary_symmetric_values(small_ext, alpha), start=1):
        v = value.valuation()
        if v != INF:
            assert v >= gamma_lower_bound(prof, h, r)


two_path_fields = st.sampled_from([
    ("laurent:p=2,d=1", "X^4 + t*X + t"),
    ("laurent:p=2,d=2", "X^4 + t*X + t"),
    ("padic:p=2", "X^4 + 2*X + 2"),
])


@settings(max_examples=10)
@given(two_path_fields, st.integers(min_value=1, max_value=4),
       st.lists(st.integers(min_value=0, max_value=3), min_size=4, max_size=6))
def test_monomial_sum_matches_charpoly_on_random_elements(field, r, digits):
    base_spec, poly = field
    ext = parse_extension(parse_base(base_spec, 32), poly)
    prof = profile(ext)
    terms = [(r + k, ext.base.from_residue(d % ext.base.q)) for k, d in enumerate(digits)]
    values = elementary_symmetric_values(ext, from_series(ext, terms), 3)
    for h in range(1, ext.n + 1):
        via = e_h_via_monomials(ext, terms, h, 3, prof)
        assert (values[h - 1] - via).low() >= 3
