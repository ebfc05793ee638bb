"""
Verification Harness
Named checks for the KR coefficients, the R_k subrings, local field
arithmetic and the inseparability estimates, grouped into suites and
collected into a deterministic report.
"""

import json
import logging
import random
from dataclasses import dataclass, field
from math import comb, gcd
from typing import Callable, Dict, List, Optional, Tuple

from sympy import symbols

from .config import RunConfig
from .exceptions import InsepError, ResidueFieldTooSmallError, UnknownSuiteError
from .inseparability import (EXACT, LOWER_BOUND, InsepProfile, breakpoints, check_index_facts,
                             crude_bound, e_h_via_monomials, eh_symbolic, format_symbolic,
                             g_exact, gamma_lower_bound, higher_different, profile,
                             residue_field_sufficient, trace_ideal, vbar_p, verify_lemma_bound,
                             verify_partition_bound)
from .kr_coefficients import (CycleDigraph, count_tiling_classes, d_closed_form, d_coefficient,
                              eta, eta_closed_form)
from .local_fields import (INF, EisensteinExtension, ExtElement, Indeterminate,
                           elementary_symmetric_values, from_series, min_poly_of, norm)
from .parsing import parse_base, parse_extension
from .partitions import Partition, enumerate_partitions, partitions_up_to
from .symmetric_functions import (brute_force_psi, monomial_sym, newton_power_sum, poly_from_terms,
                                  power_sum, psi_by_elimination, rk_membership)

SCHEMA_VERSION = 1
SUITE_ORDER = ("kr", "subrings", "fields", "insep")

EXAMPLE_BASE = "laurent:p=2,d=1"
EXAMPLE_POLY = "X^8 + t*X^3 + t*X^2 + t"
EXAMPLE_PROFILE = [3, 2, 2, 0]
EXAMPLE_D_VALUES = [("{6}", "{1,1,1,3}", 6), ("{6}", "{1,1,2,2}", 9), ("{5}", "{1,1,1,2}", -5)]

# fields for the randomized grids: one wild equal characteristic, one small, one 2-adic
GRID_FIELDS = [
    (EXAMPLE_BASE, EXAMPLE_POLY),
    ("laurent:p=2,d=1", "X^4 + t*X + t"),
    ("padic:p=2", "X^4 + 2*X + 2"),
]

TWO_PATH_FIELDS = GRID_FIELDS + [("laurent:p=2,d=2", "X^4 + t*X + t")]
TWO_PATH_CAP = 3

KNOWN_PROFILES = [
    (EXAMPLE_BASE, EXAMPLE_POLY, [3, 2, 2, 0], [5, 6, 8]),
    ("laurent:p=2,d=1", "X^4 + t*X + t", [1, 1, 0], [3, 4]),
    ("laurent:p=2,d=1", "X^3 - t", [0], [3]),
    ("padic:p=2", "X^4 + 2*X + 2", [1, 1, 0], None),
    ("padic:p=2", "X^2 - 2", [2, 0], None),
    ("padic:p=3", "X^3 - 3", [3, 0], None),
]

TAME_FIELDS = [
    ("laurent:p=2,d=1", "X^3 - t"),
    ("laurent:p=2,d=1", "X^5 - t"),
    ("laurent:p=3,d=1", "X^4 - t"),
    ("laurent:p=3,d=1", "X^2 - t"),
]


@dataclass
class CheckResult:
    """Outcome of one named check."""
    name: str
    suite: str
    passed: bool
    detail: str = ""
    counterexample: Optional[Dict[str, object]] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "suite": self.suite,
            "passed": self.passed,
            "detail": self.detail,
            "counterexample": self.counterexample,
        }


@dataclass
class Report:
    """All check results of a run, in fixed suite order."""
    suite: str
    seed: int
    config: Dict[str, object] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    schema: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> Dict[str, object]:
        return {
            "schema": self.schema,
            "suite": self.suite,
            "seed": self.seed,
            "config": self.config,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    def to_table(self) -> str:
        lines = []
        for check in self.checks:
            mark = "✅" if check.passed else "❌"
            lines.append(f"{mark} {check.name}: {check.detail}")
            if check.counterexample:
                lines.append(f"   counterexample: {json.dumps(check.counterexample, sort_keys=True, ensure_ascii=False)}")
        lines.append("=" * 50)
        passed = sum(check.passed for check in self.checks)
        lines.append(f"{passed}/{len(self.checks)} checks passed (suite={self.suite}, seed={self.seed})")
        return "\n".join(lines)


Outcome = Tuple[bool, str, Optional[Dict[str, object]]]
CheckFunction = Callable[[RunConfig], Outcome]

_REGISTRY: Dict[str, List[Tuple[str, CheckFunction]]] = {suite: [] for suite in SUITE_ORDER}


def check(suite: str, name: str):
    """Register a check function under a suite."""
    def decorator(func: CheckFunction) -> CheckFunction:
        _REGISTRY[suite].append((name, func))
        return func
    return decorator


def _rng(config: RunConfig, name: str) -> random.Random:
    return random.Random(f"{config.seed}:{name}")


def build_field(base_spec: str, poly: str, precision: int) -> Tuple[EisensteinExtension, InsepProfile]:
    ext = parse_extension(parse_base(base_spec, precision), poly)
    return ext, profile(ext)


def _run_check(suite: str, name: str, func: CheckFunction, config: RunConfig) -> CheckResult:
    logging.info(f"Running {name}")
    try:
        passed, detail, counterexample = func(config)
    except InsepError as e:
        return CheckResult(name, suite, False, f"{type(e).__name__}: {e}")
    return CheckResult(name, suite, passed, detail, counterexample)


def run_suite(suite: str, config: RunConfig) -> Report:
    """
    Run one suite ("kr", "subrings", "fields", "insep") or "all".

    Checks run single-threaded in registration order, so identical
    configs give identical reports.
    """
    if suite == "all":
        suites = list(SUITE_ORDER)
    elif suite in _REGISTRY:
        suites = [suite]
    else:
        raise UnknownSuiteError(f"Unknown suite {suite!r} (expected one of {', '.join(SUITE_ORDER)}, all)")
    report = Report(suite=suite, seed=config.seed, config=config.to_dict())
    for name in suites:
        for check_name, func in _REGISTRY[name]:
            report.checks.append(_run_check(name, check_name, func, config))
    return report


# ---------------------------------------------------------------------------
# kr
# ---------------------------------------------------------------------------

@check("kr", "kr.example_values")
def _kr_example_values(config: RunConfig) -> Outcome:
    cases = EXAMPLE_D_VALUES + [("{1}", "{1}", 1), ("{2,2}", "{2,2}", 1)]
    for lam, mu, expected in cases:
        value = d_coefficient(Partition.parse(lam), Partition.parse(mu))
        if value != expected:
            return False, "d value mismatch", {"lambda": lam, "mu": mu, "expected": expected, "got": value}
    return True, f"{len(cases)} tabulated d values", None


@check("kr", "kr.symmetry")
def _kr_symmetry(config: RunConfig) -> Outcome:
    pairs = 0
    for w in range(1, config.kr_weight + 1):
        parts = list(enumerate_partitions(w))
        for a, lam in enumerate(parts):
            for mu in parts[a + 1:]:
                pairs += 1
                if d_coefficient(lam, mu) != d_coefficient(mu, lam):
                    return False, "d_λμ != d_μλ", {"lambda": str(lam), "mu": str(mu)}
    return True, f"{pairs} pairs with w <= {config.kr_weight}", None


@check("kr", "kr.oracle")
def _kr_oracle(config: RunConfig) -> Outcome:
    pairs = 0
    for w in range(1, config.kr_weight + 1):
        for mu in enumerate_partitions(w):
            psi = brute_force_psi(mu, w, max(config.sigma_bound, w))
            for lam in enumerate_partitions(w):
                pairs += 1
                expected = psi.coefficient(lam)
                got = d_coefficient(lam, mu)
                if expected != got:
                    return False, "tiling count disagrees with basis change", {
                        "lambda": str(lam), "mu": str(mu), "oracle": expected, "tilings": got}
    return True, f"{pairs} pairs with w <= {config.kr_weight}", None


@check("kr", "kr.closed_forms")
def _kr_closed_forms(config: RunConfig) -> Outcome:
    applied = 0
    zero_cases = 0
    for w in range(1, config.closed_form_weight + 1):
        for lam in enumerate_partitions(w):
            for mu in enumerate_partitions(w):
                closed = d_closed_form(lam, mu)
                if closed is None:
                    continue
                applied += 1
                if closed == 0:
                    zero_cases += 1
                if closed != d_coefficient(lam, mu):
                    return False, "closed form disagrees with enumeration", {
                        "lambda": str(lam), "mu": str(mu), "closed": closed, "tilings": d_coefficient(lam, mu)}
    if not zero_cases:
        return False, "no vanishing (u < v) case was reached", None
    return True, f"{applied} closed-form pairs, {zero_cases} vanishing", None


@check("kr", "kr.eta_closed_forms")
def _kr_eta_closed_forms(config: RunConfig) -> Outcome:
    anchors = [(6, "{2,2,2}", "{3,1,1,1}", 2), (5, "{3,2}", "{4,1}", 5), (1, "{1}", "{1}", 1)]
    for length, lam, mu, expected in anchors:
        got = eta(CycleDigraph(Partition.of(length)), Partition.parse(lam), Partition.parse(mu))
        if got != expected:
            return False, "η anchor mismatch", {"cycle": length, "lambda": lam, "mu": mu, "got": got}
    applied = 0
    for w in range(1, config.kr_weight + 1):
        digraph = CycleDigraph(Partition.of(w))
        for lam in enumerate_partitions(w):
            for mu in enumerate_partitions(w):
                closed = eta_closed_form(digraph, lam, mu)
                if closed is None:
                    continue
                applied += 1
                if closed != eta(digraph, lam, mu):
                    return False, "η closed form disagrees", {"lambda": str(lam), "mu": str(mu), "closed": closed}
    return True, f"{applied} single-cycle pairs", None


@check("kr", "kr.equal_part_classes")
def _kr_equal_part_classes(config: RunConfig) -> Outcome:
    cells = 0
    for w in range(1, config.kr_weight + 1):
        divisors = [a for a in range(1, w + 1) if w % a == 0]
        for a in divisors:
            for b in divisors:
                lam, mu = Partition((a,) * (w // a)), Partition((b,) * (w // b))
                cells += 1
                got = count_tiling_classes(CycleDigraph(Partition.of(w)), lam, mu)
                if got != gcd(a, b):
                    return False, "tiling classes != gcd(a,b)", {"lambda": str(lam), "mu": str(mu), "got": got}
    return True, f"{cells} equal-part pairs", None


# ---------------------------------------------------------------------------
# subrings
# ---------------------------------------------------------------------------

@check("subrings", "subrings.reconstruction")
def _subrings_reconstruction(config: RunConfig) -> Outcome:
    count = 0
    for mu in partitions_up_to(config.kr_weight):
        n = mu.weight
        psi = brute_force_psi(mu, n, max(config.sigma_bound, n))
        count += 1
        if psi.evaluate_monomial() != monomial_sym(mu, n):
            return False, "ψ_μ(e) != m_μ", {"mu": str(mu)}
    return True, f"{count} partitions", None


@check("subrings", "subrings.power")
def _subrings_power(config: RunConfig) -> Outcome:
    tested = 0
    for p in (2, 3):
        for j in (1, 2):
            for lam in partitions_up_to(4):
                mu = lam.scale(p ** j)
                tested += 1
                if mu.weight <= config.sigma_bound:
                    psi = brute_force_psi(mu, mu.length, config.sigma_bound)
                else:
                    psi = psi_by_elimination(mu, mu.length)
                result = rk_membership(psi.as_poly(), j, p)
                if not result:
                    exponent, coeff = result.offending
                    return False, "ψ of a p^j-scaled partition is not in R_j", {
                        "p": p, "j": j, "lambda": str(lam), "exponent": list(exponent), "coefficient": coeff}
    return True, f"{tested} cells", None


@check("subrings", "subrings.divisibility")
def _subrings_divisibility(config: RunConfig) -> Outcome:
    tested = 0
    for p in (2, 3):
        for t in (1, 2):
            w_prime = 1
            while w_prime * p ** t <= config.kr_weight:
                w = w_prime * p ** t
                for lam_prime in enumerate_partitions(w_prime):
                    lam = lam_prime.scale(p ** t)
                    for mu in enumerate_partitions(w):
                        for j in range(t):
                            if mu.is_repetition_of(p ** (j + 1)) is not None:
                                continue
                            tested += 1
                            d = d_coefficient(lam, mu)
                            if d % p ** (t - j):
                                return False, "p^(t-j) does not divide d_λμ", {
                                    "p": p, "t": t, "j": j, "lambda": str(lam), "mu": str(mu), "d": d}
                w_prime += 1
    return True, f"{tested} cells", None


@check("subrings", "subrings.congruence")
def _subrings_congruence(config: RunConfig) -> Outcome:
    tested = 0
    for p in (2, 3):
        for j in (1, 2):
            for w_prime in range(1, 5):
                for lam_prime in enumerate_partitions(w_prime):
                    common = 0
                    for part in lam_prime.parts:
                        common = gcd(common, part)
                    t = vbar_p(common, 64, p)
                    lam = lam_prime.scale(p ** j)
                    for mu_prime in enumerate_partitions(w_prime):
                        mu = mu_prime.repeat(p ** j)
                        tested += 1
                        # d_λμ = d_μλ, and ψ_λ only needs max(|λ|, max μ) variables
                        n = max(lam.length, mu.max_part())
                        scaled = psi_by_elimination(lam, n).coefficient(mu)
                        diff = scaled - d_coefficient(lam_prime, mu_prime)
                        if diff % p ** (t + 1):
                            return False, "d_λμ ≢ d_λ'μ' mod p^(t+1)", {
                                "p": p, "j": j, "t": t, "lambda'": str(lam_prime), "mu'": str(mu_prime)}
    return True, f"{tested} cells", None


def _random_rk_element(rng: random.Random, k: int, p: int) -> Dict[Tuple[int, int], int]:
    """Σ_i p^{k-i} φ_i(X^{p^i}) for small random φ_i in two variables."""
    terms: Dict[Tuple[int, int], int] = {}
    for i in range(k + 1):
        for _ in range(rng.randint(1, 3)):
            exponent = (rng.randint(0, 2) * p ** i, rng.randint(0, 2) * p ** i)
            terms[exponent] = terms.get(exponent, 0) + p ** (k - i) * rng.randint(-3, 3)
    return {e: c for e, c in terms.items() if c}


@check("subrings", "subrings.power_closure")
def _subrings_power_closure(config: RunConfig) -> Outcome:
    rng = _rng(config, "subrings.power_closure")
    x, y = symbols("x y")
    tested = 0
    for p in (2, 3):
        for k in (0, 1, 2):
            for _ in range(5):
                terms = _random_rk_element(rng, k, p)
                if not terms:
                    continue
                tested += 1
                if not rk_membership(terms, k, p):
                    return False, "constructed element is not in R_k", {"p": p, "k": k, "terms": str(terms)}
                power = poly_from_terms(terms, (x, y)) ** p
                if not rk_membership(power, k + 1, p):
                    return False, "F^p is not in R_{k+1}", {"p": p, "k": k, "terms": str(terms)}
                if not rk_membership({e: p * c for e, c in terms.items()}, k + 1, p):
                    return False, "p·F is not in R_{k+1}", {"p": p, "k": k, "terms": str(terms)}
    return True, f"{tested} random elements", None


@check("subrings", "subrings.newton")
def _subrings_newton(config: RunConfig) -> Outcome:
    for n in range(1, 7):
        for k in range(1, 7):
            if newton_power_sum(k, n) != power_sum(k, n):
                return False, "Newton identities disagree with p_k", {"n": n, "k": k}
    return True, "n, k <= 6", None


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

SAMPLE_PRECISION = 12


def _undetermined(x) -> bool:
    v = x.valuation()
    return isinstance(v, Indeterminate) or v == INF


@check("fields", "fields.norm_identity")
def _fields_norm_identity(config: RunConfig) -> Outcome:
    rng = _rng(config, "fields.norm_identity")
    tested = 0
    for base_spec, poly in GRID_FIELDS:
        ext, _ = build_field(base_spec, poly, config.precision)
        for _ in range(config.samples):
            alpha = ExtElement.random(ext, rng.randint(0, ext.n), rng, SAMPLE_PRECISION)
            v_L = alpha.v_L()
            v_K = norm(ext, alpha, SAMPLE_PRECISION).valuation()
            if isinstance(v_L, Indeterminate) or isinstance(v_K, Indeterminate):
                continue
            tested += 1
            if v_K != v_L:
                return False, "v_K(N(α)) != v_L(α)", {"field": poly, "alpha": str(alpha), "v_K": v_K, "v_L": v_L}
    return True, f"{tested} determinate samples", None


@check("fields", "fields.norm_multiplicative")
def _fields_norm_multiplicative(config: RunConfig) -> Outcome:
    rng = _rng(config, "fields.norm_multiplicative")
    samples = max(1, config.samples // 4)
    for base_spec, poly in GRID_FIELDS:
        ext, _ = build_field(base_spec, poly, config.precision)
        for _ in range(samples):
            alpha = ExtElement.random(ext, 0, rng, SAMPLE_PRECISION)
            beta = ExtElement.random(ext, 0, rng, SAMPLE_PRECISION)
            left = norm(ext, alpha * beta, SAMPLE_PRECISION)
            right = norm(ext, alpha, SAMPLE_PRECISION) * norm(ext, beta, SAMPLE_PRECISION)
            if not _undetermined(left - right):
                return False, "N(αβ) != N(α)N(β)", {"field": poly, "alpha": str(alpha), "beta": str(beta)}
    return True, f"{samples} pairs per field", None


@check("fields", "fields.two_path")
def _fields_two_path(config: RunConfig) -> Outcome:
    rng = _rng(config, "fields.two_path")
    samples = max(1, min(config.samples, 10))
    for base_spec, poly in TWO_PATH_FIELDS:
        ext, prof = build_field(base_spec, poly, config.precision)
        for _ in range(samples):
            r = rng.randint(1, ext.n)
            terms = [(i, ext.base.random_integral(rng, TWO_PATH_CAP)) for i in range(r, r + ext.n)]
            alpha = from_series(ext, terms)
            values = elementary_symmetric_values(ext, alpha, TWO_PATH_CAP)
            for h in range(1, ext.n + 1):
                via = e_h_via_monomials(ext, terms, h, TWO_PATH_CAP, prof)
                if not _undetermined(values[h - 1] - via):
                    return False, "characteristic polynomial and monomial sum disagree", {
                        "field": f"{base_spec} {poly}", "h": h, "alpha": str(alpha),
                        "charpoly": str(values[h - 1]), "monomials": str(via)}
    return True, f"{samples} elements on each of {len(TWO_PATH_FIELDS)} fields, mod M_K^{TWO_PATH_CAP}", None


@check("fields", "fields.precision_honesty")
def _fields_precision_honesty(config: RunConfig) -> Outcome:
    rng = _rng(config, "fields.precision_honesty")
    samples = max(1, config.samples // 10)
    for base_spec, poly in GRID_FIELDS:
        ext, _ = build_field(base_spec, poly, config.precision)
        for _ in range(samples):
            alpha = ExtElement.random(ext, rng.randint(1, ext.n), rng, 2 * SAMPLE_PRECISION)
            low = elementary_symmetric_values(ext, alpha, SAMPLE_PRECISION)
            high = elementary_symmetric_values(ext, alpha, 2 * SAMPLE_PRECISION)
            for h, (a, b) in enumerate(zip(low, high), start=1):
                v = a.valuation()
                if isinstance(v, int) and b.valuation() != v:
                    return False, "valuation changed with more precision", {"field": poly, "h": h, "alpha": str(alpha)}
    return True, f"{samples} elements per field", None


# ---------------------------------------------------------------------------
# insep
# ---------------------------------------------------------------------------

@check("insep", "insep.profiles")
def _insep_profiles(config: RunConfig) -> Outcome:
    for base_spec, poly, expected, _ in KNOWN_PROFILES:
        _, prof = build_field(base_spec, poly, config.precision)
        if prof.i != expected:
            return False, "profile mismatch", {"field": f"{base_spec} {poly}", "expected": expected, "got": prof.to_dict()["i"]}
    return True, f"{len(KNOWN_PROFILES)} tabulated profiles", None


@check("insep", "insep.index_facts")
def _insep_index_facts(config: RunConfig) -> Outcome:
    for base_spec, poly, _, _ in KNOWN_PROFILES:
        _, prof = build_field(base_spec, poly, config.precision)
        failed = check_index_facts(prof)
        if failed:
            return False, "index facts violated", {"field": f"{base_spec} {poly}", "failed": failed}
    return True, f"{len(KNOWN_PROFILES)} fields", None


@check("insep", "insep.coefficient_bound")
def _insep_coefficient_bound(config: RunConfig) -> Outcome:
    for base_spec, poly, _, equality in KNOWN_PROFILES:
        ext, prof = build_field(base_spec, poly, config.precision)
        result = verify_lemma_bound(ext, prof)
        if not result.passed:
            return False, "coefficient bound violated", {"field": poly, "failures": result.failures}
        if equality is not None and result.equality != equality:
            return False, "equality set mismatch", {"field": poly, "expected": equality, "got": result.equality}
    return True, f"{len(KNOWN_PROFILES)} fields", None


@check("insep", "insep.partition_bound")
def _insep_partition_bound(config: RunConfig) -> Outcome:
    for base_spec, poly in GRID_FIELDS:
        ext, prof = build_field(base_spec, poly, config.precision)
        violations = verify_partition_bound(ext, prof, config.sigma_bound)
        if violations:
            return False, "v_L(c_λ) bound violated", {"field": poly, "violations": violations[:5]}
    return True, f"λ with Σ <= {config.sigma_bound} over {len(GRID_FIELDS)} fields", None


@check("insep", "insep.containment")
def _insep_containment(config: RunConfig) -> Outcome:
    rng = _rng(config, "insep.containment")
    evaluated = 0
    for base_spec, poly in GRID_FIELDS:
        ext, prof = build_field(base_spec, poly, config.precision)
        n = ext.n
        for r in range(1, n + 1):
            gammas = [gamma_lower_bound(prof, h, r) for h in range(1, n + 1)]
            for h, gamma in enumerate(gammas, start=1):
                if crude_bound(prof, h, r) > gamma:
                    return False, "crude bound above γ", {"field": poly, "h": h, "r": r}
            precision = max(gammas) + 2
            for _ in range(config.samples):
                alpha = ExtElement.random(ext, r, rng, precision)
                values = elementary_symmetric_values(ext, alpha, precision)
                evaluated += 1
                for h, (value, gamma) in enumerate(zip(values, gammas), start=1):
                    if value.low() < gamma:
                        return False, "v_K(E_h(α)) below γ_h(r)", {
                            "field": poly, "h": h, "r": r, "alpha": str(alpha), "value": str(value), "gamma": gamma}
    return True, f"{evaluated} random elements, all h", None


@check("insep", "insep.uniformizer_independence")
def _insep_uniformizer_independence(config: RunConfig) -> Outcome:
    checked = 0
    for base_spec, poly in GRID_FIELDS:
        ext, prof = build_field(base_spec, poly, config.precision)
        one, unit = ext.base.one(), ext.base.one() + ext.base.uniformizer()
        choices = {
            "π+π^2": from_series(ext, [(1, one), (2, one)]),
            "π+π^3": from_series(ext, [(1, one), (3, one)]),
            "(1+π_K)π": from_series(ext, [(1, unit)]),
        }
        for label, alpha in choices.items():
            other = profile(min_poly_of(ext, alpha))
            checked += 1
            if other.i != prof.i:
                return False, "profile depends on the uniformizer", {
                    "field": poly, "uniformizer": label, "expected": prof.to_dict()["i"], "got": other.to_dict()["i"]}
    return True, f"{checked} alternative uniformizers", None


@check("insep", "insep.monomial_witnesses")
def _insep_monomial_witnesses(config: RunConfig) -> Outcome:
    pairs = 0
    for base_spec, poly in GRID_FIELDS:
        ext, prof = build_field(base_spec, poly, config.precision)
        for j in range(prof.nu + 1):
            if vbar_p(int(prof.i[j]), prof.nu, prof.p) < j:
                continue
            pairs += 1
            h = prof.p ** j
            for r in breakpoints(prof, h):
                gamma = gamma_lower_bound(prof, h, r)
                alpha = from_series(ext, [(r, 1)])
                value = elementary_symmetric_values(ext, alpha, gamma + 1)[h - 1].valuation()
                if value != gamma:
                    return False, "E_{p^j}(π^r) misses γ at a breakpoint", {
                        "field": poly, "j": j, "r": r, "gamma": gamma, "value": str(value)}
    if pairs < 2:
        return False, f"only {pairs} qualifying (field, j) pairs", None
    return True, f"{pairs} (field, j) pairs", None


@check("insep", "insep.beta_witnesses")
def _insep_beta_witnesses(config: RunConfig) -> Outcome:
    pairs = 0
    for base_spec, poly in GRID_FIELDS:
        ext, prof = build_field(base_spec, poly, config.precision)
        for j in range(prof.nu + 1):
            m = vbar_p(int(prof.i[j]), prof.nu, prof.p)
            if m >= j or ext.base.q <= prof.p ** m:
                continue
            pairs += 1
            h = prof.p ** j
            for r in breakpoints(prof, h):
                result = g_exact(ext, prof, h, r, "witness")
                if result.status != EXACT or result.value != result.gamma:
                    return False, "no witness for g = γ", {"field": poly, "j": j, "result": result.to_dict()}
    return True, f"{pairs} (field, j) pairs", None


def _tame_expectation(n: int, p: int, h: int, r: int) -> Tuple[int, bool]:
    s = h * r // n
    return s, comb(gcd(r, n), gcd(h, s)) % p != 0


@check("insep", "insep.tame_criterion")
def _insep_tame_criterion(config: RunConfig) -> Outcome:
    cells = 0
    for base_spec, poly in TAME_FIELDS:
        ext, prof = build_field(base_spec, poly, config.precision)
        n, p = ext.n, ext.p
        for h in range(1, n + 1):
            for r in range(1, n + 1):
                if (h * r) % n:
                    continue
                cells += 1
                s, attained = _tame_expectation(n, p, h, r)
                witness = g_exact(ext, prof, h, r, "witness")
                sweep = g_exact(ext, prof, h, r, "exhaustive", sweep_limit=config.sweep_limit)
                payload = {"field": f"{base_spec} {poly}", "h": h, "r": r, "s": s,
                           "witness": witness.to_dict(), "sweep": sweep.to_dict()}
                if attained:
                    if not (witness.status == EXACT and witness.value == s and sweep.value == s):
                        return False, "expected g = s", payload
                elif not (witness.status == LOWER_BOUND and witness.value == s + 1 and sweep.value >= s + 1):
                    return False, "expected g >= s + 1", payload
    return True, f"{cells} cells with n | hr", None


@check("insep", "insep.monotonicity")
def _insep_monotonicity(config: RunConfig) -> Outcome:
    ext, prof = build_field("laurent:p=2,d=1", "X^3 - t", config.precision)
    n = ext.n
    for h in range(1, n + 1):
        values = [g_exact(ext, prof, h, r, "exhaustive", sweep_limit=config.sweep_limit) for r in range(1, n + 2)]
        exact = [v.value for v in values if v.status == EXACT]
        if len(exact) == len(values) and any(a > b for a, b in zip(exact, exact[1:])):
            return False, "g_h is not monotone", {"h": h, "values": exact}
        if values[0].status == EXACT and values[-1].status == EXACT and values[-1].value != values[0].value + h:
            return False, "g_h(r+n) != g_h(r) + h", {"h": h, "values": exact}
    return True, f"h = 1..{n} over X^3 - t", None


@check("insep", "insep.differents")
def _insep_differents(config: RunConfig) -> Outcome:
    for base_spec, poly, _, _ in KNOWN_PROFILES:
        ext, prof = build_field(base_spec, poly, config.precision)
        if higher_different(prof, 0) != prof.i[0] + prof.n - 1:
            return False, "d_0 != i_0 + n - 1", {"field": poly}
        for j in range(prof.nu + 1):
            d_j, h = higher_different(prof, j), prof.p ** j
            if not gamma_lower_bound(prof, h, -d_j) >= 0 > gamma_lower_bound(prof, h, -d_j - 1):
                return False, "d_j is not the largest d with γ(-d) >= 0", {"field": poly, "j": j, "d_j": d_j}
        logging.info(f"{poly}: residue field sufficient = {residue_field_sufficient(prof, ext.base.q)}")
    return True, f"{len(KNOWN_PROFILES)} fields", None


@check("insep", "insep.trace_ideal")
def _insep_trace_ideal(config: RunConfig) -> Outcome:
    for base_spec, poly in GRID_FIELDS[:2]:
        ext, prof = build_field(base_spec, poly, config.precision)
        for r in range(ext.n):
            expected = trace_ideal(ext, r, prof)
            sweep = g_exact(ext, prof, 1, r, "exhaustive", sweep_limit=config.sweep_limit)
            if sweep.status != EXACT or sweep.value != expected:
                return False, "trace sweep misses ⌊(d_0+r)/n⌋", {"field": poly, "r": r, "expected": expected,
                                                                  "sweep": sweep.to_dict()}
    return True, "r = 0..n-1 on two fields", None


# ---------------------------------------------------------------------------
# worked example
# ---------------------------------------------------------------------------

EXAMPLE_CONGRUENCE = {Partition.of(2, 1, 1, 1): "t", Partition.of(2, 2, 1, 1): "t"}


def _witness_outside_prime_field(witness: Optional[ExtElement]) -> bool:
    if witness is None:
        return False
    residue = witness.ext.base.residue
    return any(not residue.in_prime_field(c) for coeff in witness.coeffs for c in coeff.terms().values())


def cmd_example(config: RunConfig, poly: Optional[str] = None) -> Report:
    """
    Rebuild the degree-8 example over F_2((t)) (or the configured base)
    and check its profile, d values, the E_4 congruence mod M_K^2, the
    containment E_4(M_L) ⊂ M_K^2 over F_2 and its failure over F_4.
    """
    poly = poly or EXAMPLE_POLY
    report = Report(suite="example", seed=config.seed, config=config.to_dict())

    def record(name: str, func: Callable[[], Outcome]):
        try:
            passed, detail, counterexample = func()
        except InsepError as e:
            passed, detail, counterexample = False, f"{type(e).__name__}: {e}", None
        report.checks.append(CheckResult(name, "example", passed, detail, counterexample))

    def field_data(base_spec: str):
        return build_field(base_spec, poly, config.precision)

    def profile_check() -> Outcome:
        _, prof = field_data(config.base)
        return prof.i == EXAMPLE_PROFILE, f"i = {prof.to_dict()['i']}", None

    def d_check() -> Outcome:
        got = [d_coefficient(Partition.parse(lam), Partition.parse(mu)) for lam, mu, _ in EXAMPLE_D_VALUES]
        expected = [value for _, _, value in EXAMPLE_D_VALUES]
        oracle = [brute_force_psi(Partition.parse(mu), 6).coefficient(Partition.parse(lam))
                  for lam, mu, _ in EXAMPLE_D_VALUES]
        return got == expected == oracle, f"d = {got}, oracle = {oracle}", None

    def congruence_check() -> Outcome:
        ext, prof = field_data(config.base)
        expansion = eh_symbolic(ext, 4, 1, 2, prof)
        got = {term.mu: str(value.to_sympy()) for term, value in expansion}
        text = format_symbolic(expansion)
        return got == EXAMPLE_CONGRUENCE, f"E_4 ≡ {text} mod M_K^2", None

    def sweep_prime_field(ext: EisensteinExtension, prof: InsepProfile) -> Outcome:
        result = g_exact(ext, prof, 4, 1, "exhaustive", config.sweep_bound or ext.n,
                         config.sweep_limit, config.progress)
        passed = result.status == EXACT and result.value == 2 and result.gamma == 1
        return passed, f"over {ext.base.residue.name}: g_4(1) = {result.value} ({result.status}), γ = {result.gamma}", None

    def witness_larger_field(ext: EisensteinExtension, prof: InsepProfile) -> Outcome:
        result = g_exact(ext, prof, 4, 1, "witness")
        passed = result.status == EXACT and result.value == 1 and _witness_outside_prime_field(result.witness)
        return passed, (f"over {ext.base.residue.name}: g_4(1) = {result.value} ({result.status}), "
                        f"witness {result.witness}"), None

    def containment_check() -> Outcome:
        ext, prof = field_data(config.base)
        if ext.base.q == 2:
            return sweep_prime_field(ext, prof)
        return witness_larger_field(ext, prof)

    def contrast_check() -> Outcome:
        if parse_base(config.base).q == 2:
            return witness_larger_field(*field_data("laurent:p=2,d=2"))
        return sweep_prime_field(*field_data(EXAMPLE_BASE))

    def small_field_check() -> Outcome:
        ext, prof = field_data(EXAMPLE_BASE)
        try:
            g_exact(ext, prof, 4, 1, "witness")
        except ResidueFieldTooSmallError as e:
            return True, f"witness search over F_2 refused: {e}", None
        return False, "witness search over F_2 should need a larger residue field", None

    record("example.profile", profile_check)
    record("example.d_values", d_check)
    record("example.congruence", congruence_check)
    record("example.containment", containment_check)
    record("example.residue_contrast", contrast_check)
    record("example.small_residue_field", small_field_check)
    return report
