"""
Inseparability
Indices of inseparability of an Eisenstein extension, the valuation
estimates built on them, M_μ(π) through the KR coefficients, the lower
bound γ_h(r) for g_h(r) = min v_K(E_h(M_L^r)), exact g-values by witness
or exhaustive sweep, trace ideals and higher differents.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import comb, gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union

import sympy
from tqdm import tqdm

from .exceptions import (BoundExceededError, InseparableInputError, InsepError,
                         InsufficientPrecisionError, ResidueFieldTooSmallError)
from .kr_coefficients import d_coefficient
from .local_fields import (INF, EisensteinExtension, ExtElement, FieldElement, Indeterminate,
                           crude_lower_bound, e_h, from_series, lower_bound)
from .partitions import Partition, enumerate_partitions
from .symmetric_functions import SeriesTerm, eh_of_series

DEFAULT_SWEEP_LIMIT = 4096

EXACT = "exact"
LOWER_BOUND = "lower_bound"
UPPER_BOUND = "upper_bound"


def vbar_p(k: int, nu: int, p: int) -> int:
    """min(v_p(k), ν), with v_p(0) = ∞."""
    if k == 0:
        return nu
    count = 0
    while k % p == 0 and count < nu:
        k //= p
        count += 1
    return count


def _json_value(x):
    if x is None:
        return None
    return "inf" if x == INF else int(x)


@dataclass
class InsepProfile:
    """Indices of inseparability i_j (0 <= j <= ν) with their π-dependent parts."""
    p: int
    n: int
    u: int
    nu: int
    characteristic: int
    e_K: Union[int, float]
    e_L: Union[int, float]
    i_pi: List[Union[int, float]] = field(default_factory=list)
    i: List[Union[int, float]] = field(default_factory=list)
    a: List[Optional[int]] = field(default_factory=list)
    b: List[Optional[int]] = field(default_factory=list)

    def index(self, h: int) -> Union[int, float]:
        """i_j for j = v̄_p(h)."""
        return self.i[vbar_p(h, self.nu, self.p)]

    @property
    def differents(self) -> List[int]:
        return [higher_different(self, j) for j in range(self.nu + 1)]

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "n": self.n,
            "u": self.u,
            "nu": self.nu,
            "characteristic": self.characteristic,
            "e_K": _json_value(self.e_K),
            "e_L": _json_value(self.e_L),
            "i_pi": [_json_value(x) for x in self.i_pi],
            "i": [_json_value(x) for x in self.i],
            "a": list(self.a),
            "b": list(self.b),
            "d_j": self.differents,
        }


def _split_index(i: Union[int, float], n: int) -> Tuple[Optional[int], Optional[int]]:
    """i = a·n - b with 1 <= b <= n."""
    if i == INF:
        return None, None
    a = (i + n) // n
    return a, a * n - i


def profile(ext: EisensteinExtension) -> InsepProfile:
    """
    Compute i_j^π = min{n·v_K(c_h) - h : v̄_p(h) <= j} and
    i_j = min{i_j'^π + (j'-j)e_L : j <= j' <= ν}.

    Coefficients whose valuation is not determined at the working
    precision are tolerated as long as their lower bound cannot beat the
    determined minimum.
    """
    n, p, nu = ext.n, ext.p, ext.nu
    i_pi: List[Union[int, float]] = []
    for j in range(nu + 1):
        best: Union[int, float] = INF
        unknown: Union[int, float] = INF
        for h in range(1, n + 1):
            if vbar_p(h, nu, p) > j:
                continue
            v = ext.coefficient(h).valuation()
            if isinstance(v, Indeterminate):
                unknown = min(unknown, n * v.lower_bound - h)
            elif v != INF:
                best = min(best, n * v - h)
        if unknown < best:
            raise InsufficientPrecisionError(f"i_{j}^π is not determined at this precision", unknown)
        if unknown != INF:
            logging.info(f"Skipping coefficients with unknown valuation for i_{j}^π (bound {unknown} >= {best})")
        i_pi.append(best)

    if ext.equal_characteristic:
        if i_pi[0] == INF:
            raise InseparableInputError("i_0 is infinite: the defining polynomial is inseparable")
        indices = list(i_pi)
    else:
        e_L = ext.e_L
        indices = [min(i_pi[k] + (k - j) * e_L for k in range(j, nu + 1)) for j in range(nu + 1)]

    splits = [_split_index(x, n) for x in i_pi]
    result = InsepProfile(
        p=p, n=n, u=ext.u, nu=nu,
        characteristic=ext.base.characteristic,
        e_K=ext.base.e_K, e_L=ext.e_L,
        i_pi=i_pi, i=indices,
        a=[a for a, _ in splits], b=[b for _, b in splits],
    )
    logging.debug(f"Profile of {ext.format()}: i = {indices}")
    return result


def c_partition(ext: EisensteinExtension, lam: Partition) -> FieldElement:
    """c_λ = c_{λ1}···c_{λk}."""
    value = ext.base.one()
    for part in lam.parts:
        value = value * ext.coefficient(part)
    return value


@lru_cache(maxsize=4096)
def m_mu_value(ext: EisensteinExtension, mu: Partition, cap: Optional[int] = None) -> FieldElement:
    """
    M_μ(π) = Σ_λ d_λμ c_λ over partitions λ of Σ(μ) with parts <= n.

    With a cap, the result is only meaningful modulo M_K^cap and λ whose
    c_λ already lies in M_K^cap are skipped (v_K(c_λ) >= |λ|).
    """
    if mu.length > ext.n:
        raise InsepError(f"{mu} has more than n={ext.n} parts")
    total = ext.base.zero()
    longest = mu.weight if cap is None else min(mu.weight, cap - 1)
    for k in range(1, longest + 1):
        for lam in enumerate_partitions(mu.weight, max_part=ext.n, num_parts=k):
            c_lam = c_partition(ext, lam)
            if c_lam.is_exact_zero():
                continue
            if cap is not None and c_lam.low() >= cap:
                continue
            d = d_coefficient(lam, mu)
            if d:
                total = total + c_lam * d
    return total.truncate(cap)


def _sigma_cap(profile_: InsepProfile, h: int, cap: int) -> int:
    """Largest Σ(μ) whose terms can still fall below M_K^cap."""
    return profile_.n * (cap - 1) - int(profile_.index(h))


def e_h_via_monomials(ext: EisensteinExtension, terms: Sequence[Tuple[int, FieldElement]], h: int,
                      cap: int, profile_: Optional[InsepProfile] = None) -> FieldElement:
    """
    E_h(α) modulo M_K^cap for α = Σ a_i π^i (i >= 1), summed as Σ_μ a_μ M_μ(π).

    Only μ with h parts taken from the exponent support and
    Σ(μ) <= n(cap-1) - i_j contribute below the cap.
    """
    profile_ = profile_ or profile(ext)
    coefficients = {}
    for i, a in terms:
        if i < 1:
            raise InsepError("α must lie in M_L: series exponents start at 1")
        coefficients[i] = ext.base.from_int(a) if isinstance(a, int) else a
    if not coefficients:
        return ext.base.zero()
    support = sorted(coefficients)
    bound = _sigma_cap(profile_, h, cap)
    total = ext.base.zero()
    for w in range(h * support[0], bound + 1):
        for mu in enumerate_partitions(w, min_part=support[0], max_part=support[-1], num_parts=h):
            if any(part not in coefficients for part in mu.parts):
                continue
            a_mu = ext.base.one()
            for part in mu.parts:
                a_mu = a_mu * coefficients[part]
            if a_mu.is_exact_zero():
                continue
            total = total + a_mu * m_mu_value(ext, mu, cap)
    return total.truncate(cap)


def eh_symbolic(ext: EisensteinExtension, h: int, r: int, cap: int,
                profile_: Optional[InsepProfile] = None) -> List[Tuple[SeriesTerm, FieldElement]]:
    """
    The generic expansion E_h(Σ_{i>=r} a_i π^i) mod M_K^cap.

    Returns (a_μ, M_μ(π)) pairs with M_μ(π) nonzero below the cap.
    """
    profile_ = profile_ or profile(ext)
    out = []
    for term in eh_of_series(h, ext.n, r, _sigma_cap(profile_, h, cap)):
        value = m_mu_value(ext, term.mu, cap)
        if value.low() < cap:
            out.append((term, value))
    return out


def format_symbolic(expansion: Sequence[Tuple[SeriesTerm, FieldElement]]) -> str:
    expr = sympy.Integer(0)
    for term, value in expansion:
        expr += term.monomial * value.to_sympy()
    return str(sympy.expand(expr))


def gamma_lower_bound(profile_: InsepProfile, h: int, r: int) -> int:
    """γ_h(r) = ⌈(i_j + hr)/n⌉ with j = v̄_p(h)."""
    if not 1 <= h <= profile_.n:
        raise InsepError(f"h={h} must lie in 1..{profile_.n}")
    i_j = profile_.index(h)
    if i_j == INF:
        raise InsepError(f"i_j is infinite for h={h}")
    return -(-(int(i_j) + h * r) // profile_.n)


def breakpoints(profile_: InsepProfile, h: int) -> List[int]:
    """r in 1..n with γ_h(r) < γ_h(r+1)."""
    return [r for r in range(1, profile_.n + 1)
            if gamma_lower_bound(profile_, h, r) < gamma_lower_bound(profile_, h, r + 1)]


def _next_breakpoint(profile_: InsepProfile, h: int, r: int) -> int:
    s = r
    while gamma_lower_bound(profile_, h, s + 1) == gamma_lower_bound(profile_, h, s):
        s += 1
    return s


@dataclass
class GValue:
    """One evaluation of g_h(r)."""
    h: int
    r: int
    gamma: int
    value: int
    status: str
    lower: int
    witness: Optional[ExtElement] = None
    detail: str = ""

    def to_dict(self) -> Dict[str, object]:
        return {
            "h": self.h,
            "r": self.r,
            "gamma": self.gamma,
            "g": self.value,
            "status": self.status,
            "lower": self.lower,
            "witness": None if self.witness is None else str(self.witness),
            "detail": self.detail,
        }


def _valuation_of_eh(ext: EisensteinExtension, alpha: ExtElement, h: int, precision: int):
    return e_h(ext, alpha, h, precision).valuation()


def _attains(ext: EisensteinExtension, alpha: ExtElement, h: int, target: int) -> bool:
    return _valuation_of_eh(ext, alpha, h, target + 1) == target


def _tame_value(ext: EisensteinExtension, profile_: InsepProfile, h: int, r: int, gamma: int) -> Optional[GValue]:
    n, p = ext.n, ext.p
    if n % p == 0 or (h * r) % n:
        return None
    s = h * r // n
    u, v = gcd(r, n), gcd(h, s)
    binomial = comb(u, v)
    detail = f"tame: s={s}, u={u}, v={v}, C(u,v)={binomial}"
    if binomial % p:
        witness = from_series(ext, [(r, 1)])
        if not _attains(ext, witness, h, s):
            raise InsepError(f"E_{h}(π^{r}) does not have valuation {s}")
        return GValue(h, r, gamma, s, EXACT, gamma, witness, detail)
    return GValue(h, r, gamma, s + 1, LOWER_BOUND, s + 1, None, detail)


def _witness_search(ext: EisensteinExtension, profile_: InsepProfile, h: int, r: int,
                    gamma: int) -> GValue:
    tame = _tame_value(ext, profile_, h, r, gamma)
    if tame is not None:
        return tame

    last = _next_breakpoint(profile_, h, r)
    for s in range(r, last + 1):
        alpha = from_series(ext, [(s, 1)])
        if _attains(ext, alpha, h, gamma):
            return GValue(h, r, gamma, gamma, EXACT, gamma, alpha, f"π^{s}")

    p, nu = ext.p, ext.nu
    j = vbar_p(h, nu, p)
    if h != p ** j:
        return GValue(h, r, gamma, gamma, LOWER_BOUND, gamma, None, "no monomial witness")
    i_j = int(profile_.i[j])
    m = vbar_p(i_j, nu, p)
    if m >= j:
        return GValue(h, r, gamma, gamma, LOWER_BOUND, gamma, None, "no monomial witness")
    q = ext.base.q
    if q <= p ** m:
        raise ResidueFieldTooSmallError(
            f"Witness search for h={h} needs |residue field| > {p ** m}, got {q}")
    _, b = _split_index(i_j, ext.n)
    b_low = (b % p ** j) // p ** m
    for s in range(r, last + 1):
        for beta in ext.base.residue_representatives()[1:]:
            alpha = from_series(ext, [(s, 1), (s + b_low, beta)])
            if _attains(ext, alpha, h, gamma):
                return GValue(h, r, gamma, gamma, EXACT, gamma, alpha, f"π^{s} + β·π^{s + b_low}")
    return GValue(h, r, gamma, gamma, LOWER_BOUND, gamma, None, "β sweep found no witness")


def _digit_family(q: int, length: int) -> List[Tuple[int, ...]]:
    """Digit tuples with first nonzero digit 1, the all-zero tuple excluded."""
    out = []
    for lead in range(length):
        for tail in product(range(q), repeat=length - lead - 1):
            out.append((0,) * lead + (1,) + tail)
    return out


def _exhaustive(ext: EisensteinExtension, profile_: InsepProfile, h: int, r: int, gamma: int,
                sweep_bound: int, sweep_limit: int, progress: bool) -> GValue:
    q = ext.base.q
    family_size = (q ** sweep_bound - 1) // (q - 1)
    if family_size > sweep_limit:
        raise BoundExceededError(
            f"Exhaustive sweep over {family_size} series exceeds the limit {sweep_limit}")
    i_j = int(profile_.index(h))
    coverage = -(-(i_j + h * r + sweep_bound) // ext.n)
    precision = min(coverage + 1, ext.base.precision)
    reps = ext.base.residue_representatives()

    best: Optional[int] = None
    best_alpha: Optional[ExtElement] = None
    for digits in tqdm(_digit_family(q, sweep_bound), desc=f"g_{h}({r})", disable=not progress):
        terms = [(r + k, reps[d]) for k, d in enumerate(digits) if d]
        alpha = from_series(ext, terms)
        v = _valuation_of_eh(ext, alpha, h, precision)
        if isinstance(v, Indeterminate) or v == INF:
            continue
        if v < gamma:
            raise InsepError(f"v_K(E_{h}({alpha})) = {v} is below the lower bound {gamma}")
        if best is None or v < best:
            best, best_alpha = v, alpha
            if best == gamma:
                break

    detail = f"B={sweep_bound}, coverage={coverage}"
    if best is not None and best <= coverage:
        return GValue(h, r, gamma, best, EXACT, best, best_alpha, detail)
    certified = max(gamma, min(coverage, precision))
    if best is None:
        return GValue(h, r, gamma, certified, LOWER_BOUND, certified, None, detail)
    return GValue(h, r, gamma, best, UPPER_BOUND, certified, best_alpha, detail)


def g_exact(ext: EisensteinExtension, profile_: InsepProfile, h: int, r: int, mode: str = "witness",
            sweep_bound: Optional[int] = None, sweep_limit: int = DEFAULT_SWEEP_LIMIT,
            progress: bool = False) -> GValue:
    """
    Evaluate g_h(r), the least v_K(E_h(α)) over α ∈ M_L^r.

    Args:
        ext: The extension
        profile_: Its profile
        h: 1 <= h <= n
        r: Any integer; reduced into 1..n via g_h(r + nt) = g_h(r) + ht
        mode: "witness" (monomial, β-sweep and tame criterion) or "exhaustive"
        sweep_bound: Number of π-digits B swept in exhaustive mode (default n)
        sweep_limit: Largest family an exhaustive sweep may visit
        progress: Show a tqdm bar during exhaustive sweeps

    Returns:
        GValue with status exact, lower_bound or upper_bound
    """
    n = ext.n
    if not 1 <= h <= n:
        raise InsepError(f"h={h} must lie in 1..{n}")
    if mode not in ("witness", "exhaustive"):
        raise InsepError(f"Unknown mode {mode!r}")
    reduced = (r - 1) % n + 1
    t = (r - reduced) // n
    gamma = gamma_lower_bound(profile_, h, reduced)
    if mode == "witness":
        result = _witness_search(ext, profile_, h, reduced, gamma)
    else:
        result = _exhaustive(ext, profile_, h, reduced, gamma, sweep_bound or n, sweep_limit, progress)
    if t:
        logging.debug(f"Shifting g_{h}({reduced}) by {h * t} for r={r}")
        witness = result.witness
        if witness is not None:
            # E_h(α·π_K^t) = π_K^{ht}·E_h(α)
            witness = witness * ext.base.uniformizer_power(t)
        result = GValue(h, r, result.gamma + h * t, result.value + h * t, result.status,
                        result.lower + h * t, witness, result.detail)
    return result


def trace_ideal(ext: EisensteinExtension, r: int, profile_: Optional[InsepProfile] = None) -> int:
    """g_1(r) = ⌊(d_0 + r)/n⌋."""
    profile_ = profile_ or profile(ext)
    return (higher_different(profile_, 0) + r) // ext.n


def higher_different(profile_: InsepProfile, j: int) -> int:
    """d_j = ⌊(i_j + n - 1)/p^j⌋."""
    if not 0 <= j <= profile_.nu:
        raise InsepError(f"j={j} must lie in 0..{profile_.nu}")
    return (int(profile_.i[j]) + profile_.n - 1) // profile_.p ** j


def residue_field_sufficient(profile_: InsepProfile, q: int) -> bool:
    """Whether |K̄| exceeds p^m for every level with v̄_p(i_j) < j."""
    for j in range(profile_.nu + 1):
        m = vbar_p(int(profile_.i[j]), profile_.nu, profile_.p)
        if m < j and q <= profile_.p ** m:
            return False
    return True


@dataclass
class BoundCheck:
    """Per-h outcome of the coefficient valuation bound."""
    passed: bool
    equality: List[int] = field(default_factory=list)
    failures: List[Dict[str, object]] = field(default_factory=list)


def verify_lemma_bound(ext: EisensteinExtension, profile_: InsepProfile) -> BoundCheck:
    """
    v_L(c_h) >= i_j^π + h for j = v̄_p(h), with equality exactly at h = b_j.
    """
    n = ext.n
    result = BoundCheck(passed=True)
    for h in range(1, n + 1):
        j = vbar_p(h, profile_.nu, profile_.p)
        bound = profile_.i_pi[j] + h
        v = ext.coefficient(h).valuation()
        v_L = INF if v == INF else n * lower_bound(v)
        if isinstance(v, Indeterminate) and v_L <= bound:
            raise InsufficientPrecisionError(
                f"v_K(c_{h}) >= {v.lower_bound} does not decide v_L(c_{h}) against {bound}", v.lower_bound)
        if v_L < bound:
            result.passed = False
            result.failures.append({"h": h, "v_L": _json_value(v_L), "bound": _json_value(bound)})
            continue
        equal = v_L == bound
        if equal:
            result.equality.append(h)
        expected = profile_.i_pi[j] == INF or h == profile_.b[j]
        if equal != expected:
            result.passed = False
            result.failures.append({"h": h, "equality": equal, "b_j": profile_.b[j]})
    return result


def verify_partition_bound(ext: EisensteinExtension, profile_: InsepProfile, max_weight: int) -> List[Dict[str, object]]:
    """
    v_L(c_λ) >= i_t^π + Σ(λ), t the least v̄_p of a part; on equality the
    λ must be one copy of b_t plus copies of n. Returns the violations.
    """
    n, p, nu = ext.n, ext.p, ext.nu
    violations = []
    for w in range(1, max_weight + 1):
        for lam in enumerate_partitions(w, max_part=n):
            t = min(vbar_p(part, nu, p) for part in lam.parts)
            v = c_partition(ext, lam).valuation()
            if isinstance(v, Indeterminate):
                continue
            v_L = INF if v == INF else n * v
            bound = profile_.i_pi[t] + w
            if v_L < bound:
                violations.append({"lambda": str(lam), "v_L": _json_value(v_L), "bound": _json_value(bound)})
            elif v_L == bound and bound != INF:
                rest = list(lam.parts)
                if profile_.b[t] in rest:
                    rest.remove(profile_.b[t])
                if len(rest) != lam.length - 1 or any(x != n for x in rest):
                    violations.append({"lambda": str(lam), "equality": True, "b_t": profile_.b[t]})
    return violations


def check_index_facts(profile_: InsepProfile) -> List[str]:
    """The elementary facts about i_j; returns the ones that fail."""
    failed = []
    i = profile_.i
    nu = profile_.nu
    if i[nu] != 0:
        failed.append(f"i_ν = {i[nu]} is not 0")
    if nu >= 1 and not i[nu - 1] > 0:
        failed.append("i_{ν-1} is not positive")
    if any(i[j] < i[j + 1] for j in range(nu)):
        failed.append(f"indices are not non-increasing: {i}")
    if any(x == INF for x in i):
        failed.append("an index is infinite")
    if profile_.e_L == INF and i != profile_.i_pi:
        failed.append("equal characteristic but i_j != i_j^π")
    for j in range(nu + 1):
        if i[j] == INF:
            continue
        m = vbar_p(int(i[j]), nu, profile_.p)
        if m <= j:
            if not (i[j] == i[m] == profile_.i_pi[j] == profile_.i_pi[m]):
                failed.append(f"level {j}: expected i_j = i_m = i_j^π = i_m^π for m={m}")
        elif profile_.e_L == INF or i[j] != profile_.i_pi[m] + (m - j) * profile_.e_L:
            failed.append(f"level {j}: expected i_j = i_m^π + (m-j)e_L for m={m}")
    return failed


def crude_bound(profile_: InsepProfile, h: int, r: int) -> int:
    """⌈hr/n⌉, never above γ_h(r)."""
    return crude_lower_bound(profile_.n, h, r)
