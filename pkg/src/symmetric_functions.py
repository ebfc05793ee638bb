"""
Symmetric Functions
Monomial and elementary symmetric polynomials in the monomial basis, the
brute-force m -> e basis change, generic-coefficient expansions of E_h,
and membership in the subrings R_k of Z[X_1..X_n].
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

import sympy
from sympy import Poly, Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import multiset_permutations

from .exceptions import BoundExceededError, DimensionMismatchError, InsepError
from .partitions import Partition, enumerate_partitions

DEFAULT_SIGMA_BOUND = 12

Exponent = Tuple[int, ...]


class MultiSymPoly:
    """
    A symmetric polynomial in n variables, stored in the monomial basis.

    terms maps a partition ν (at most n parts) to the coefficient of m_ν.
    """

    def __init__(self, n: int, terms: Optional[Mapping[Partition, int]] = None):
        self.n = n
        cleaned = {}
        for key, coeff in (terms or {}).items():
            if key.length > n:
                raise DimensionMismatchError(f"{key} has more than {n} parts")
            if coeff:
                cleaned[key] = int(coeff)
        self.terms: Dict[Partition, int] = cleaned

    def coefficient(self, key: Partition) -> int:
        return self.terms.get(key, 0)

    def _check(self, other: "MultiSymPoly"):
        if other.n != self.n:
            raise DimensionMismatchError(f"Variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "MultiSymPoly") -> "MultiSymPoly":
        self._check(other)
        merged = defaultdict(int, self.terms)
        for key, coeff in other.terms.items():
            merged[key] += coeff
        return MultiSymPoly(self.n, merged)

    def __neg__(self) -> "MultiSymPoly":
        return MultiSymPoly(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "MultiSymPoly") -> "MultiSymPoly":
        return self + (-other)

    def __mul__(self, other: Union["MultiSymPoly", int]) -> "MultiSymPoly":
        if isinstance(other, int):
            return MultiSymPoly(self.n, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        product: Dict[Partition, int] = defaultdict(int)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                for key, count in monomial_product(a, b, self.n).items():
                    product[key] += ca * cb * count
        return MultiSymPoly(self.n, product)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiSymPoly) and self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*m{key}" for key, c in sorted(self.terms.items(), reverse=True))
        return f"MultiSymPoly(n={self.n}, {body or '0'})"

    def is_zero(self) -> bool:
        return not self.terms


def _padded(partition: Partition, n: int) -> Exponent:
    return partition.parts + (0,) * (n - partition.length)


@lru_cache(maxsize=None)
def monomial_product(a: Partition, b: Partition, n: int) -> Dict[Partition, int]:
    """Coefficients of m_a·m_b in the monomial basis (n variables)."""
    weight = a.weight + b.weight
    target_b = _padded(b, n)
    result = {}
    for nu in enumerate_partitions(weight):
        if nu.length > n:
            continue
        nu_vec = _padded(nu, n)
        count = 0
        for perm in multiset_permutations(list(_padded(a, n))):
            rest = tuple(x - y for x, y in zip(nu_vec, perm))
            if min(rest) >= 0 and tuple(sorted(rest, reverse=True)) == target_b:
                count += 1
        if count:
            result[nu] = count
    return result


def monomial_sym(mu: Partition, n: int) -> MultiSymPoly:
    """m_μ(X_1..X_n)."""
    if mu.length > n:
        raise DimensionMismatchError(f"m_{mu} needs at least {mu.length} variables, got {n}")
    return MultiSymPoly(n, {mu: 1})


def elementary_sym(h: int, n: int) -> MultiSymPoly:
    """e_h(X_1..X_n) = m_{1^h}."""
    if not 1 <= h <= n:
        raise DimensionMismatchError(f"e_{h} is undefined for {n} variables")
    return MultiSymPoly(n, {Partition((1,) * h): 1})


def power_sum(k: int, n: int) -> MultiSymPoly:
    """p_k = m_{k}."""
    return monomial_sym(Partition((k,)), n)


@lru_cache(maxsize=None)
def _zero_one_matrices(rows: Tuple[int, ...], columns: Tuple[int, ...]) -> int:
    """Number of 0-1 matrices with the given row and column sums."""
    if not rows:
        return int(not any(columns))
    first, rest = rows[0], rows[1:]
    live = [i for i, c in enumerate(columns) if c > 0]
    total = 0
    for chosen in combinations(live, first):
        remaining = list(columns)
        for i in chosen:
            remaining[i] -= 1
        total += _zero_one_matrices(rest, tuple(sorted(remaining, reverse=True)))
    return total


@lru_cache(maxsize=None)
def e_product(lam: Partition, n: int) -> MultiSymPoly:
    """e_{λ1}···e_{λk} in the monomial basis; zero if some part exceeds n."""
    if lam.max_part() > n:
        return MultiSymPoly(n)
    terms = {}
    for k in range(lam.max_part(), min(n, lam.weight) + 1):
        for nu in enumerate_partitions(lam.weight, max_part=lam.length, num_parts=k):
            count = _zero_one_matrices(lam.parts, nu.parts)
            if count:
                terms[nu] = count
    return MultiSymPoly(n, terms)


@dataclass
class PsiPolynomial:
    """
    ψ_μ: the integer polynomial with m_μ = ψ_μ(e_1, ..., e_n).

    terms maps λ (parts <= n) to d_λμ, the coefficient of X_{λ1}···X_{λk}.
    """
    mu: Partition
    n: int
    terms: Dict[Partition, int] = field(default_factory=dict)

    def coefficient(self, lam: Partition) -> int:
        return self.terms.get(lam, 0)

    def evaluate_monomial(self) -> MultiSymPoly:
        """Substitute X_i = e_i and expand in the monomial basis."""
        total = MultiSymPoly(self.n)
        for lam, d in self.terms.items():
            total = total + e_product(lam, self.n) * d
        return total

    def variables(self) -> List[sympy.Symbol]:
        return list(sympy.symbols(f"X1:{self.n + 1}"))

    def as_poly(self) -> Poly:
        gens = self.variables()
        expr = sum(
            (d * sympy.Mul(*[gens[part - 1] for part in lam.parts]) for lam, d in self.terms.items()),
            sympy.Integer(0),
        )
        return Poly(expr, *gens, domain="ZZ")

    def lines(self) -> List[str]:
        """One "d * X_a·X_b" line per term, largest λ first."""
        out = []
        for lam in sorted(self.terms, reverse=True):
            monomial = "·".join(f"X_{part}" for part in lam.parts)
            out.append(f"{self.terms[lam]} * {monomial}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines()) or "0"


@lru_cache(maxsize=None)
def brute_force_psi(mu: Partition, n: int, sigma_bound: int = DEFAULT_SIGMA_BOUND) -> PsiPolynomial:
    """
    Compute ψ_μ by exact linear algebra in the monomial basis.

    Every product e_λ (λ ⊢ Σ(μ), parts <= n) is expanded in the monomial
    basis and the square system Σ_λ x_λ e_λ = m_μ is solved over QQ.

    Args:
        mu: Partition with at most n parts
        n: Number of variables
        sigma_bound: Largest Σ(μ) the solver accepts

    Returns:
        PsiPolynomial with integer coefficients
    """
    if mu.length > n:
        raise DimensionMismatchError(f"{mu} has more than {n} parts")
    if mu.weight > sigma_bound:
        raise BoundExceededError(f"Σ({mu}) = {mu.weight} exceeds the configured bound {sigma_bound}")
    w = mu.weight
    columns = list(enumerate_partitions(w, max_part=n))
    rows = [nu for nu in enumerate_partitions(w) if nu.length <= n]
    if len(rows) != len(columns):
        raise DimensionMismatchError(f"Transition system is not square ({len(rows)}x{len(columns)})")
    index = {nu: i for i, nu in enumerate(rows)}
    matrix = [[QQ(0)] * len(columns) for _ in rows]
    for j, lam in enumerate(columns):
        for nu, count in e_product(lam, n).terms.items():
            matrix[index[nu]][j] = QQ(count)
    rhs = [[QQ(int(nu == mu))] for nu in rows]
    system = DomainMatrix(matrix, (len(rows), len(columns)), QQ)
    solution = system.lu_solve(DomainMatrix(rhs, (len(rows), 1), QQ)).to_Matrix()
    terms = {}
    for lam, value in zip(columns, solution):
        value = Rational(value)
        if value.q != 1:
            raise InsepError(f"Non-integral transition coefficient {value} for ψ_{mu} at {lam}")
        if value.p:
            terms[lam] = int(value.p)
    logging.debug(f"ψ_{mu} (n={n}) has {len(terms)} terms")
    return PsiPolynomial(mu=mu, n=n, terms=terms)


@lru_cache(maxsize=None)
def psi_by_elimination(mu: Partition, n: int) -> PsiPolynomial:
    """
    Compute ψ_μ by cancelling leading monomials.

    The lexicographically largest m_ν left in the residual is removed with
    e_{ν'}, whose expansion is m_ν plus terms below ν in dominance order.
    Only integers appear and no Σ bound applies.
    """
    if mu.length > n:
        raise DimensionMismatchError(f"{mu} has more than {n} parts")
    residual: Dict[Partition, int] = {mu: 1}
    terms: Dict[Partition, int] = {}
    while residual:
        nu = max(residual)
        coeff = residual[nu]
        lam = nu.conjugate()
        terms[lam] = coeff
        for key, count in e_product(lam, n).terms.items():
            value = residual.get(key, 0) - coeff * count
            if value:
                residual[key] = value
            else:
                residual.pop(key, None)
    logging.debug(f"ψ_{mu} (n={n}) eliminated in {len(terms)} steps")
    return PsiPolynomial(mu=mu, n=n, terms=terms)


def coefficient_symbol(i: int) -> sympy.Symbol:
    """Generic series coefficient a_i."""
    return sympy.Symbol(f"a{i}")


@dataclass(frozen=True)
class SeriesTerm:
    """One term a_μ·M_μ of the generic expansion of E_h."""
    mu: Partition
    monomial: sympy.Expr


def eh_of_series(h: int, n: int, r: int, degree_cap: int) -> List[SeriesTerm]:
    """
    Partitions μ with h parts, all >= r, Σ(μ) <= degree_cap, each with a_μ.

    Ordered by Σ(μ), then lexicographically decreasing.
    """
    if not 1 <= h <= n:
        raise DimensionMismatchError(f"h={h} must lie in 1..{n}")
    if r < 1:
        raise DimensionMismatchError(f"r must be >= 1, got {r}")
    terms = []
    for w in range(h * r, degree_cap + 1):
        for mu in enumerate_partitions(w, min_part=r, num_parts=h):
            monomial = sympy.Mul(*[coefficient_symbol(part) for part in mu.parts])
            terms.append(SeriesTerm(mu=mu, monomial=monomial))
    return terms


PolyLike = Union[Poly, Mapping[Exponent, int]]


def _as_terms(poly: PolyLike) -> Dict[Exponent, int]:
    if isinstance(poly, Poly):
        return {tuple(e): int(c) for e, c in poly.terms() if c}
    return {tuple(e): int(c) for e, c in poly.items() if c}


def _vp(k: int, p: int) -> int:
    count = 0
    while k % p == 0:
        k //= p
        count += 1
    return count


@dataclass
class RkMembership:
    """Outcome of an R_k test; witness[i] is φ_i with F = Σ_i p^{k-i} φ_i(X^{p^i})."""
    member: bool
    k: int
    p: int
    witness: Dict[int, Dict[Exponent, int]] = field(default_factory=dict)
    offending: Optional[Tuple[Exponent, int]] = None

    def __bool__(self) -> bool:
        return self.member


def rk_membership(poly: PolyLike, k: int, p: int) -> RkMembership:
    """
    Test F ∈ R_k and build the witness decomposition.

    A monomial c·X^e whose exponents are all divisible by p^t (t capped at
    k) lies in R_k exactly when p^{k-t} divides c.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    witness: Dict[int, Dict[Exponent, int]] = defaultdict(dict)
    for exponent, coeff in sorted(_as_terms(poly).items()):
        common = 0
        for e in exponent:
            common = sympy.igcd(common, e)
        t = k if common == 0 else min(_vp(common, p), k)
        scale = p ** (k - t)
        if coeff % scale:
            return RkMembership(member=False, k=k, p=p, offending=(exponent, coeff))
        reduced = tuple(e // p ** t for e in exponent)
        witness[t][reduced] = witness[t].get(reduced, 0) + coeff // scale
    return RkMembership(member=True, k=k, p=p, witness=dict(witness))


def frobenius_twist(poly: PolyLike, p: int, i: int) -> Dict[Exponent, int]:
    """F(X_1^{p^i}, ..., X_n^{p^i})."""
    step = p ** i
    return {tuple(e * step for e in exponent): c for exponent, c in _as_terms(poly).items()}


def rk_witness_poly(result: RkMembership) -> Dict[Exponent, int]:
    """Rebuild F from its witness decomposition."""
    total: Dict[Exponent, int] = defaultdict(int)
    for i, phi in result.witness.items():
        for exponent, c in frobenius_twist(phi, result.p, i).items():
            total[exponent] += result.p ** (result.k - i) * c
    return {e: c for e, c in total.items() if c}


def poly_from_terms(terms: Mapping[Exponent, int], gens: Iterable[sympy.Symbol]) -> Poly:
    gens = list(gens)
    return Poly.from_dict({tuple(e): c for e, c in terms.items()}, *gens, domain="ZZ")


def newton_power_sum(k: int, n: int) -> MultiSymPoly:
    """p_k from Newton's identities p_k = Σ_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k."""
    sums: List[MultiSymPoly] = [MultiSymPoly(n)]
    for m in range(1, k + 1):
        total = MultiSymPoly(n)
        for i in range(1, min(m, n + 1)):
            total = total + elementary_sym(i, n) * sums[m - i] * (-1) ** (i - 1)
        if m <= n:
            total = total + elementary_sym(m, n) * ((-1) ** (m - 1) * m)
        sums.append(total)
    return sums[k]
