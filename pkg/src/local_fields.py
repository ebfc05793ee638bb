"""
Local Fields
Exact arithmetic in F_q((t)) and Q_p with tracked absolute precision,
Eisenstein extensions, multiplication matrices and the elementary
symmetric values E_h(α) read off the characteristic polynomial.

Precision contract: an element carries the absolute precision N below
which its digits are known (None means exact). Arithmetic never raises
precision, and a valuation that cannot be decided at the known precision
comes back as Indeterminate(lower_bound=N).
"""

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

import sympy
from sympy import multiplicity

from .exceptions import InsepError, InsufficientPrecisionError, NotUniformizerError
from .residue_field import ResidueField, get_residue_field

INF = math.inf
DEFAULT_PRECISION = 64


@dataclass(frozen=True)
class Indeterminate:
    """Valuation of an element that is zero to known precision."""
    lower_bound: int

    def __str__(self) -> str:
        return f"indeterminate(>={self.lower_bound})"


Valuation = Union[int, float, Indeterminate]


def lower_bound(v: Valuation) -> Union[int, float]:
    """The best known lower bound for a valuation."""
    return v.lower_bound if isinstance(v, Indeterminate) else v


def _min_prec(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _product_prec(low_a, prec_a, low_b, prec_b) -> Optional[int]:
    candidates = []
    if prec_b is not None:
        candidates.append(low_a + prec_b)
    if prec_a is not None:
        candidates.append(low_b + prec_a)
    return min(candidates) if candidates else None


@dataclass(frozen=True)
class LaurentSeries:
    """
    Σ coeffs[k] t^{start+k} over a residue field, known below exponent prec.
    """
    field: ResidueField
    start: int = 0
    coeffs: Tuple[int, ...] = ()
    prec: Optional[int] = None

    def __post_init__(self):
        start, coeffs = self.start, list(self.coeffs)
        if self.prec is not None:
            coeffs = coeffs[:max(0, self.prec - start)]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        coeffs = coeffs[lead:]
        start += lead
        if not coeffs:
            start = 0 if self.prec is None else self.prec
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_terms(cls, field: ResidueField, terms: Dict[int, int], prec: Optional[int] = None) -> "LaurentSeries":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls(field, 0, (), prec)
        lo, hi = min(terms), max(terms)
        return cls(field, lo, tuple(terms.get(e, 0) for e in range(lo, hi + 1)), prec)

    def terms(self) -> Dict[int, int]:
        return {self.start + k: c for k, c in enumerate(self.coeffs) if c}

    def is_exact_zero(self) -> bool:
        return not self.coeffs and self.prec is None

    def valuation(self) -> Valuation:
        if self.coeffs:
            return self.start
        return INF if self.prec is None else Indeterminate(self.prec)

    def low(self) -> Union[int, float]:
        return lower_bound(self.valuation())

    def truncate(self, prec: Optional[int]) -> "LaurentSeries":
        if prec is None:
            return self
        return LaurentSeries(self.field, self.start, self.coeffs, _min_prec(self.prec, prec))

    def _coerce(self, other) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            if other.field != self.field:
                raise InsepError("Cannot combine series over different residue fields")
            return other
        if isinstance(other, int):
            return LaurentSeries(self.field, 0, (self.field.from_int(other),))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        total = self.terms()
        for e, c in other.terms().items():
            total[e] = f.add(total.get(e, 0), c)
        return LaurentSeries.from_terms(f, total, _min_prec(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.field, self.start, tuple(self.field.neg(c) for c in self.coeffs), self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        if self.is_exact_zero() or other.is_exact_zero():
            return LaurentSeries(f)
        prec = _product_prec(self.low(), self.prec, other.low(), other.prec)
        total: Dict[int, int] = {}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            ea = self.start + i
            for j, b in enumerate(other.coeffs):
                e = ea + other.start + j
                if prec is not None and e >= prec:
                    break
                if b:
                    total[e] = f.add(total.get(e, 0), f.mul(a, b))
        return LaurentSeries.from_terms(f, total, prec)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("Negative powers are not supported")
        result = LaurentSeries(self.field, 0, (1,))
        for _ in range(k):
            result = result * self
        return result

    def to_sympy(self) -> sympy.Expr:
        t, g = sympy.symbols("t g")
        expr = sympy.Integer(0)
        for e, c in self.terms().items():
            digits = self.field.digits(c)
            coefficient = sum(d * g ** k for k, d in enumerate(digits))
            expr += coefficient * t ** e
        return expr

    def __str__(self) -> str:
        pieces = []
        for e, c in sorted(self.terms().items()):
            coeff = self.field.format(c)
            if "+" in coeff:
                coeff = f"({coeff})"
            if e == 0:
                pieces.append(coeff)
                continue
            power = "t" if e == 1 else f"t^{e}"
            pieces.append(power if coeff == "1" else f"{coeff}*{power}")
        if self.prec is not None:
            pieces.append(f"O(t^{self.prec})")
        return " + ".join(pieces) or "0"


@dataclass(frozen=True)
class PadicNumber:
    """value·p^shift, known modulo p^prec."""
    p: int
    value: int = 0
    shift: int = 0
    prec: Optional[int] = None

    def __post_init__(self):
        value, shift = self.value, self.shift
        if self.prec is not None:
            if self.prec <= shift:
                value = 0
            else:
                value %= self.p ** (self.prec - shift)
        if value:
            extra = multiplicity(self.p, value)
            value //= self.p ** extra
            shift += extra
        else:
            shift = 0 if self.prec is None else self.prec
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "shift", shift)

    def is_exact_zero(self) -> bool:
        return self.value == 0 and self.prec is None

    def valuation(self) -> Valuation:
        if self.value:
            return self.shift
        return INF if self.prec is None else Indeterminate(self.prec)

    def low(self) -> Union[int, float]:
        return lower_bound(self.valuation())

    def truncate(self, prec: Optional[int]) -> "PadicNumber":
        if prec is None:
            return self
        return PadicNumber(self.p, self.value, self.shift, _min_prec(self.prec, prec))

    def _coerce(self, other) -> "PadicNumber":
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise InsepError(f"Cannot combine {self.p}-adic and {other.p}-adic numbers")
            return other
        if isinstance(other, int):
            return PadicNumber(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        shift = min(self.shift, other.shift)
        value = self.value * self.p ** (self.shift - shift) + other.value * self.p ** (other.shift - shift)
        return PadicNumber(self.p, value, shift, _min_prec(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self):
        return PadicNumber(self.p, -self.value, self.shift, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_exact_zero() or other.is_exact_zero():
            return PadicNumber(self.p)
        prec = _product_prec(self.low(), self.prec, other.low(), other.prec)
        return PadicNumber(self.p, self.value * other.value, self.shift + other.shift, prec)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("Negative powers are not supported")
        result = PadicNumber(self.p, 1)
        for _ in range(k):
            result = result * self
        return result

    def residue(self) -> int:
        """Image in F_p of an integral element."""
        if self.shift > 0 or not self.value:
            return 0
        return self.value % self.p

    def to_sympy(self) -> sympy.Expr:
        return sympy.Integer(self.value) * sympy.Integer(self.p) ** self.shift

    def __str__(self) -> str:
        if self.value:
            body = str(self.value) if self.shift == 0 else f"{self.value}*{self.p}^{self.shift}"
        else:
            body = "0"
        if self.prec is not None:
            return f"{body} + O({self.p}^{self.prec})"
        return body


FieldElement = Union[LaurentSeries, PadicNumber]


class BaseField:
    """Shared interface of the complete discretely valued base fields."""

    kind = ""
    characteristic = 0
    e_K: Union[int, float] = 1

    def __init__(self, residue: ResidueField, precision: int = DEFAULT_PRECISION):
        if precision < 1:
            raise ValueError(f"Precision must be >= 1, got {precision}")
        self.residue = residue
        self.precision = precision

    @property
    def p(self) -> int:
        return self.residue.p

    @property
    def q(self) -> int:
        return self.residue.q

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and other.residue == self.residue

    def __hash__(self) -> int:
        return hash((self.kind, self.residue))

    def zero(self) -> FieldElement:
        return self.from_int(0)

    def one(self) -> FieldElement:
        return self.from_int(1)

    def from_int(self, k: int) -> FieldElement:
        raise NotImplementedError

    def from_residue(self, a: int) -> FieldElement:
        raise NotImplementedError

    def uniformizer(self) -> FieldElement:
        raise NotImplementedError

    def uniformizer_power(self, k: int) -> FieldElement:
        """π_K^k for any integer k."""
        raise NotImplementedError

    def random_integral(self, rng: random.Random, prec: Optional[int] = None) -> FieldElement:
        raise NotImplementedError

    def residue_representatives(self) -> List[FieldElement]:
        return [self.from_residue(a) for a in self.residue.elements()]

    def spec(self) -> str:
        raise NotImplementedError


class LaurentField(BaseField):
    """F_q((t)), equal characteristic."""

    kind = "laurent"
    e_K = INF

    @property
    def characteristic(self) -> int:
        return self.residue.p

    @property
    def name(self) -> str:
        return f"{self.residue.name}((t))"

    def from_int(self, k: int) -> LaurentSeries:
        return LaurentSeries(self.residue, 0, (self.residue.from_int(k),))

    def from_residue(self, a: int) -> LaurentSeries:
        return LaurentSeries(self.residue, 0, (a,))

    def uniformizer(self) -> LaurentSeries:
        return LaurentSeries(self.residue, 1, (1,))

    def uniformizer_power(self, k: int) -> LaurentSeries:
        return LaurentSeries(self.residue, k, (1,))

    def random_integral(self, rng: random.Random, prec: Optional[int] = None) -> LaurentSeries:
        prec = prec or self.precision
        return LaurentSeries(self.residue, 0, tuple(rng.randrange(self.q) for _ in range(prec)), prec)

    def spec(self) -> str:
        text = f"laurent:p={self.p},d={self.residue.degree}"
        if self.residue.degree > 1:
            text += ",modulus=" + "".join(str(c) for c in self.residue.modulus)
        return text


class PadicField(BaseField):
    """Q_p, mixed characteristic with e_K = 1."""

    kind = "padic"
    e_K = 1

    def __init__(self, p: int, precision: int = DEFAULT_PRECISION):
        super().__init__(get_residue_field(p), precision)

    @property
    def name(self) -> str:
        return f"Q_{self.p}"

    def from_int(self, k: int) -> PadicNumber:
        return PadicNumber(self.p, k)

    def from_residue(self, a: int) -> PadicNumber:
        return PadicNumber(self.p, a)

    def uniformizer(self) -> PadicNumber:
        return PadicNumber(self.p, self.p)

    def uniformizer_power(self, k: int) -> PadicNumber:
        return PadicNumber(self.p, 1, k)

    def random_integral(self, rng: random.Random, prec: Optional[int] = None) -> PadicNumber:
        prec = prec or self.precision
        return PadicNumber(self.p, rng.randrange(self.p ** prec), 0, prec)

    def spec(self) -> str:
        return f"padic:p={self.p}"


def valuation_K(x: FieldElement) -> Valuation:
    """v_K(x): an int, INF for an exact zero, or Indeterminate."""
    return x.valuation()


def congruent(x: FieldElement, y: FieldElement, cap: int) -> bool:
    """x ≡ y mod M_K^cap, as far as the known digits show."""
    return (x - y).low() >= cap


@dataclass(frozen=True)
class EisensteinExtension:
    """
    L = K(π) for a root π of f(X) = X^n - c_1 X^{n-1} + ... + (-1)^n c_n.

    c holds (c_1, ..., c_n), so c_h = E_h(π).
    """
    base: BaseField
    c: Tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.c:
            raise InsepError("An extension needs degree n >= 1")
        last = self.c[-1].valuation()
        if isinstance(last, Indeterminate):
            raise InsufficientPrecisionError("v_K(c_n) is not known at this precision", last.lower_bound)
        if last != 1:
            raise InsepError(f"Not Eisenstein: v_K(c_n) = {last}")
        for h, ch in enumerate(self.c[:-1], start=1):
            if ch.low() < 1:
                if isinstance(ch.valuation(), Indeterminate):
                    raise InsufficientPrecisionError(f"v_K(c_{h}) is not known at this precision", ch.prec)
                raise InsepError(f"Not Eisenstein: v_K(c_{h}) = {ch.valuation()}")

    @classmethod
    def from_polynomial(cls, base: BaseField, coefficients: Sequence[FieldElement]) -> "EisensteinExtension":
        """Build from monic f given as coefficients a_0..a_n (lowest degree first)."""
        n = len(coefficients) - 1
        if n < 1:
            raise InsepError("The defining polynomial must have degree >= 1")
        lead = coefficients[-1] - base.one()
        if lead.low() != INF:
            raise InsepError("The defining polynomial must be monic")
        c = tuple(coefficients[n - h] if h % 2 == 0 else -coefficients[n - h] for h in range(1, n + 1))
        return cls(base, c)

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def nu(self) -> int:
        return multiplicity(self.p, self.n)

    @property
    def u(self) -> int:
        return self.n // self.p ** self.nu

    @property
    def e_L(self) -> Union[int, float]:
        return self.n * self.base.e_K

    @property
    def equal_characteristic(self) -> bool:
        return self.base.characteristic == self.p

    def coefficient(self, h: int) -> FieldElement:
        """c_h for 1 <= h <= n."""
        return self.c[h - 1]

    def polynomial_coefficients(self) -> List[FieldElement]:
        """a_0..a_n of f, lowest degree first."""
        n = self.n
        coeffs = [self.c[n - k - 1] if (n - k) % 2 == 0 else -self.c[n - k - 1] for k in range(n)]
        return coeffs + [self.base.one()]

    def reduction(self) -> List[FieldElement]:
        """r[k] with π^n = Σ_k r[k] π^k."""
        out = [self.base.zero()] * self.n
        for h, ch in enumerate(self.c, start=1):
            out[self.n - h] = ch if h % 2 else -ch
        return out

    def format(self) -> str:
        pieces = []
        for k, a in reversed(list(enumerate(self.polynomial_coefficients()))):
            if a.is_exact_zero():
                continue
            power = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            text = str(a)
            if k == self.n:
                pieces.append(power)
            elif not power:
                pieces.append(text)
            elif text == "1":
                pieces.append(power)
            else:
                pieces.append(f"({text})*{power}" if " " in text or "+" in text else f"{text}*{power}")
        return " + ".join(pieces)

    def pi(self) -> "ExtElement":
        return from_series(self, [(1, self.base.one())])

    def truncate(self, prec: Optional[int]) -> "EisensteinExtension":
        return EisensteinExtension(self.base, tuple(ch.truncate(prec) for ch in self.c))


@dataclass(frozen=True)
class ExtElement:
    """α = Σ coeffs[i] π^i in the basis 1, π, ..., π^{n-1}."""
    ext: EisensteinExtension
    coeffs: Tuple[FieldElement, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ext.n:
            raise InsepError(f"Expected {self.ext.n} coefficients, got {len(self.coeffs)}")

    def v_L(self) -> Valuation:
        """min_i n·v_K(α_i) + i, or Indeterminate when precision runs out first."""
        n = self.ext.n
        best = INF
        unknown = INF
        for i, a in enumerate(self.coeffs):
            v = a.valuation()
            if isinstance(v, Indeterminate):
                unknown = min(unknown, n * v.lower_bound + i)
            else:
                best = min(best, n * v + i)
        if unknown < best or (unknown != INF and best == INF):
            return Indeterminate(unknown)
        return best

    def __add__(self, other: "ExtElement") -> "ExtElement":
        return ExtElement(self.ext, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ExtElement":
        return ExtElement(self.ext, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ExtElement):
            return ExtElement(self.ext, tuple(a * other for a in self.coeffs))
        n = self.ext.n
        zero = self.ext.base.zero()
        product = [zero] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_exact_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_exact_zero():
                    product[i + j] = product[i + j] + a * b
        return ExtElement(self.ext, _reduce(self.ext, product))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ExtElement":
        result = from_series(self.ext, [(0, self.ext.base.one())])
        for _ in range(k):
            result = result * self
        return result

    def truncate(self, prec: Optional[int]) -> "ExtElement":
        return ExtElement(self.ext, tuple(a.truncate(prec) for a in self.coeffs))

    def __str__(self) -> str:
        pieces = [f"({a})@{i}" if " " in str(a) else f"{a}@{i}"
                  for i, a in enumerate(self.coeffs) if not a.is_exact_zero()]
        return " + ".join(pieces) or "0"

    @classmethod
    def random(cls, ext: EisensteinExtension, r: int, rng: random.Random,
               prec: Optional[int] = None) -> "ExtElement":
        """A random element of M_L^r (r >= 0): Σ_{i=r}^{r+n-1} a_i π^i with random integral a_i."""
        terms = [(i, ext.base.random_integral(rng, prec)) for i in range(r, r + ext.n)]
        return from_series(ext, terms)


def _reduce(ext: EisensteinExtension, poly: List[FieldElement]) -> Tuple[FieldElement, ...]:
    """Reduce Σ poly[k] X^k modulo f to degree < n."""
    n = ext.n
    poly = list(poly)
    reduction = ext.reduction()
    for k in range(len(poly) - 1, n - 1, -1):
        top = poly[k]
        if top.is_exact_zero():
            continue
        for i, r in enumerate(reduction):
            if not r.is_exact_zero():
                poly[k - n + i] = poly[k - n + i] + top * r
    zero = ext.base.zero()
    head = poly[:n]
    return tuple(head + [zero] * (n - len(head)))


def _times_pi(ext: EisensteinExtension, coeffs: Sequence[FieldElement]) -> Tuple[FieldElement, ...]:
    return _reduce(ext, [ext.base.zero()] + list(coeffs))


@lru_cache(maxsize=256)
def _pi_powers(ext: EisensteinExtension, count: int) -> Tuple[Tuple[FieldElement, ...], ...]:
    zero, one = ext.base.zero(), ext.base.one()
    current = tuple([one] + [zero] * (ext.n - 1))
    powers = [current]
    for _ in range(count - 1):
        current = _times_pi(ext, current)
        powers.append(current)
    return tuple(powers)


def from_series(ext: EisensteinExtension, terms: Sequence[Tuple[int, Union[FieldElement, int]]]) -> ExtElement:
    """
    Reduce Σ a_i π^i into the basis 1, π, ..., π^{n-1}.

    Args:
        ext: The extension
        terms: (i, a_i) pairs with distinct exponents i >= 0; ints are mapped through the base field

    Returns:
        ExtElement
    """
    exponents = [i for i, _ in terms]
    if len(set(exponents)) != len(exponents):
        raise InsepError(f"Repeated exponents in series terms: {exponents}")
    if any(i < 0 for i in exponents):
        raise InsepError("Series exponents must be >= 0")
    zero = ext.base.zero()
    if not terms:
        return ExtElement(ext, tuple([zero] * ext.n))
    powers = _pi_powers(ext, max(exponents) + 1)
    total = [zero] * ext.n
    for i, a in terms:
        if isinstance(a, int):
            a = ext.base.from_int(a)
        if a.is_exact_zero():
            continue
        for k, b in enumerate(powers[i]):
            if not b.is_exact_zero():
                total[k] = total[k] + a * b
    return ExtElement(ext, tuple(total))


def mult_matrix(ext: EisensteinExtension, alpha: ExtElement) -> List[List[FieldElement]]:
    """Matrix of x -> αx in the basis 1, π, ..., π^{n-1}; column i is α·π^i."""
    columns = [alpha.coeffs]
    for _ in range(ext.n - 1):
        columns.append(_times_pi(ext, columns[-1]))
    return [[columns[j][i] for j in range(ext.n)] for i in range(ext.n)]


def charpoly_berkowitz(matrix: List[List[FieldElement]], one: FieldElement) -> List[FieldElement]:
    """
    Coefficients [1, p_1, ..., p_n] of det(X·I - M), division free.

    Each step peels off the first row and column; the remaining block's
    characteristic polynomial is multiplied by a Toeplitz matrix built
    from a, R·C, R·A·C, ...
    """
    n = len(matrix)
    if n == 0:
        return [one]
    a = matrix[0][0]
    row = matrix[0][1:]
    column = [matrix[i][0] for i in range(1, n)]
    block = [r[1:] for r in matrix[1:]]
    items = [one, -a]
    vector = column
    for _ in range(n - 1):
        dot = one * 0
        for x, y in zip(row, vector):
            dot = dot + x * y
        items.append(-dot)
        vector = [sum((block[i][k] * vector[k] for k in range(n - 1)), one * 0) for i in range(n - 1)]
    sub = charpoly_berkowitz(block, one)
    result = []
    for i in range(n + 1):
        total = one * 0
        for j in range(min(i, n - 1) + 1):
            total = total + items[i - j] * sub[j]
        result.append(total)
    return result


def elementary_symmetric_values(ext: EisensteinExtension, alpha: ExtElement,
                                precision: Optional[int] = None,
                                require: Sequence[int] = ()) -> List[FieldElement]:
    """
    (E_1(α), ..., E_n(α)) from the characteristic polynomial of α.

    Args:
        ext: The extension
        alpha: Element of L
        precision: Truncate the multiplication matrix to this absolute precision first
        require: Degrees h whose valuation v_K(E_h(α)) must come out determinate

    Returns:
        List of base field elements, E_h(α) = (-1)^h p_h

    Raises:
        InsufficientPrecisionError: A required E_h(α) is zero to the known precision
    """
    matrix = mult_matrix(ext, alpha)
    if precision is not None:
        matrix = [[x.truncate(precision) for x in r] for r in matrix]
    charpoly = charpoly_berkowitz(matrix, ext.base.one())
    values = [charpoly[h] if h % 2 == 0 else -charpoly[h] for h in range(1, ext.n + 1)]
    for h in require:
        if not 1 <= h <= ext.n:
            raise InsepError(f"h={h} must lie in 1..{ext.n}")
        v = values[h - 1].valuation()
        if isinstance(v, Indeterminate):
            raise InsufficientPrecisionError(
                f"v_K(E_{h}(α)) is only known to be >= {v.lower_bound} at precision {precision}", v.lower_bound)
    return values


def e_h(ext: EisensteinExtension, alpha: ExtElement, h: int, precision: Optional[int] = None) -> FieldElement:
    if not 1 <= h <= ext.n:
        raise InsepError(f"h={h} must lie in 1..{ext.n}")
    if h == 1:
        matrix = mult_matrix(ext, alpha)
        total = ext.base.zero()
        for i in range(ext.n):
            total = total + matrix[i][i].truncate(precision)
        return total
    return elementary_symmetric_values(ext, alpha, precision)[h - 1]


def norm(ext: EisensteinExtension, alpha: ExtElement, precision: Optional[int] = None) -> FieldElement:
    return e_h(ext, alpha, ext.n, precision)


def trace(ext: EisensteinExtension, alpha: ExtElement, precision: Optional[int] = None) -> FieldElement:
    return e_h(ext, alpha, 1, precision)


def min_poly_of(ext: EisensteinExtension, alpha: ExtElement,
                precision: Optional[int] = None) -> EisensteinExtension:
    """The Eisenstein minimum polynomial of a uniformizer α of L."""
    v = alpha.v_L()
    if isinstance(v, Indeterminate):
        raise InsufficientPrecisionError("v_L(α) is not known at this precision", v.lower_bound)
    if v != 1:
        raise NotUniformizerError(f"α has v_L = {v}, not a uniformizer")
    return EisensteinExtension(ext.base, tuple(elementary_symmetric_values(ext, alpha, precision)))


def crude_lower_bound(n: int, h: int, r: int) -> int:
    """⌈hr/n⌉, the containment exponent that ignores ramification data."""
    return -((-h * r) // n)
