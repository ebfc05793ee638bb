"""
Parsing
Text formats used by the CLI: base field specs ("laurent:p=2,d=1",
"padic:p=3"), defining polynomials ("X^8 + t*X^3 + t*X^2 + t") and
element term lists ("1@1, (g+1)@2").
"""

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .exceptions import PolynomialParseError
from .local_fields import (DEFAULT_PRECISION, BaseField, EisensteinExtension, FieldElement,
                           LaurentField, PadicField)
from .residue_field import get_residue_field

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<op>\*\*|[-+*^()@,])|(?P<name>[A-Za-z_]\w*))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if not match:
            start = position + len(text[position:]) - len(text[position:].lstrip())
            raise PolynomialParseError("Unexpected character", text[start], start)
        kind = match.lastgroup
        start = match.start(kind)
        value = match.group(kind)
        if value == "**":
            value = "^"
        tokens.append(Token(kind, value, start))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


Polynomial = Dict[int, FieldElement]


class _Parser:
    """
    Recursive descent over

        expr   := term (('+' | '-') term)*
        term   := factor ('*' factor)*
        factor := ('-' | '+') factor | atom ('^' INT)?
        atom   := INT | 't' | 'g' | 'X' | '(' expr ')'

    Values are polynomials in X with base field coefficients.
    """

    def __init__(self, base: BaseField, tokens: List[Token], allow_x: bool = True):
        self.base = base
        self.tokens = tokens
        self.index = 0
        self.allow_x = allow_x

    def peek(self) -> Token:
        return self.tokens[self.index]

    def take(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, text: str) -> Token:
        token = self.take()
        if token.text != text:
            raise PolynomialParseError(f"Expected {text!r}", token.text, token.position)
        return token

    def constant(self, value: FieldElement) -> Polynomial:
        return {} if value.is_exact_zero() else {0: value}

    def add(self, a: Polynomial, b: Polynomial, sign: int = 1) -> Polynomial:
        out = dict(a)
        for k, v in b.items():
            v = v if sign > 0 else -v
            out[k] = out[k] + v if k in out else v
        return {k: v for k, v in out.items() if not v.is_exact_zero()}

    def mul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        out: Polynomial = {}
        for i, x in a.items():
            for j, y in b.items():
                out[i + j] = out[i + j] + x * y if i + j in out else x * y
        return {k: v for k, v in out.items() if not v.is_exact_zero()}

    def parse(self) -> Polynomial:
        value = self.expr()
        token = self.peek()
        if token.kind != "end":
            raise PolynomialParseError("Unexpected trailing input", token.text, token.position)
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while self.peek().text in ("+", "-"):
            sign = 1 if self.take().text == "+" else -1
            value = self.add(value, self.term(), sign)
        return value

    def term(self) -> Polynomial:
        value = self.factor()
        while self.peek().text == "*":
            self.take()
            value = self.mul(value, self.factor())
        return value

    def factor(self) -> Polynomial:
        token = self.peek()
        if token.text in ("-", "+"):
            self.take()
            inner = self.factor()
            return inner if token.text == "+" else {k: -v for k, v in inner.items()}
        value = self.atom()
        if self.peek().text == "^":
            self.take()
            exponent = self.take()
            if exponent.kind != "int":
                raise PolynomialParseError("Exponent must be a non-negative integer", exponent.text, exponent.position)
            result = self.constant(self.base.one())
            for _ in range(int(exponent.text)):
                result = self.mul(result, value)
            value = result
        return value

    def atom(self) -> Polynomial:
        token = self.take()
        if token.kind == "int":
            return self.constant(self.base.from_int(int(token.text)))
        if token.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        if token.text == "X" and self.allow_x:
            return {1: self.base.one()}
        if token.text == "t" and isinstance(self.base, LaurentField):
            return self.constant(self.base.uniformizer())
        if token.text == "g" and isinstance(self.base, LaurentField) and self.base.residue.degree > 1:
            return self.constant(self.base.from_residue(self.base.residue.generator()))
        raise PolynomialParseError(f"Unexpected token for {self.base.name}", token.text, token.position)


def parse_base(spec: str, precision: int = DEFAULT_PRECISION) -> BaseField:
    """
    Parse "laurent:p=2,d=1[,modulus=10011]" or "padic:p=3".

    The modulus is given highest degree first, as a digit string or with
    '/' between coefficients.
    """
    kind, _, rest = spec.strip().partition(":")
    params: Dict[str, str] = {}
    for item in filter(None, (x.strip() for x in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise PolynomialParseError("Expected key=value in field spec", item, spec.find(item))
        params[key.strip()] = value.strip()
    try:
        p = int(params.get("p", ""))
    except ValueError:
        raise PolynomialParseError("Field spec needs an integer p", params.get("p", ""), spec.find("p="))
    try:
        if kind == "laurent":
            degree = int(params.get("d", "1"))
            modulus: Optional[Tuple[int, ...]] = None
            if "modulus" in params:
                text = params["modulus"]
                digits = text.split("/") if "/" in text else list(text)
                modulus = tuple(int(x) for x in digits)
            return LaurentField(get_residue_field(p, degree, modulus), precision)
        if kind == "padic":
            return PadicField(p, precision)
    except ValueError as e:
        raise PolynomialParseError(str(e), spec, 0)
    raise PolynomialParseError("Unknown field kind (expected laurent or padic)", kind, 0)


def parse_polynomial(base: BaseField, text: str) -> List[FieldElement]:
    """Coefficients a_0..a_n of a polynomial in X, lowest degree first."""
    poly = _Parser(base, tokenize(text)).parse()
    if not poly:
        raise PolynomialParseError("Polynomial is zero", text, 0)
    degree = max(poly)
    return [poly.get(k, base.zero()) for k in range(degree + 1)]


def parse_extension(base: BaseField, text: str) -> EisensteinExtension:
    return EisensteinExtension.from_polynomial(base, parse_polynomial(base, text))


def parse_scalar(base: BaseField, text: str) -> FieldElement:
    """A base field element such as "t^2 + 1" or "(g+1)*t"."""
    poly = _Parser(base, tokenize(text), allow_x=False).parse()
    return poly.get(0, base.zero())


def _split_top_level(text: str) -> List[Tuple[str, int]]:
    pieces = []
    depth = 0
    start = 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in ",+" and depth == 0:
            pieces.append((text[start:k], start))
            start = k + 1
    pieces.append((text[start:], start))
    return [(piece, offset) for piece, offset in pieces if piece.strip()]


def parse_element_terms(base: BaseField, text: str) -> List[Tuple[int, FieldElement]]:
    """
    Parse "a@i" terms separated by commas or top-level '+', e.g. "1@1 + (g+1)@2".

    Compound coefficients need parentheses.
    """
    terms: List[Tuple[int, FieldElement]] = []
    seen = set()
    for piece, offset in _split_top_level(text):
        coeff_text, at, exp_text = piece.rpartition("@")
        if not at:
            raise PolynomialParseError("Expected a term like a@i", piece.strip(), offset)
        exp_text = exp_text.strip()
        if not exp_text.isdigit():
            raise PolynomialParseError("Exponent must be a non-negative integer", exp_text, offset + len(coeff_text) + 1)
        exponent = int(exp_text)
        if exponent in seen:
            raise PolynomialParseError("Repeated exponent", exp_text, offset + len(coeff_text) + 1)
        seen.add(exponent)
        terms.append((exponent, parse_scalar(base, coeff_text.strip() or "1")))
    return terms
