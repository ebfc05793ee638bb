"""
Residue Fields
Finite fields F_q = F_p[g]/(modulus) with table-driven arithmetic.

An element is an int 0..q-1 whose base-p digits are its coefficients
in 1, g, g^2, ... (least significant first), so the prime field F_p is
embedded as 0..p-1.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem, gf_strip

# moduli as coefficient lists, highest degree first
BUILTIN_MODULI: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 5): (1, 0, 0, 1, 0, 1),
    (2, 6): (1, 0, 0, 0, 0, 1, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 0, 2, 1),
    (5, 2): (1, 4, 2),
    (7, 2): (1, 6, 3),
}

MAX_TABLE_ORDER = 1024


def find_irreducible(p: int, degree: int) -> Tuple[int, ...]:
    """First monic irreducible of the given degree, in lexicographic order of coefficients."""
    for tail in product(range(p), repeat=degree):
        candidate = [1] + list(tail)
        if candidate[-1] and gf_irreducible_p(candidate, p, ZZ):
            return tuple(candidate)
    raise ValueError(f"No irreducible polynomial of degree {degree} over F_{p}")


class ResidueField:
    """
    The finite field F_q, q = p^degree.

    Addition and multiplication go through precomputed q x q tables.
    """

    generator_name = "g"

    def __init__(self, p: int, degree: int = 1, modulus: Optional[Sequence[int]] = None):
        if not isprime(p):
            raise ValueError(f"Residue characteristic must be prime, got {p}")
        if degree < 1:
            raise ValueError(f"Residue degree must be >= 1, got {degree}")
        self.p = p
        self.degree = degree
        self.q = p ** degree
        if self.q > MAX_TABLE_ORDER:
            raise ValueError(f"F_{self.q} is too large for table arithmetic (limit {MAX_TABLE_ORDER})")

        if modulus is None:
            modulus = BUILTIN_MODULI.get((p, degree)) if degree > 1 else (1, 0)
            if modulus is None:
                modulus = find_irreducible(p, degree)
                logging.info(f"Using modulus {modulus} for F_{self.q}")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != degree + 1 or modulus[0] != 1:
            raise ValueError(f"Modulus must be monic of degree {degree}: {modulus}")
        if degree > 1 and not gf_irreducible_p(list(modulus), p, ZZ):
            raise ValueError(f"Modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus

        self._add = [[self._encode([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])
                      for b in range(self.q)] for a in range(self.q)]
        self._mul = [[self._multiply(a, b) for b in range(self.q)] for a in range(self.q)]
        self._neg = [self._encode([(-x) % p for x in self.digits(a)]) for a in range(self.q)]
        self._inv = [0] * self.q
        for a in range(1, self.q):
            self._inv[a] = self._mul[a].index(1)

    def digits(self, a: int) -> List[int]:
        """Coefficients of a in 1, g, ..., g^{d-1}."""
        out = []
        for _ in range(self.degree):
            a, digit = divmod(a, self.p)
            out.append(digit)
        return out

    def _encode(self, digits: Sequence[int]) -> int:
        value = 0
        for digit in reversed(list(digits)):
            value = value * self.p + digit
        return value

    def _multiply(self, a: int, b: int) -> int:
        fa = gf_strip(list(reversed(self.digits(a))))
        fb = gf_strip(list(reversed(self.digits(b))))
        reduced = gf_rem(gf_mul(fa, fb, self.p, ZZ), list(self.modulus), self.p, ZZ)
        return self._encode(reversed([int(c) for c in reduced]))

    def __eq__(self, other) -> bool:
        return isinstance(other, ResidueField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"ResidueField(p={self.p}, degree={self.degree}, modulus={self.modulus})"

    @property
    def name(self) -> str:
        return f"F_{self.q}"

    def elements(self) -> range:
        return range(self.q)

    def from_int(self, k: int) -> int:
        return k % self.p

    def generator(self) -> int:
        return self.p if self.degree > 1 else 0

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        return self._inv[a]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = 1
        for _ in range(k):
            result = self._mul[result][a]
        return result

    def in_prime_field(self, a: int) -> bool:
        return a < self.p

    def format(self, a: int) -> str:
        """Text form such as "g^2+g+1" or "2*g"."""
        if a == 0:
            return "0"
        pieces = []
        for k, digit in reversed(list(enumerate(self.digits(a)))):
            if not digit:
                continue
            if k == 0:
                pieces.append(str(digit))
                continue
            power = self.generator_name if k == 1 else f"{self.generator_name}^{k}"
            pieces.append(power if digit == 1 else f"{digit}*{power}")
        return "+".join(pieces)


@lru_cache(maxsize=None)
def get_residue_field(p: int, degree: int = 1, modulus: Optional[Tuple[int, ...]] = None) -> ResidueField:
    """Shared ResidueField instance for (p, degree, modulus)."""
    return ResidueField(p, degree, modulus)
