"""
Partitions
Integer partitions as multisets with the scaling and repetition operations
used throughout the toolkit, plus constrained lazy enumeration.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Optional, Tuple

from .exceptions import PolynomialParseError


@dataclass(frozen=True, order=True)
class Partition:
    """
    A finite multiset of positive integers.

    Parts are stored weakly decreasing, so two partitions are equal exactly
    when they are equal as multisets.
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(sorted((int(x) for x in self.parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"Partition parts must be positive: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the "{6,2,1}" text form (any order of parts is accepted)."""
        start = len(text) - len(text.lstrip())
        body = text.strip()
        if not body.startswith("{"):
            raise PolynomialParseError("Expected '{' to open a partition", body[:1], start)
        if len(body) < 2 or not body.endswith("}"):
            raise PolynomialParseError("Expected '}' to close a partition", body[-1:], start + max(len(body) - 1, 0))
        inner = body[1:-1]
        if not inner.strip():
            return cls(())
        parts = []
        offset = start + 1
        for piece in inner.split(","):
            token = piece.strip()
            if not (token.isascii() and token.isdigit()) or int(token) < 1:
                raise PolynomialParseError("Expected a positive integer part", token,
                                           offset + len(piece) - len(piece.lstrip()))
            parts.append(int(token))
            offset += len(piece) + 1
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.parts) + "}"

    def scale(self, k: int) -> "Partition":
        """k·λ: every part multiplied by k."""
        if k < 1:
            raise ValueError(f"Scale factor must be >= 1, got {k}")
        return Partition(tuple(k * x for x in self.parts))

    def repeat(self, k: int) -> "Partition":
        """k*λ: the multiset sum of k copies of λ."""
        if k < 1:
            raise ValueError(f"Repetition count must be >= 1, got {k}")
        return Partition(self.parts * k)

    def union(self, other: "Partition") -> "Partition":
        return Partition(self.parts + other.parts)

    def without(self, other: "Partition") -> "Partition":
        """Multiset difference; `other` must be a sub-multiset."""
        remaining = Counter(self.parts)
        remaining.subtract(other.parts)
        if any(count < 0 for count in remaining.values()):
            raise ValueError(f"{other} is not contained in {self}")
        return Partition(tuple(remaining.elements()))

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    def max_part(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Partition":
        """λ': the column lengths of the Young diagram of λ."""
        return Partition(tuple(sum(1 for x in self.parts if x >= k) for k in range(1, self.max_part() + 1)))

    def is_repetition_of(self, k: int) -> Optional["Partition"]:
        """Return μ' with self == k*μ' if it exists, else None."""
        counts = self.multiplicities()
        if any(count % k for count in counts.values()):
            return None
        return Partition(tuple(x for x, count in counts.items() for _ in range(count // k)))

    def is_scaling_of(self, k: int) -> Optional["Partition"]:
        """Return λ' with self == k·λ' if it exists, else None."""
        if any(x % k for x in self.parts):
            return None
        return Partition(tuple(x // k for x in self.parts))


def partition_sum(partition: Partition) -> int:
    return partition.weight


def scale(k: int, partition: Partition) -> Partition:
    return partition.scale(k)


def repeat(k: int, partition: Partition) -> Partition:
    return partition.repeat(k)


def _descend(remaining: int, largest: int, smallest: int, slots: Optional[int]) -> Iterator[Tuple[int, ...]]:
    if remaining == 0:
        if not slots:
            yield ()
        return
    if slots == 0:
        return
    rest = None if slots is None else slots - 1
    for first in range(min(largest, remaining), smallest - 1, -1):
        if rest is not None and not (smallest * rest <= remaining - first <= first * rest):
            continue
        for tail in _descend(remaining - first, first, smallest, rest):
            yield (first,) + tail


def enumerate_partitions(
    w: int,
    min_part: Optional[int] = None,
    max_part: Optional[int] = None,
    num_parts: Optional[int] = None,
) -> Iterator[Partition]:
    """
    Lazily yield the partitions of w satisfying the given constraints.

    Partitions come out in lexicographically decreasing order of their
    weakly decreasing part sequences, e.g. {3,1} before {2,2}.

    Args:
        w: The integer being partitioned
        min_part: Smallest allowed part (default 1)
        max_part: Largest allowed part (default w)
        num_parts: Exact number of parts, or None for any

    Returns:
        Generator of Partition
    """
    if w < 0:
        return
    smallest = max(1, min_part or 1)
    largest = w if max_part is None else min(max_part, w)
    for parts in _descend(w, largest, smallest, num_parts):
        yield Partition(parts)


def partitions_up_to(max_weight: int, **constraints) -> Iterable[Partition]:
    """All constrained partitions of 1..max_weight, by increasing weight."""
    for w in range(1, max_weight + 1):
        yield from enumerate_partitions(w, **constraints)


@lru_cache(maxsize=None)
def partition_count(w: int) -> int:
    """p(w) by Euler's pentagonal number recurrence."""
    if w < 0:
        return 0
    if w == 0:
        return 1
    total = 0
    k = 1
    while True:
        first = k * (3 * k - 1) // 2
        if first > w:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(w - first)
        second = k * (3 * k + 1) // 2
        if second <= w:
            total += sign * partition_count(w - second)
        k += 1
    return total
