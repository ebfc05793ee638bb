"""
Kulikauskas-Remmel Coefficients
Cycle digraphs, (λ,μ)-tilings and the signed tiling counts d_λμ that
expand monomial symmetric polynomials in elementary ones.

A tiled cycle of length L is encoded as a word of length L over {0,1,2,3}:
bit 0 marks the first vertex of an S-path, bit 1 the first vertex of a
T-path. Isomorphism classes of tiled cycles are necklaces (words up to
rotation), and a tiled cycle digraph is a multiset of necklaces.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from math import comb, factorial, gcd
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from sympy.utilities.iterables import multiset_permutations

from .exceptions import DimensionMismatchError
from .partitions import Partition, enumerate_partitions

Word = Tuple[int, ...]
Block = Tuple[int, Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class CycleDigraph:
    """Isomorphism class of a disjoint union of directed cycles."""
    cycle_lengths: Partition

    @property
    def order(self) -> int:
        """|V(Γ)|"""
        return self.cycle_lengths.weight

    @property
    def cycle_count(self) -> int:
        return self.cycle_lengths.length

    @property
    def sign(self) -> int:
        return -1 if (self.order - self.cycle_count) % 2 else 1

    def __str__(self) -> str:
        return "C" + str(self.cycle_lengths)


def _cut_gaps(length: int, cuts: FrozenSet[int]) -> Tuple[int, ...]:
    ordered = sorted(cuts)
    gaps = [b - a for a, b in zip(ordered, ordered[1:])]
    gaps.append(length - ordered[-1] + ordered[0])
    return tuple(gaps)


@dataclass(frozen=True)
class TilingPair:
    """
    A (λ,μ)-tiling of a cycle digraph.

    s_cuts[i] and t_cuts[i] hold the first vertices of the S-paths and
    T-paths on cycle i (vertices numbered 0..L-1 along the cycle), with
    cycles listed in the order of digraph.cycle_lengths.
    """
    digraph: CycleDigraph
    s_cuts: Tuple[FrozenSet[int], ...]
    t_cuts: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        lengths = self.digraph.cycle_lengths.parts
        if len(self.s_cuts) != len(lengths) or len(self.t_cuts) != len(lengths):
            raise DimensionMismatchError("Tiling must give cut sets for every cycle")
        for length, s, t in zip(lengths, self.s_cuts, self.t_cuts):
            if not s or not t or any(not 0 <= v < length for v in s | t):
                raise DimensionMismatchError(f"Bad cut sets {set(s)}, {set(t)} on a {length}-cycle")

    @property
    def lam(self) -> Partition:
        return Partition(tuple(g for length, cuts in zip(self.digraph.cycle_lengths.parts, self.s_cuts)
                               for g in _cut_gaps(length, cuts)))

    @property
    def mu(self) -> Partition:
        return Partition(tuple(g for length, cuts in zip(self.digraph.cycle_lengths.parts, self.t_cuts)
                               for g in _cut_gaps(length, cuts)))

    def words(self) -> List[Word]:
        result = []
        for length, s, t in zip(self.digraph.cycle_lengths.parts, self.s_cuts, self.t_cuts):
            result.append(tuple((v in s) + 2 * (v in t) for v in range(length)))
        return result

    @property
    def admissible(self) -> bool:
        return aut_order(self) == 1


def _rotations(word: Word) -> Iterator[Word]:
    for k in range(len(word)):
        yield word[k:] + word[:k]


def _canonical(word: Word) -> Word:
    return min(_rotations(word))


def _stabilizer_order(word: Word) -> int:
    return sum(1 for rotated in _rotations(word) if rotated == word)


def aut_order(tp: TilingPair) -> int:
    """
    Order of Aut(Γ,S,T).

    Automorphisms rotate each cycle and permute cycles carrying the same
    tiled necklace, so the group is a product of wreath products.
    """
    classes = Counter(_canonical(word) for word in tp.words())
    order = 1
    for necklace, count in classes.items():
        order *= _stabilizer_order(necklace) ** count * factorial(count)
    return order


def _word_from_cuts(length: int, s_cuts: FrozenSet[int], t_cuts: FrozenSet[int]) -> Word:
    return tuple((v in s_cuts) + 2 * (v in t_cuts) for v in range(length))


def _cut_sets(length: int, gaps: Partition, rooted: bool) -> List[FrozenSet[int]]:
    """Cut sets on an L-cycle whose gap multiset is `gaps`; rooted sets contain vertex 0."""
    found = set()
    for order in multiset_permutations(list(gaps.parts)):
        cuts = [0]
        for g in order[:-1]:
            cuts.append(cuts[-1] + g)
        offsets = [0] if rooted else range(length)
        for offset in offsets:
            found.add(frozenset((c + offset) % length for c in cuts))
    return sorted(found, key=sorted)


@lru_cache(maxsize=None)
def _necklaces(length: int, alpha: Partition, beta: Partition, primitive_only: bool) -> Tuple[Word, ...]:
    """Canonical words of tiled L-cycles whose S-gaps are alpha and T-gaps are beta."""
    found = set()
    t_sets = _cut_sets(length, beta, rooted=False)
    for s in _cut_sets(length, alpha, rooted=True):
        for t in t_sets:
            word = _canonical(_word_from_cuts(length, s, t))
            if primitive_only and _stabilizer_order(word) != 1:
                continue
            found.add(word)
    return tuple(sorted(found))


def _sub_multisets(counts: Tuple[Tuple[int, int], ...], target: int) -> Iterator[Tuple[Partition, Tuple[Tuple[int, int], ...]]]:
    """Sub-multisets of `counts` (part, multiplicity) summing to target, with the remainder."""
    if target == 0:
        yield Partition(()), counts
        return
    if not counts:
        return
    (part, available), rest = counts[0], counts[1:]
    for used in range(min(available, target // part), -1, -1):
        for chosen, remainder in _sub_multisets(rest, target - used * part):
            left = ((part, available - used),) if available > used else ()
            yield Partition((part,) * used + chosen.parts), left + remainder


def _distributions(lengths: Tuple[int, ...], parts: Partition) -> Iterator[Tuple[Partition, ...]]:
    """Ways to split `parts` into per-cycle sub-multisets with the given sums."""
    def walk(index: int, counts: Tuple[Tuple[int, int], ...]):
        if index == len(lengths):
            if not counts:
                yield ()
            return
        for chosen, remainder in _sub_multisets(counts, lengths[index]):
            for tail in walk(index + 1, remainder):
                yield (chosen,) + tail

    counts = tuple(sorted(parts.multiplicities().items(), reverse=True))
    yield from walk(0, counts)


@lru_cache(maxsize=None)
def _block_multisets(digraph: CycleDigraph, lam: Partition, mu: Partition) -> Tuple[Tuple[Block, ...], ...]:
    """Distinct multisets of (cycle length, S-gaps, T-gaps) blocks realizing (λ,μ) on Γ."""
    lengths = digraph.cycle_lengths.parts
    s_splits = list(_distributions(lengths, lam))
    if not s_splits:
        return ()
    t_splits = list(_distributions(lengths, mu))
    found = set()
    for s_split, t_split in product(s_splits, t_splits):
        blocks = tuple(sorted((length, a.parts, b.parts) for length, a, b in zip(lengths, s_split, t_split)))
        found.add(blocks)
    return tuple(sorted(found))


def _check_dimensions(digraph: CycleDigraph, lam: Partition, mu: Partition):
    if lam.weight != mu.weight or lam.weight != digraph.order:
        raise DimensionMismatchError(
            f"Σ(λ)={lam.weight}, Σ(μ)={mu.weight} and |V(Γ)|={digraph.order} must agree"
        )


def _count_classes(digraph: CycleDigraph, lam: Partition, mu: Partition, admissible_only: bool) -> int:
    total = 0
    for blocks in _block_multisets(digraph, lam, mu):
        term = 1
        for (length, a, b), k in Counter(blocks).items():
            available = len(_necklaces(length, Partition(a), Partition(b), admissible_only))
            # admissible tilings need pairwise distinct necklaces on equal cycles
            term *= comb(available, k) if admissible_only else comb(available + k - 1, k)
            if term == 0:
                break
        total += term
    return total


@lru_cache(maxsize=None)
def eta(digraph: CycleDigraph, lam: Partition, mu: Partition) -> int:
    """
    η_λμ(Γ): number of isomorphism classes of admissible (λ,μ)-tilings of Γ.

    Args:
        digraph: The cycle digraph Γ
        lam: Partition realized by the S-paths
        mu: Partition realized by the T-paths

    Returns:
        Non-negative count
    """
    _check_dimensions(digraph, lam, mu)
    return _count_classes(digraph, lam, mu, admissible_only=True)


def count_tiling_classes(digraph: CycleDigraph, lam: Partition, mu: Partition) -> int:
    """Number of isomorphism classes of all (λ,μ)-tilings of Γ, admissible or not."""
    _check_dimensions(digraph, lam, mu)
    return _count_classes(digraph, lam, mu, admissible_only=False)


def _cuts_from_word(word: Word) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    return (frozenset(v for v, x in enumerate(word) if x & 1),
            frozenset(v for v, x in enumerate(word) if x & 2))


def tiling_classes(digraph: CycleDigraph, lam: Partition, mu: Partition,
                   admissible_only: bool = True) -> List[TilingPair]:
    """One representative TilingPair per isomorphism class."""
    _check_dimensions(digraph, lam, mu)
    result = []
    for blocks in _block_multisets(digraph, lam, mu):
        grouped = Counter(blocks)
        choices = []
        for (length, a, b), k in sorted(grouped.items()):
            pool = _necklaces(length, Partition(a), Partition(b), admissible_only)
            picker = combinations if admissible_only else combinations_with_replacement
            choices.append(list(picker(pool, k)))
        for picked in product(*choices):
            words = sorted((w for group in picked for w in group), key=lambda w: (-len(w), w))
            cuts = [_cuts_from_word(w) for w in words]
            result.append(TilingPair(
                digraph=digraph,
                s_cuts=tuple(s for s, _ in cuts),
                t_cuts=tuple(t for _, t in cuts),
            ))
    return result


def cycle_digraphs(w: int) -> Iterator[CycleDigraph]:
    for lengths in enumerate_partitions(w):
        yield CycleDigraph(lengths)


def d_terms(lam: Partition, mu: Partition) -> List[Tuple[CycleDigraph, int, int]]:
    """Per-digraph contributions (Γ, sgn(Γ), η_λμ(Γ)) with η != 0."""
    if lam.weight != mu.weight or lam.weight < 1:
        raise DimensionMismatchError(f"Σ(λ)={lam.weight} and Σ(μ)={mu.weight} must agree and be >= 1")
    terms = []
    for digraph in cycle_digraphs(lam.weight):
        count = eta(digraph, lam, mu)
        if count:
            terms.append((digraph, digraph.sign, count))
    return terms


@lru_cache(maxsize=None)
def d_coefficient(lam: Partition, mu: Partition) -> int:
    """
    d_λμ = (-1)^{|λ|+|μ|} Σ_Γ sgn(Γ) η_λμ(Γ).

    This is the coefficient of e_{λ1}···e_{λk} in the expansion of m_μ.
    """
    total = sum(sign * count for _, sign, count in d_terms(lam, mu))
    if (lam.length + mu.length) % 2:
        total = -total
    logging.debug(f"d[{lam},{mu}] = {total}")
    return total


def _equal_parts(partition: Partition) -> Optional[Tuple[int, int]]:
    """(part, copies) when all parts coincide."""
    counts = partition.multiplicities()
    if len(counts) != 1:
        return None
    (part, copies), = counts.items()
    return part, copies


def _one_odd_part(partition: Partition) -> Optional[Tuple[int, int, int]]:
    """(b, m, c) when the partition is m copies of b plus one copy of c != b."""
    counts = partition.multiplicities()
    if len(counts) != 2:
        return None
    singles = [x for x, k in counts.items() if k == 1]
    for c in sorted(singles):
        b = next(x for x in counts if x != c)
        return b, counts[b], c
    return None


def d_closed_form(lam: Partition, mu: Partition) -> Optional[int]:
    """
    Closed-form d_λμ where one applies, otherwise None.

    Covers λ = {w} against μ = m copies of b plus one c != b, and
    λ, μ each made of equal parts. Both are also tried with λ and μ swapped.
    """
    if lam.weight != mu.weight or lam.weight < 1:
        return None
    w = lam.weight
    for first, second in ((lam, mu), (mu, lam)):
        if first.length == 1:
            shape = _one_odd_part(second)
            if shape is not None:
                _, m, _ = shape
                return (-1) ** (w + m + 1) * w
    a_shape, b_shape = _equal_parts(lam), _equal_parts(mu)
    if a_shape and b_shape:
        (a, ell), (b, m) = a_shape, b_shape
        u, v = gcd(a, b), gcd(ell, m)
        return (-1) ** (w - v + ell + m) * comb(u, v)
    return None


def _single_tiling(length: int, gaps: Partition) -> Optional[Word]:
    """The unique rotation class of cut sets with these gaps, if unique and asymmetric."""
    words = {_canonical(tuple(int(v in cuts) for v in range(length)))
             for cuts in _cut_sets(length, gaps, rooted=True)}
    if len(words) != 1:
        return None
    word, = words
    return word if _stabilizer_order(word) == 1 else None


def eta_closed_form(digraph: CycleDigraph, lam: Partition, mu: Partition) -> Optional[int]:
    """
    η_λμ(Γ) for a single cycle where a closed form is known, otherwise None.

    - both tilings unique up to rotation with trivial symmetry: η = w
    - λ = ℓ copies of a, μ = m copies of b plus one c != b: η = a
    - λ = ℓ copies of a, μ = m copies of b: η = gcd(a,b) if gcd(ℓ,m) = 1, else 0
    """
    _check_dimensions(digraph, lam, mu)
    if digraph.cycle_count != 1:
        return None
    w = digraph.order
    if _single_tiling(w, lam) and _single_tiling(w, mu):
        return w
    for first, second in ((lam, mu), (mu, lam)):
        shape = _equal_parts(first)
        if shape and _one_odd_part(second):
            return shape[0]
    a_shape, b_shape = _equal_parts(lam), _equal_parts(mu)
    if a_shape and b_shape:
        (a, ell), (b, m) = a_shape, b_shape
        return gcd(a, b) if gcd(ell, m) == 1 else 0
    return None


def format_terms(lam: Partition, mu: Partition) -> List[Dict[str, object]]:
    """d_terms as plain dicts for reports."""
    return [
        {"digraph": str(digraph), "sign": sign, "eta": count}
        for digraph, sign, count in d_terms(lam, mu)
    ]
