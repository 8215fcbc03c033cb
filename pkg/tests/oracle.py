"""Brute-force reference computations for the test suite.

Everything here works on plain coordinate tuples and bitmasks and imports
nothing from oinftyideals, so that it can referee the package.
"""
import itertools
from typing import Any, Callable, Dict, Iterator, List, Sequence, Set, Tuple

Coords = Tuple[int, ...]


class WindowTooSmall(Exception):
    """Raised when a bounded computation would leave its window."""


def add(a: Coords, b: Coords, moduli: Sequence[int]) -> Coords:
    """Adds coordinatewise, reducing where the modulus is nonzero."""
    return tuple((x + y) % n if n else x + y for x, y, n in zip(a, b, moduli))


def neg(a: Coords, moduli: Sequence[int]) -> Coords:
    """Negates coordinatewise."""
    return tuple((-x) % n if n else -x for x, n in zip(a, moduli))


class WordEnumerator:
    """Every word over an alphabet of weights, up to a length."""

    def __init__(self, alphabet: Sequence[Coords], moduli: Sequence[int]) -> None:
        """Inits the enumerator."""
        self.alphabet = list(alphabet)
        self.moduli = list(moduli)

    def words(self, max_length: int) -> Iterator[Tuple[int, ...]]:
        """Yields each word, as a tuple of letter positions, exactly once."""
        for length in range(max_length + 1):
            yield from itertools.product(range(len(self.alphabet)), repeat=length)

    def word_sum(self, word: Tuple[int, ...]) -> Coords:
        """Returns the sum of the letters of a word."""
        total: Coords = tuple(0 for _ in self.moduli)
        for letter in word:
            total = add(total, self.alphabet[letter], self.moduli)
        return total

    def sums(self, max_length: int) -> Set[Coords]:
        """Returns the sums of all words up to max_length."""
        return {self.word_sum(word) for word in self.words(max_length)}


class FiniteGroup:
    """A finite product of cyclic groups with subsets as bitmasks."""

    def __init__(self, moduli: Sequence[int]) -> None:
        """Inits the group."""
        self.moduli = tuple(moduli)
        self.elements: List[Coords] = list(itertools.product(*(range(n) for n in moduli)))
        self.index: Dict[Coords, int] = {e: i for i, e in enumerate(self.elements)}
        self.full = (1 << len(self.elements)) - 1

    def mask(self, members: Sequence[Coords]) -> int:
        """Returns the bitmask of a collection of elements."""
        bits = 0
        for e in members:
            bits |= 1 << self.index[tuple(e)]
        return bits

    def members(self, bits: int) -> Set[Coords]:
        """Returns the elements of a bitmask."""
        return {e for i, e in enumerate(self.elements) if bits >> i & 1}

    def translate(self, bits: int, w: Coords) -> int:
        """Returns the bitmask of ``bits + w``."""
        return self.mask([add(e, w, self.moduli) for e in self.members(bits)])

    def subsets(self) -> Iterator[int]:
        """Yields every subset."""
        yield from range(self.full + 1)


class WeightSequence:
    """A weight sequence given by a prefix and a repeating tail."""

    def __init__(self, prefix: Sequence[Coords], tail: Sequence[Coords]) -> None:
        """Inits the sequence."""
        self.prefix = [tuple(w) for w in prefix]
        self.tail = [tuple(w) for w in tail]

    def weight(self, i: int) -> Coords:
        """Returns the weight at index i >= 1."""
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.tail[(i - len(self.prefix) - 1) % len(self.tail)]

    def period_end(self) -> int:
        """Returns an index past which every index repeats an earlier one."""
        return len(self.prefix) + len(self.tail)

    def letters(self, first: int, last: int) -> List[Coords]:
        """Returns the weights at indices first..last."""
        return [self.weight(i) for i in range(first, last + 1)]


def oracle_sg(group: FiniteGroup, seq: WeightSequence) -> int:
    """Returns the word sums, growing words one letter at a time until stable."""
    letters = seq.letters(1, seq.period_end())
    reached = group.mask([tuple(0 for _ in group.moduli)])
    while True:
        step = reached
        for w in letters:
            step |= group.translate(reached, w)
        if step == reached:
            return reached
        reached = step


def oracle_invariant_sets(group: FiniteGroup, seq: WeightSequence) -> List[int]:
    """Returns every subset X with ``X + w_i <= X`` for all indices i."""
    letters = seq.letters(1, seq.period_end())
    return [
        x
        for x in group.subsets()
        if all(group.translate(x, w) & ~x == 0 for w in letters)
    ]


def oracle_h_set(group: FiniteGroup, seq: WeightSequence, x: int) -> int:
    """Returns H_X from the definition, on a finite group.

    The limsup of the translates is the union over one tail period, since
    those indices recur forever.
    """
    reached = 0
    for w in seq.letters(1, seq.period_end()):
        reached |= group.translate(x, w)
    limsup = 0
    for w in seq.letters(len(seq.prefix) + 1, seq.period_end()):
        limsup |= group.translate(x, w)
    return (x & ~reached) | limsup


def oracle_x_n(group: FiniteGroup, seq: WeightSequence, x: int, xinf: int, n: int) -> int:
    """Returns ``Xinf | union of (X + w_i) over i > n``."""
    result = xinf
    for w in seq.letters(n + 1, max(n, len(seq.prefix)) + len(seq.tail)):
        result |= group.translate(x, w)
    return result


def oracle_pairs(group: FiniteGroup, seq: WeightSequence) -> List[Tuple[int, int]]:
    """Returns all (X, S) with X invariant and ``H_X <= S <= X``, by filtering."""
    pairs = []
    for x in oracle_invariant_sets(group, seq):
        h = oracle_h_set(group, seq, x)
        for s in group.subsets():
            if h & ~s == 0 and s & ~x == 0:
                pairs.append((x, s))
    return pairs


def _maximal(items: Sequence[Any], within: Callable[[Any, Any], bool]) -> List[Any]:
    """Returns the items not strictly inside another item."""
    return [a for a in items if not any(a != b and within(a, b) for b in items)]


def oracle_prime(x: int, sets: Sequence[int]) -> bool:
    """Returns True when X inside a union of two sets lies inside one of them.

    A covering pair of sets missing part of X stays a covering pair when
    both grow to maximal such sets.
    """
    missing = _maximal([s for s in sets if x & ~s], lambda a, b: a & ~b == 0)
    for x1 in missing:
        for x2 in missing:
            if x & ~(x1 | x2) == 0:
                return False
    return True


def oracle_pair_prime(pair: Tuple[int, int], pairs: Sequence[Tuple[int, int]]) -> bool:
    """Returns True when the ideal of pair is prime among the ideals of pairs.

    Ideals shrink as pairs grow, and intersections of ideals unite pairs.
    """

    def within(a: Tuple[int, int], b: Tuple[int, int]) -> bool:
        return a[0] & ~b[0] == 0 and a[1] & ~b[1] == 0

    missing = _maximal([p for p in pairs if not within(pair, p)], within)
    for p1 in missing:
        for p2 in missing:
            if within(pair, (p1[0] | p2[0], p1[1] | p2[1])):
                return False
    return True


def oracle_stable_part(group: FiniteGroup, seq: WeightSequence, x: int, n: int) -> int:
    """Returns the intersection over k >= 1 of the translates of X by words of length k in 1..n.

    Sums of words of length k repeat eventually; the intersection is taken
    over every length up to the first repetition.
    """
    letters = seq.letters(1, n)
    zero = tuple(0 for _ in group.moduli)
    level = group.mask([zero])
    seen: List[int] = []
    result = group.full
    while level not in seen:
        seen.append(level)
        step = 0
        for w in letters:
            step |= group.translate(level, w)
        level = step
        covered = 0
        for s in group.members(level):
            covered |= group.translate(x, s)
        result &= covered
    return result


def oracle_word_span(group: FiniteGroup, seq: WeightSequence, x: int, n: int) -> int:
    """Returns the union of the translates of X by all words in 1..n, empty word included."""
    letters = seq.letters(1, n)
    reached = x
    while True:
        step = reached
        for w in letters:
            step |= group.translate(reached, w)
        if step == reached:
            return reached
        reached = step


def bounded_member(
    values: Sequence[int], window: Tuple[int, int], max_length: int
) -> Callable[[int], bool]:
    """Returns word-sum membership on Z, exact inside window.

    Raises:
        WindowTooSmall: If a queried point is outside the window.
    """
    sums = {0}
    for _ in range(max_length):
        sums |= {s + v for s in sums for v in values}
    lo, hi = window

    def member(p: int) -> bool:
        if not lo <= p <= hi:
            raise WindowTooSmall(p)
        return p in sums

    return member
