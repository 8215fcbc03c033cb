"""Invariant module for weight-invariant sets and pairs.

A set X is invariant when ``X + w`` lies in X for every weight value w. A
pair ``(X, Xinf)`` is valid when ``H_X <= Xinf <= X``; valid pairs are the
combinatorial data of gauge-invariant ideals.

Sets on a finite group are bitsets over the element indices of
``GroupSpec.elements()``. On an infinite group a set is empty, full, or a
principal union ``P | (b_1 + sg) | ... | (b_k + sg)`` with finitely many
extra points P; membership goes through the monoid search.

Example:
    >>> from oinftyideals import GroupSpec, WeightSystem
    >>>
    >>> G = GroupSpec(0, [4])
    >>> weights = WeightSystem(G, tail=[G.element([2])])
    >>> [sorted(g.coords[0] for g in X) for X in enumerate_invariant_sets(weights)]
    [[], [0, 2], [1, 3], [0, 1, 2, 3]]
"""
from __future__ import annotations

from enum import Enum
import itertools
import logging
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from .abelian import GroupElem, quotient, subgroup_generated
from .exceptions import (
    InvalidElementError,
    NotFiniteError,
    SizeLimitError,
    UnsupportedRepresentationError,
)
from .monoid import closure_elements, contains, is_group, WeightSystem

logger = logging.getLogger(__name__)

DEFAULT_SIZE_LIMIT = 20


class SetKind(str, Enum):
    """Representation variants of a set."""

    EMPTY = "empty"
    FULL = "full"
    EXPLICIT = "explicit"
    PRINCIPAL = "principal"


class InvariantSet:
    """A subset of the group of a weight system.

    Use the constructors ``empty``, ``full``, ``explicit`` and ``principal``.
    The representation does not force invariance; ``is_invariant`` checks it
    (``H_X`` for instance need not be invariant).
    """

    __slots__ = ("_weights", "_kind", "_bits", "_bases", "_points")

    _weights: WeightSystem
    _kind: SetKind
    _bits: int
    _bases: Tuple[GroupElem, ...]
    _points: Tuple[GroupElem, ...]

    def __init__(
        self,
        weights: WeightSystem,
        kind: SetKind,
        bits: int = 0,
        bases: Iterable[GroupElem] = (),
        points: Iterable[GroupElem] = (),
    ) -> None:
        """Inits a set; prefer the classmethod constructors."""
        self._weights = weights
        self._kind = kind
        self._bits = bits
        self._bases = tuple(sorted(set(bases)))
        self._points = tuple(sorted(set(points)))

    # - constructors
    @classmethod
    def empty(cls, weights: WeightSystem) -> InvariantSet:
        """Returns the empty set."""
        if weights.group.is_finite:
            return cls(weights, SetKind.EXPLICIT)
        return cls(weights, SetKind.EMPTY)

    @classmethod
    def full(cls, weights: WeightSystem) -> InvariantSet:
        """Returns the whole group."""
        if weights.group.is_finite:
            return cls(weights, SetKind.EXPLICIT, bits=(1 << int(weights.group.order)) - 1)
        return cls(weights, SetKind.FULL)

    @classmethod
    def explicit(cls, weights: WeightSystem, elements: Iterable[GroupElem]) -> InvariantSet:
        """Returns a finite set of elements.

        On an infinite group the elements become isolated points of a
        principal union without bases.
        """
        elements = list(elements)
        for g in elements:
            if g.group != weights.group:
                raise InvalidElementError(g.coords, f"{g} is not in {weights.group}")
        if not weights.group.is_finite:
            return cls.principal(weights, (), elements)
        bits = 0
        for g in elements:
            bits |= 1 << weights.group.index_of(g)
        return cls(weights, SetKind.EXPLICIT, bits=bits)

    @classmethod
    def from_bits(cls, weights: WeightSystem, bits: int) -> InvariantSet:
        """Returns the set of a bitset over a finite group."""
        if not weights.group.is_finite:
            raise NotFiniteError(weights.group, f"{weights.group} is infinite")
        return cls(weights, SetKind.EXPLICIT, bits=bits)

    @classmethod
    def principal(
        cls,
        weights: WeightSystem,
        bases: Iterable[GroupElem],
        points: Iterable[GroupElem] = (),
    ) -> InvariantSet:
        """Returns ``points | union of (b + sg) over bases``."""
        bases = list(bases)
        points = list(points)
        for g in itertools.chain(bases, points):
            if g.group != weights.group:
                raise InvalidElementError(g.coords, f"{g} is not in {weights.group}")
        if weights.group.is_finite:
            group = weights.group
            sums = closure_elements(weights)
            bits = 0
            for b in bases:
                for s in sums:
                    bits |= 1 << group.index_of(b + s)
            for p in points:
                bits |= 1 << group.index_of(p)
            return cls(weights, SetKind.EXPLICIT, bits=bits)
        if not bases and not points:
            return cls(weights, SetKind.EMPTY)
        return cls(weights, SetKind.PRINCIPAL, bases=bases, points=points)

    # - accessors
    @property
    def weights(self: InvariantSet) -> WeightSystem:
        """WeightSystem: the weights the set is taken over."""
        return self._weights

    @property
    def kind(self: InvariantSet) -> SetKind:
        """SetKind: representation variant."""
        return self._kind

    @property
    def bits(self: InvariantSet) -> int:
        """int: bitset over element indices (finite groups)."""
        if self._kind is not SetKind.EXPLICIT:
            raise UnsupportedRepresentationError(self, "only finite sets carry a bitset")
        return self._bits

    @property
    def bases(self: InvariantSet) -> Tuple[GroupElem, ...]:
        """Tuple[GroupElem, ...]: generating points of a principal union."""
        return self._bases

    @property
    def points(self: InvariantSet) -> Tuple[GroupElem, ...]:
        """Tuple[GroupElem, ...]: isolated points of a principal union."""
        return self._points

    @property
    def is_empty(self: InvariantSet) -> bool:
        """bool: True for the empty set."""
        if self._kind is SetKind.EXPLICIT:
            return self._bits == 0
        return self._kind is SetKind.EMPTY

    @property
    def is_full(self: InvariantSet) -> bool:
        """bool: True for the whole group."""
        if self._kind is SetKind.EXPLICIT:
            return self._bits == (1 << int(self._weights.group.order)) - 1
        if self._kind is SetKind.FULL:
            return True
        if self._kind is SetKind.EMPTY:
            return False
        return _covers_group(self)

    def contains(self: InvariantSet, x: GroupElem) -> bool:
        """Returns True when x is a member."""
        if self._kind is SetKind.EXPLICIT:
            return bool(self._bits >> self._weights.group.index_of(x) & 1)
        if self._kind is SetKind.EMPTY:
            return False
        if self._kind is SetKind.FULL:
            return True
        if x in self._points:
            return True
        return any(contains(self._weights, x - b) for b in self._bases)

    __contains__ = contains

    def __iter__(self: InvariantSet) -> Iterator[GroupElem]:
        """Iterates over the members of a finite set in index order."""
        group = self._weights.group
        if self._kind is not SetKind.EXPLICIT:
            if self._kind is SetKind.EMPTY:
                return iter(())
            raise UnsupportedRepresentationError(self, "set is infinite")
        return (
            group.element_at(i) for i in range(int(group.order)) if self._bits >> i & 1
        )

    def __len__(self: InvariantSet) -> int:
        return bin(self.bits).count("1")

    # - set algebra
    def translate(self: InvariantSet, w: GroupElem) -> InvariantSet:
        """Returns ``self + w``."""
        if self._kind is SetKind.EXPLICIT:
            group = self._weights.group
            bits = 0
            for g in self:
                bits |= 1 << group.index_of(g + w)
            return InvariantSet(self._weights, SetKind.EXPLICIT, bits=bits)
        if self._kind is not SetKind.PRINCIPAL:
            return self
        return InvariantSet(
            self._weights,
            SetKind.PRINCIPAL,
            bases=(b + w for b in self._bases),
            points=(p + w for p in self._points),
        )

    def union(self: InvariantSet, *others: InvariantSet) -> InvariantSet:
        """Returns the union with others."""
        result = self
        for other in others:
            result = _union(result, other)
        return result

    __or__ = union

    def intersection(self: InvariantSet, other: InvariantSet) -> InvariantSet:
        """Returns the intersection of two finite-group sets."""
        _require_explicit(self, other)
        return InvariantSet(self._weights, SetKind.EXPLICIT, bits=self._bits & other._bits)

    __and__ = intersection

    def difference(self: InvariantSet, other: InvariantSet) -> InvariantSet:
        """Returns the difference of two finite-group sets."""
        _require_explicit(self, other)
        return InvariantSet(self._weights, SetKind.EXPLICIT, bits=self._bits & ~other._bits)

    __sub__ = difference

    def issubset(self: InvariantSet, other: InvariantSet) -> bool:
        """Returns True when every member of self is a member of other.

        Raises:
            UnsupportedRepresentationError: If the sets belong to different weights.
        """
        if self._weights != other._weights:
            raise UnsupportedRepresentationError(other, "sets over different weights")
        if self._kind is SetKind.EXPLICIT:
            return self._bits & ~other._bits == 0
        if self._kind is SetKind.EMPTY or other._kind is SetKind.FULL:
            return True
        if other._kind is SetKind.EMPTY:
            return False
        if self._kind is SetKind.FULL:
            return _covers_group(other)
        return all(p in other for p in self._points) and all(
            _principal_within(b, other) for b in self._bases
        )

    __le__ = issubset

    def __ge__(self: InvariantSet, other: InvariantSet) -> bool:
        return other.issubset(self)

    def __eq__(self: InvariantSet, other: object) -> bool:
        if not isinstance(other, InvariantSet):
            return NotImplemented
        if self._kind is SetKind.EXPLICIT and other._kind is SetKind.EXPLICIT:
            return self._bits == other._bits and self._weights == other._weights
        return self.issubset(other) and other.issubset(self)

    def __hash__(self: InvariantSet) -> int:
        if self._kind is SetKind.EXPLICIT:
            return hash(self._bits)
        return hash(self._weights)

    def __repr__(self: InvariantSet) -> str:
        if self._kind is SetKind.EXPLICIT:
            return "{" + ", ".join(str(g) for g in self) + "}"
        if self._kind is SetKind.PRINCIPAL:
            parts = [f"{b}+sg" for b in self._bases] + [str(p) for p in self._points]
            return "{" + " | ".join(parts) + "}"
        return f"<{self._kind.value}>"

    # -
    def to_json(self: InvariantSet, window: Optional[int] = None) -> Dict[str, Any]:
        """Returns a tagged json-ready descriptor.

        Args:
            window: if given for an infinite set, members with free
                coordinates in ``[-window, window]`` are listed as a sample.

        Returns:
            Dict: the descriptor.
        """
        data: Dict[str, Any] = {"kind": self._kind.value}
        if self._kind is SetKind.EXPLICIT:
            data["elements"] = [g.to_json() for g in self]
            return data
        if self._kind is SetKind.PRINCIPAL:
            data["bases"] = [b.to_json() for b in self._bases]
            data["points"] = [p.to_json() for p in self._points]
            data["membership"] = "word-sum search from each base"
        if window is not None and self._kind is not SetKind.EMPTY:
            data["window"] = {
                "radius": window,
                "members": [g.to_json() for g in window_elements(self._weights, window) if g in self],
            }
        return data


def window_elements(weights: WeightSystem, radius: int) -> Iterator[GroupElem]:
    """Yields the elements whose free coordinates lie in ``[-radius, radius]``."""
    group = weights.group
    ranges = [range(-radius, radius + 1)] * group.free_rank + [range(n) for n in group.torsion]
    for coords in itertools.product(*ranges):
        yield group.element(coords)


def _require_explicit(*sets: InvariantSet) -> None:
    for s in sets:
        if s.kind is not SetKind.EXPLICIT:
            raise UnsupportedRepresentationError(s, "operation needs finite-group sets")


def _union(a: InvariantSet, b: InvariantSet) -> InvariantSet:
    if a.weights != b.weights:
        raise UnsupportedRepresentationError(b, "sets over different weights")
    if a.kind is SetKind.EXPLICIT:
        return InvariantSet(a.weights, SetKind.EXPLICIT, bits=a.bits | b.bits)
    if a.kind is SetKind.FULL or b.kind is SetKind.EMPTY:
        return a
    if b.kind is SetKind.FULL or a.kind is SetKind.EMPTY:
        return b
    return InvariantSet(
        a.weights,
        SetKind.PRINCIPAL,
        bases=a.bases + b.bases,
        points=a.points + b.points,
    )


def _principal_within(b: GroupElem, other: InvariantSet) -> bool:
    """Decides ``b + sg <= other`` for a principal union other.

    Elements not covered by a base of other must be isolated points of
    other, so the exploration visits at most ``len(other.points)`` of them.
    """
    weights = other.weights
    frontier = [b]
    seen = {b}
    while frontier:
        step = []
        for y in frontier:
            if any(contains(weights, y - c) for c in other.bases):
                continue
            if y not in other.points:
                return False
            for w in weights.values:
                z = y + w
                if z not in seen:
                    seen.add(z)
                    step.append(z)
        frontier = step
    return True


def _covers_group(s: InvariantSet) -> bool:
    """Decides whether a principal union on an infinite group is everything.

    Translates of a monoid that is not a group stay in a half-space of the
    free part, so finitely many never cover. A group monoid covers exactly
    when it has finite index and every coset holds a base.
    """
    weights = s.weights
    if not is_group(weights):
        return False
    group = weights.group
    spec, project = quotient(group, subgroup_generated(list(weights.values), group))
    if not spec.is_finite:
        return False
    hit = {project(b) for b in s.bases}
    return all(q in hit for q in spec.elements())


# - operations
def is_invariant(s: InvariantSet, weights: Optional[WeightSystem] = None) -> bool:
    """Returns True when ``s + w <= s`` for every value w of weights.

    Weights default to those of s. Bases of a principal union only need
    checking against other weights.
    """
    weights = weights or s.weights
    if s.kind is SetKind.PRINCIPAL and weights == s.weights:
        return all(p + w in s for p in s.points for w in weights.values)
    return all(s.translate(w).issubset(s) for w in weights.values)


def semigroup(weights: WeightSystem, base: Optional[GroupElem] = None) -> InvariantSet:
    """Returns ``base + sg`` (``sg`` itself when base is omitted)."""
    base = base if base is not None else weights.group.zero()
    return InvariantSet.principal(weights, [base])


def h_set(x: InvariantSet) -> InvariantSet:
    """Returns H_X, the points of X not reached from X plus the tail translates.

    ``H_X = (X - union of (X + w) over all weights)
    | union of (X + w) over tail weights``.

    Args:
        x: an invariant set.

    Returns:
        the set H_X, contained in X.
    """
    weights = x.weights
    if x.kind in (SetKind.EMPTY, SetKind.FULL):
        return x
    tail_part = InvariantSet.empty(weights).union(*(x.translate(w) for w in weights.tail_values))
    if x.kind is SetKind.EXPLICIT:
        reached = InvariantSet.empty(weights).union(*(x.translate(w) for w in weights.values))
        return (x - reached) | tail_part
    isolated = [
        c
        for c in x.bases + x.points
        if all(c - w not in x for w in weights.values)
    ]
    return tail_part | InvariantSet.principal(weights, (), isolated)


class InvariantPair:
    """A pair ``(X, Xinf)`` of sets; valid when ``H_X <= Xinf <= X``."""

    __slots__ = ("_x", "_xinf")

    def __init__(self, x: InvariantSet, xinf: InvariantSet) -> None:
        """Inits the pair."""
        if x.weights != xinf.weights:
            raise UnsupportedRepresentationError(xinf, "sets over different weights")
        self._x = x
        self._xinf = xinf

    @property
    def x(self: InvariantPair) -> InvariantSet:
        """InvariantSet: the set X."""
        return self._x

    @property
    def xinf(self: InvariantPair) -> InvariantSet:
        """InvariantSet: the limit set Xinf."""
        return self._xinf

    @property
    def weights(self: InvariantPair) -> WeightSystem:
        """WeightSystem: the weights of both sets."""
        return self._x.weights

    def is_valid(self: InvariantPair) -> bool:
        """Returns True when X is invariant and ``H_X <= Xinf <= X``."""
        return is_invariant(self._x) and validate_pair(self._x, self._xinf)

    def issubset(self: InvariantPair, other: InvariantPair) -> bool:
        """Returns True when both components are contained in other's."""
        return self._x.issubset(other._x) and self._xinf.issubset(other._xinf)

    __le__ = issubset

    def __eq__(self: InvariantPair, other: object) -> bool:
        if not isinstance(other, InvariantPair):
            return NotImplemented
        return self._x == other._x and self._xinf == other._xinf

    def __hash__(self: InvariantPair) -> int:
        return hash((self._x, self._xinf))

    def __repr__(self: InvariantPair) -> str:
        return f"InvariantPair({self._x!r}, {self._xinf!r})"

    def to_json(self: InvariantPair, window: Optional[int] = None) -> Dict[str, Any]:
        """Returns the pair as a json-ready dict."""
        return {"x": self._x.to_json(window), "xinf": self._xinf.to_json(window)}


def x_n(pair: InvariantPair, n: int) -> InvariantSet:
    """Returns ``X^(n) = Xinf | union of (X + w_i) over indices i > n``.

    Example:
        >>> from oinftyideals import GroupSpec, WeightSystem
        >>> G = GroupSpec(0, [4])
        >>> W = WeightSystem(G, tail=[G.element([1])])
        >>> X = InvariantSet.full(W)
        >>> x_n(InvariantPair(X, X), 7) == X
        True
    """
    if n < 0:
        raise InvalidElementError(n, "n must be nonnegative")
    if n == 0:
        return pair.x
    x = pair.x
    return pair.xinf.union(*(x.translate(w) for w in pair.weights.values_after(n)))


def validate_pair(x: InvariantSet, xinf: InvariantSet) -> bool:
    """Returns True when ``H_X <= Xinf <= X``."""
    return h_set(x).issubset(xinf) and xinf.issubset(x)


def pair_union(first: InvariantPair, second: InvariantPair) -> InvariantPair:
    """Returns the componentwise union, the pair of the intersected ideals."""
    return InvariantPair(first.x | second.x, first.xinf | second.xinf)


def _check_size(weights: WeightSystem, size_limit: int) -> None:
    group = weights.group
    if not group.is_finite:
        raise NotFiniteError(group, f"{group} is infinite")
    if group.order > size_limit:
        raise SizeLimitError(
            int(group.order), size_limit, f"|{group}| = {group.order} exceeds {size_limit}"
        )


def up_closures(weights: WeightSystem) -> List[int]:
    """Returns the bitset of ``g + sg`` for each element g, in index order.

    Raises:
        NotFiniteError: If the group is infinite.
    """
    group = weights.group
    sums = closure_elements(weights)
    ups = []
    for g in group.elements():
        bits = 0
        for s in sums:
            bits |= 1 << group.index_of(g + s)
        ups.append(bits)
    return ups


def enumerate_invariant_sets(
    weights: WeightSystem, size_limit: int = DEFAULT_SIZE_LIMIT
) -> List[InvariantSet]:
    """Returns every invariant set of a finite group, ordered by bitset.

    Invariant sets are the up-sets of the reachability preorder. Each
    element is either included together with its up-closure or excluded
    together with its down-closure.

    Raises:
        NotFiniteError: If the group is infinite.
        SizeLimitError: If the group is larger than size_limit.
    """
    _check_size(weights, size_limit)
    ups = up_closures(weights)
    size = len(ups)
    downs = [0] * size
    for i, up in enumerate(ups):
        for j in range(size):
            if up >> j & 1:
                downs[j] |= 1 << i
    found: List[int] = []
    stack: List[Tuple[int, int, int]] = [(0, 0, 0)]
    while stack:
        i, included, excluded = stack.pop()
        while i < size and (included | excluded) >> i & 1:
            i += 1
        if i == size:
            found.append(included)
            continue
        if not ups[i] & excluded:
            stack.append((i + 1, included | ups[i], excluded))
        if not downs[i] & included:
            stack.append((i + 1, included, excluded | downs[i]))
    found.sort()
    logger.debug("%r has %d invariant sets", weights, len(found))
    return [InvariantSet.from_bits(weights, bits) for bits in found]


def enumerate_pairs(
    weights: WeightSystem, size_limit: int = DEFAULT_SIZE_LIMIT
) -> List[InvariantPair]:
    """Returns every valid pair of a finite group, ordered by X then Xinf.

    Raises:
        NotFiniteError: If the group is infinite.
        SizeLimitError: If the group is larger than size_limit.
    """
    pairs = []
    for x in enumerate_invariant_sets(weights, size_limit):
        h = h_set(x).bits
        free = x.bits & ~h
        for extra in _submasks(free):
            pairs.append(InvariantPair(x, InvariantSet.from_bits(weights, h | extra)))
    logger.debug("%r has %d pairs", weights, len(pairs))
    return pairs


def _submasks(mask: int) -> List[int]:
    subs = []
    sub = mask
    while True:
        subs.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    return sorted(subs)

