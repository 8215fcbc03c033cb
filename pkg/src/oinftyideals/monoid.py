"""Monoid module for the semigroup of word sums of a weight sequence.

A weight sequence is given by a finite prefix and a tail repeated forever.
Its word sums form the monoid generated by the distinct weight values; every
letter of a word may repeat, so each value is available without bound.

Example:
    >>> from oinftyideals import GroupSpec, WeightSystem
    >>>
    >>> Z = GroupSpec(1)
    >>> weights = WeightSystem(Z, prefix=[], tail=[Z.element([2]), Z.element([3])])
    >>> bool(contains(weights, Z.element([1])))
    False
    >>> contains(weights, Z.element([7])).certificate.to_json()
    {'coefficients': [[[2], 2], [[3], 1]]}
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
import itertools
import logging
import math
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import Rational
from sympy.solvers.simplex import InfeasibleLPError, linprog, UnboundedLPError

from .abelian import (
    GroupElem,
    GroupSpec,
    hermite_normal_form,
    in_row_span,
    subgroup_generated,
)
from .exceptions import (
    BudgetExceededError,
    InvalidElementError,
    NotFiniteError,
)

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 1_000_000


class WeightSystem:
    """A weight sequence given by an explicit prefix and a repeating tail.

    Index i (starting at 1) carries ``prefix[i-1]`` for ``i <= len(prefix)``
    and ``tail[(i - len(prefix) - 1) % len(tail)]`` beyond.

    The weights are immutable. Membership answers and the closure table of
    finite groups are cached on the instance as they are first computed, and
    every holder of the instance sees them. Caches take no part in
    equality or hashing, and ``with_budget`` starts from empty ones.

    Args:
        group: the group the weights live in.
        prefix: weights of the first indices, possibly empty.
        tail: nonempty list of weights repeated forever.
        budget: node budget for membership searches on infinite groups.

    Raises:
        InvalidElementError: If the tail is empty or a weight is foreign.
    """

    __slots__ = ("_group", "_prefix", "_tail", "_budget", "_memo", "_table")

    _group: GroupSpec
    _prefix: Tuple[GroupElem, ...]
    _tail: Tuple[GroupElem, ...]
    _budget: int
    _memo: Dict[Tuple[Any, ...], Optional[Dict[GroupElem, int]]]
    _table: Optional[Dict[GroupElem, Optional[Tuple[GroupElem, GroupElem]]]]

    def __init__(
        self,
        group: GroupSpec,
        prefix: Sequence[GroupElem] = (),
        tail: Sequence[GroupElem] = (),
        budget: int = DEFAULT_BUDGET,
    ) -> None:
        """Inits a weight system with validated weights."""
        if not tail:
            raise InvalidElementError([], "tail must contain at least one weight")
        for w in itertools.chain(prefix, tail):
            if w.group != group:
                raise InvalidElementError(w.coords, f"weight {w} is not in {group}")
        self._group = group
        self._prefix = tuple(prefix)
        self._tail = tuple(tail)
        self._budget = budget
        self._memo = {}
        self._table = None

    @property
    def group(self: WeightSystem) -> GroupSpec:
        """GroupSpec: the group the weights live in."""
        return self._group

    @property
    def prefix(self: WeightSystem) -> Tuple[GroupElem, ...]:
        """Tuple[GroupElem, ...]: the explicit first weights."""
        return self._prefix

    @property
    def tail(self: WeightSystem) -> Tuple[GroupElem, ...]:
        """Tuple[GroupElem, ...]: the repeating weights."""
        return self._tail

    @property
    def budget(self: WeightSystem) -> int:
        """int: node budget for membership searches."""
        return self._budget

    def weight(self: WeightSystem, i: int) -> GroupElem:
        """Returns the weight at index i >= 1."""
        if i < 1:
            raise InvalidElementError(i, "indices start at 1")
        p = len(self._prefix)
        if i <= p:
            return self._prefix[i - 1]
        return self._tail[(i - p - 1) % len(self._tail)]

    @property
    def values(self: WeightSystem) -> Tuple[GroupElem, ...]:
        """Tuple[GroupElem, ...]: the distinct weight values, sorted."""
        return tuple(sorted(set(self._prefix) | set(self._tail)))

    @property
    def tail_values(self: WeightSystem) -> Tuple[GroupElem, ...]:
        """Tuple[GroupElem, ...]: the values occurring infinitely often."""
        return tuple(sorted(set(self._tail)))

    def values_after(self: WeightSystem, n: int) -> Tuple[GroupElem, ...]:
        """Returns the distinct values at indices greater than n."""
        return tuple(sorted(set(self._prefix[n:]) | set(self._tail)))

    def values_except(self: WeightSystem, i: int) -> Tuple[GroupElem, ...]:
        """Returns the distinct values at indices other than i."""
        others = [w for k, w in enumerate(self._prefix, start=1) if k != i]
        return tuple(sorted(set(others) | set(self._tail)))

    def with_budget(self: WeightSystem, budget: int) -> WeightSystem:
        """Returns a copy searching with another node budget."""
        return WeightSystem(self._group, self._prefix, self._tail, budget)

    # -
    def to_json(self: WeightSystem) -> Dict[str, Any]:
        """Returns the weight system as a json-ready dict."""
        return {
            "group": self._group.to_json(),
            "prefix": [w.to_json() for w in self._prefix],
            "tail": [w.to_json() for w in self._tail],
        }

    def __eq__(self: WeightSystem, other: object) -> bool:
        if not isinstance(other, WeightSystem):
            return NotImplemented
        return (self._group, self._prefix, self._tail) == (
            other._group,
            other._prefix,
            other._tail,
        )

    def __hash__(self: WeightSystem) -> int:
        return hash((self._group, self._prefix, self._tail))

    def __repr__(self: WeightSystem) -> str:
        prefix = [str(w) for w in self._prefix]
        tail = [str(w) for w in self._tail]
        return f"WeightSystem({self._group}, prefix={prefix}, tail={tail})"


class MembershipCertificate:
    """Counts of weight values whose weighted sum is a queried element."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Dict[GroupElem, int]) -> None:
        """Inits a certificate, dropping zero counts."""
        for w, count in coefficients.items():
            if count < 0:
                raise InvalidElementError(w.coords, f"negative count {count}")
        self._coefficients = {w: c for w, c in sorted(coefficients.items()) if c}

    @property
    def coefficients(self: MembershipCertificate) -> Dict[GroupElem, int]:
        """Dict[GroupElem, int]: count per weight value."""
        return dict(self._coefficients)

    def total(self: MembershipCertificate, group: GroupSpec) -> GroupElem:
        """Returns the weighted sum the certificate stands for."""
        result = group.zero()
        for w, count in self._coefficients.items():
            result = result + count * w
        return result

    def word(self: MembershipCertificate) -> List[GroupElem]:
        """Returns the letters of one word with this sum."""
        return [w for w, count in self._coefficients.items() for _ in range(count)]

    def to_json(self: MembershipCertificate) -> Dict[str, Any]:
        """Returns the certificate as a json-ready dict."""
        return {"coefficients": [[w.to_json(), c] for w, c in self._coefficients.items()]}

    def __repr__(self: MembershipCertificate) -> str:
        items = ", ".join(f"{w}: {c}" for w, c in self._coefficients.items())
        return f"MembershipCertificate({{{items}}})"


class Membership:
    """Outcome of a membership query; truthy exactly for members."""

    __slots__ = ("_element", "_certificate")

    def __init__(self, element: GroupElem, certificate: Optional[MembershipCertificate]) -> None:
        """Inits the outcome."""
        self._element = element
        self._certificate = certificate

    @property
    def element(self: Membership) -> GroupElem:
        """GroupElem: the queried element."""
        return self._element

    @property
    def member(self: Membership) -> bool:
        """bool: True when the element is a word sum."""
        return self._certificate is not None

    @property
    def certificate(self: Membership) -> Optional[MembershipCertificate]:
        """MembershipCertificate: the witness, None for non-members."""
        return self._certificate

    def __bool__(self: Membership) -> bool:
        return self.member

    def __repr__(self: Membership) -> str:
        return f"Membership({self._element}, {self._certificate!r})"


def contains(weights: WeightSystem, x: GroupElem) -> Membership:
    """Decides whether x is a word sum, returning a certificate for members.

    On finite groups this reads a breadth-first closure table. Otherwise the
    torsion coordinates are matched by trying residues of each count modulo
    the order of its weight's torsion part, and the free coordinates are
    solved as a nonnegative integer program by branch and bound over exact
    rational relaxations.

    Args:
        weights: the weight system.
        x: the queried element.

    Returns:
        the membership outcome.

    Raises:
        InvalidElementError: If x is not in the weights' group.
        BudgetExceededError: If the search exhausts the node budget.
    """
    if x.group != weights.group:
        raise InvalidElementError(x.coords, f"{x} is not in {weights.group}")
    counts = _decide(weights, weights.values, x)
    if counts is None:
        return Membership(x, None)
    certificate = MembershipCertificate(counts)
    assert certificate.total(weights.group) == x  # noqa: S101
    return Membership(x, certificate)


def sg1_contains(weights: WeightSystem, i: int, x: GroupElem) -> bool:
    """Decides membership in the sums of words whose first letter is not index i.

    These are the translates ``w + sg`` over values w at indices other than i.
    """
    return any(contains(weights, x - w) for w in weights.values_except(i))


def closure_table(weights: WeightSystem) -> int:
    """Returns the word sums of a finite group as a bitset over element indices.

    Raises:
        NotFiniteError: If the group is infinite.

    Example:
        >>> from oinftyideals import GroupSpec
        >>> G = GroupSpec(0, [4])
        >>> bin(closure_table(WeightSystem(G, tail=[G.element([2])])))
        '0b101'
    """
    group = weights.group
    if not group.is_finite:
        raise NotFiniteError(group, f"{group} is infinite")
    bits = 0
    for g in _closure(weights):
        bits |= 1 << group.index_of(g)
    return bits


def closure_elements(weights: WeightSystem) -> List[GroupElem]:
    """Returns the word sums of a finite group in discovery order.

    Raises:
        NotFiniteError: If the group is infinite.
    """
    if not weights.group.is_finite:
        raise NotFiniteError(weights.group, f"{weights.group} is infinite")
    return list(_closure(weights))


def is_full_group(weights: WeightSystem) -> bool:
    """Returns True when every element of the group is a word sum."""
    group = weights.group
    if group.is_finite:
        return closure_table(weights) == (1 << int(group.order)) - 1
    if not subgroup_generated(list(weights.values), group).is_full:
        return False
    return is_group(weights)


def is_group(weights: WeightSystem) -> bool:
    """Returns True when the word sums are closed under negation."""
    return all(contains(weights, -w) for w in weights.values)


# - decision procedures
def _closure(weights: WeightSystem) -> Dict[GroupElem, Optional[Tuple[GroupElem, GroupElem]]]:
    if weights._table is None:
        zero = weights.group.zero()
        parents: Dict[GroupElem, Optional[Tuple[GroupElem, GroupElem]]] = {zero: None}
        queue = deque([zero])
        while queue:
            g = queue.popleft()
            for w in weights.values:
                h = g + w
                if h not in parents:
                    parents[h] = (g, w)
                    queue.append(h)
        weights._table = parents
        logger.debug("closure of %r has %d elements", weights, len(parents))
    return weights._table


def _decide(
    weights: WeightSystem, generators: Tuple[GroupElem, ...], x: GroupElem
) -> Optional[Dict[GroupElem, int]]:
    if x.is_zero:
        return {}
    key = (generators, x)
    if key in weights._memo:
        return weights._memo[key]
    if weights.group.is_finite:
        result = _decide_finite(weights, x)
    else:
        result = _Search(weights.group, generators, x, weights.budget).run()
    weights._memo[key] = result
    return result


def _decide_finite(weights: WeightSystem, x: GroupElem) -> Optional[Dict[GroupElem, int]]:
    parents = _closure(weights)
    if x not in parents:
        return None
    counts: Dict[GroupElem, int] = {}
    step = parents[x]
    while step is not None:
        previous, w = step
        counts[w] = counts.get(w, 0) + 1
        step = parents[previous]
    return counts


def _torsion_order(g: GroupElem) -> int:
    group = g.group
    order = 1
    for c, n in zip(g.torsion_part, group.torsion):
        order = math.lcm(order, n // math.gcd(c, n))
    return order


class _Search:
    """Residue enumeration followed by branch and bound on the free part."""

    def __init__(
        self,
        group: GroupSpec,
        generators: Tuple[GroupElem, ...],
        x: GroupElem,
        budget: int,
    ) -> None:
        self.group = group
        self.generators = generators
        self.x = x
        self.budget = budget
        self.nodes = 0
        self.periods = [_torsion_order(g) for g in generators]
        self.columns = [
            tuple(e * f for f in g.free_part) for g, e in zip(generators, self.periods)
        ]
        self.active = [j for j, col in enumerate(self.columns) if any(col)]
        # transpose of the active columns, one row per free coordinate
        self.rows = [
            [self.columns[j][r] for j in self.active] for r in range(group.free_rank)
        ]
        self.lattice = hermite_normal_form(
            [self.columns[j] for j in self.active], group.free_rank
        )

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                self.x.to_json(),
                self.budget,
                f"membership of {self.x} undecided after {self.budget} nodes",
            )

    def run(self) -> Optional[Dict[GroupElem, int]]:
        target_torsion = self.x.torsion_part
        for residues in itertools.product(*(range(e) for e in self.periods)):
            self._tick()
            partial = self.group.zero()
            for r, g in zip(residues, self.generators):
                partial = partial + r * g
            if partial.torsion_part != target_torsion:
                continue
            rhs = [a - b for a, b in zip(self.x.free_part, partial.free_part)]
            steps = self._solve(rhs)
            if steps is not None:
                counts = {
                    g: r for g, r in zip(self.generators, residues) if r
                }
                for j, t in zip(self.active, steps):
                    if t:
                        g = self.generators[j]
                        counts[g] = counts.get(g, 0) + self.periods[j] * t
                logger.debug("membership of %s proved after %d nodes", self.x, self.nodes)
                return counts
        logger.debug("membership of %s refuted after %d nodes", self.x, self.nodes)
        return None

    def _solve(self, rhs: List[int]) -> Optional[List[int]]:
        """Finds nonnegative integers t with sum_j t_j * column_j = rhs."""
        if not self.active:
            return [] if not any(rhs) else None
        if not in_row_span(self.lattice, rhs):
            return None
        n = len(self.active)
        stack: List[Tuple[Tuple[int, ...], Tuple[Optional[int], ...]]] = [
            ((0,) * n, (None,) * n)
        ]
        while stack:
            self._tick()
            lower, upper = stack.pop()
            point = self._relaxation(rhs, lower, upper)
            if point is None:
                continue
            fractional = next((k for k, v in enumerate(point) if v.denominator != 1), None)
            if fractional is None:
                return [int(v) for v in point]
            v = point[fractional]
            floor = math.floor(v)
            up_lower = list(lower)
            up_lower[fractional] = floor + 1
            down_upper = list(upper)
            down_upper[fractional] = floor
            stack.append((tuple(up_lower), upper))
            stack.append((lower, tuple(down_upper)))
        return None

    def _relaxation(
        self,
        rhs: List[int],
        lower: Tuple[int, ...],
        upper: Tuple[Optional[int], ...],
    ) -> Optional[List[Fraction]]:
        """Minimizes the total count over the rational relaxation of a node."""
        n = len(lower)
        # shift to y = t - lower >= 0 and state equalities as paired inequalities
        shifted = [
            b - sum(a * lo for a, lo in zip(row, lower)) for row, b in zip(self.rows, rhs)
        ]
        a_rows: List[List[int]] = []
        b_vals: List[int] = []
        for row, b in zip(self.rows, shifted):
            a_rows.append(list(row))
            b_vals.append(b)
            a_rows.append([-a for a in row])
            b_vals.append(-b)
        for k, (lo, u) in enumerate(zip(lower, upper)):
            if u is not None:
                bound = [0] * n
                bound[k] = 1
                a_rows.append(bound)
                b_vals.append(u - lo)
        try:
            _, solution = linprog([1] * n, a_rows, b_vals)
        except InfeasibleLPError:
            return None
        except UnboundedLPError:  # pragma: no cover
            return None
        return [_to_fraction(v) + lo for v, lo in zip(solution, lower)]


def _to_fraction(value: Any) -> Fraction:
    rational = Rational(value)
    return Fraction(int(rational.p), int(rational.q))


__all__ = [
    "DEFAULT_BUDGET",
    "Membership",
    "MembershipCertificate",
    "WeightSystem",
    "closure_elements",
    "closure_table",
    "contains",
    "is_full_group",
    "is_group",
    "sg1_contains",
]
