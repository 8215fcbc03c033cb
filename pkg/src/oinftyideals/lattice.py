"""Lattice module for the ideal lattice of a finite dual group.

Every valid pair is the datum of one gauge-invariant ideal. Larger pairs
give smaller ideals, intersecting ideals unites their pairs, and an ideal is
primitive exactly when its pair is prime and not ``(∅, ∅)``.

Example:
    >>> from oinftyideals import GroupSpec, WeightSystem
    >>>
    >>> G = GroupSpec(0, [3])
    >>> lattice = enumerate_ideals(WeightSystem(G, tail=[G.element([1])]))
    >>> len(lattice), lattice.is_simple
    (2, True)
"""
from __future__ import annotations

import logging
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

from .condition import check_condition, ConditionReport
from .exceptions import InternalInvariantBrokenError
from .invariant import DEFAULT_SIZE_LIMIT, enumerate_pairs, InvariantPair, pair_union
from .monoid import WeightSystem
from .prime import is_prime_pair
from .rdf import lattice_to_graph

logger = logging.getLogger(__name__)


class IdealNode:
    """One ideal of the lattice, identified by its pair."""

    __slots__ = ("_index", "_pair", "_primitive")

    def __init__(self, index: int, pair: InvariantPair, primitive: bool) -> None:
        """Inits a node."""
        self._index = index
        self._pair = pair
        self._primitive = primitive

    @property
    def index(self: IdealNode) -> int:
        """int: position in the lattice."""
        return self._index

    @property
    def pair(self: IdealNode) -> InvariantPair:
        """InvariantPair: the pair of the ideal."""
        return self._pair

    @property
    def primitive(self: IdealNode) -> bool:
        """bool: True for primitive ideals."""
        return self._primitive

    def to_json(self: IdealNode) -> Dict[str, Any]:
        """Returns the node as a json-ready dict."""
        data = self._pair.to_json()
        data.update({"index": self._index, "primitive": self._primitive})
        return data

    def __repr__(self: IdealNode) -> str:
        return f"IdealNode({self._index}, {self._pair!r}, primitive={self._primitive})"


class IdealLattice:
    """The gauge-invariant ideals of a crossed product over a finite group.

    When the condition holds the lattice holds every ideal and ``complete`` is
    True; otherwise ideals are classified by Y-pairs and only the
    gauge-invariant ones are listed.
    """

    __slots__ = ("_weights", "_condition", "_nodes", "_lookup")

    def __init__(
        self, weights: WeightSystem, condition: ConditionReport, nodes: List[IdealNode]
    ) -> None:
        """Inits a lattice over ready-made nodes."""
        self._weights = weights
        self._condition = condition
        self._nodes = nodes
        self._lookup = {
            (node.pair.x.bits, node.pair.xinf.bits): node.index for node in nodes
        }

    @property
    def weights(self: IdealLattice) -> WeightSystem:
        """WeightSystem: the weights of the action."""
        return self._weights

    @property
    def condition(self: IdealLattice) -> ConditionReport:
        """ConditionReport: outcome of the condition check."""
        return self._condition

    @property
    def nodes(self: IdealLattice) -> List[IdealNode]:
        """List[IdealNode]: the ideals, ordered by X then Xinf."""
        return list(self._nodes)

    @property
    def complete(self: IdealLattice) -> bool:
        """bool: True when the nodes are all the ideals."""
        return self._condition.satisfied

    @property
    def is_simple(self: IdealLattice) -> bool:
        """bool: True when 0 and the whole algebra are the only ideals."""
        return self.complete and len(self._nodes) == 2

    def __len__(self: IdealLattice) -> int:
        return len(self._nodes)

    def __iter__(self: IdealLattice) -> Iterator[IdealNode]:
        return iter(self._nodes)

    def __getitem__(self: IdealLattice, index: int) -> IdealNode:
        return self._nodes[index]

    def index_of(self: IdealLattice, pair: InvariantPair) -> int:
        """Returns the node index of a pair."""
        key = (pair.x.bits, pair.xinf.bits)
        if key not in self._lookup:
            raise InternalInvariantBrokenError(pair.to_json(), "pair missing from the lattice")
        return self._lookup[key]

    @property
    def primitive_nodes(self: IdealLattice) -> List[IdealNode]:
        """List[IdealNode]: the primitive ideals."""
        return [node for node in self._nodes if node.primitive]

    @property
    def zero(self: IdealLattice) -> IdealNode:
        """IdealNode: the zero ideal, with the largest pair."""
        return max(self._nodes, key=lambda node: (node.pair.x.bits, node.pair.xinf.bits))

    @property
    def top(self: IdealLattice) -> IdealNode:
        """IdealNode: the whole algebra, with the pair (∅, ∅)."""
        return self._nodes[0]

    def leq(self: IdealLattice, a: int, b: int) -> bool:
        """Returns True when ideal a is contained in ideal b."""
        return self._nodes[b].pair.issubset(self._nodes[a].pair)

    def meet(self: IdealLattice, a: int, b: int) -> int:
        """Returns the intersection of two ideals."""
        return self.index_of(pair_union(self._nodes[a].pair, self._nodes[b].pair))

    def join(self: IdealLattice, a: int, b: int) -> int:
        """Returns the smallest ideal containing both."""
        below = [
            node.index
            for node in self._nodes
            if self.leq(a, node.index) and self.leq(b, node.index)
        ]
        for c in below:
            if all(self.leq(c, d) for d in below):
                return c
        raise InternalInvariantBrokenError([a, b], "ideals without a least upper bound")

    def covers(self: IdealLattice) -> List[Tuple[int, int]]:
        """Returns the Hasse diagram as pairs (a, b) where b covers a."""
        n = len(self._nodes)
        above = [[b for b in range(n) if b != a and self.leq(a, b)] for a in range(n)]
        edges = []
        for a in range(n):
            strictly = set(above[a])
            for b in above[a]:
                if not any(b in above[c] for c in strictly if c != b):
                    edges.append((a, b))
        return edges

    # -
    def to_json(self: IdealLattice) -> Dict[str, Any]:
        """Returns the lattice as a json-ready dict."""
        return {
            "count": len(self._nodes),
            "complete": self.complete,
            "simple": self.is_simple,
            "condition": self._condition.to_json(),
            "nodes": [node.to_json() for node in self._nodes],
            "covers": [list(edge) for edge in self.covers()],
        }

    def to_rdf(
        self: IdealLattice, format: str = "turtle", encoding: Optional[str] = "utf-8"
    ) -> Union[bytes, str]:
        """Maps the lattice to rdf.

        Args:
            format: a serialization format known to rdflib.
            encoding: the encoding to serialize into

        Returns:
            a rdf serialization as a bytes literal according to format.
        """
        return lattice_to_graph(self).serialize(format=format, encoding=encoding)


def enumerate_ideals(
    weights: WeightSystem, size_limit: int = DEFAULT_SIZE_LIMIT
) -> IdealLattice:
    """Enumerates the gauge-invariant ideals of a finite dual group.

    Raises:
        NotFiniteError: If the group is infinite.
        SizeLimitError: If the group is larger than size_limit.
    """
    pairs = enumerate_pairs(weights, size_limit)
    condition = check_condition(weights)
    nodes = [
        IdealNode(k, pair, not pair.x.is_empty and is_prime_pair(pair))
        for k, pair in enumerate(pairs)
    ]
    logger.debug("%r has %d ideals", weights, len(nodes))
    return IdealLattice(weights, condition, nodes)
