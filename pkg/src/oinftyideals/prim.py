"""Prim module describing the primitive ideal space.

When the condition holds the primitive ideals are the ideals of prime pairs
other than ``(∅, ∅)``. On a finite group they are listed; on an infinite
group they come in two families, sets ``(X, H_X)`` with X prime and points
``(g + sg, H | {g})``.

When the condition fails at index i the space splits into three disjoint
components: a circle ``([g], theta)`` for every class of ``Gamma / <w_i>``,
a point g for every element of Gamma, and the non-principal prime sets.
"""
from __future__ import annotations

from enum import Enum
import logging
from typing import Any, Dict, Iterable, List, Optional, Union

from .condition import check_condition, ConditionReport
from .exceptions import ConditionNotViolatedError
from .invariant import (
    DEFAULT_SIZE_LIMIT,
    enumerate_pairs,
    h_set,
    InvariantPair,
    InvariantSet,
    semigroup,
)
from .monoid import WeightSystem
from .prime import delta_candidates, in_delta, is_prime_pair
from .rdf import prim_to_graph
from .ypair import saturate, validate_ypair, YPair

logger = logging.getLogger(__name__)


class Regime(str, Enum):
    """Shape of the primitive ideal space."""

    SATISFIED = "satisfied"
    VIOLATED = "violated"


class PrimReport:
    """The primitive ideal space of a weight system.

    Finite groups carry the list of primitive pairs. Infinite groups carry
    the families, and the violated regime the three components; in both the
    non-principal prime sets found among the candidates are listed as delta.
    """

    __slots__ = ("_condition", "_primitive", "_delta", "_point_family")

    def __init__(
        self,
        condition: ConditionReport,
        primitive: Optional[List[InvariantPair]] = None,
        delta: Iterable[InvariantSet] = (),
        point_family: bool = False,
    ) -> None:
        """Inits the report."""
        self._condition = condition
        self._primitive = primitive
        self._delta = list(delta)
        self._point_family = point_family

    @property
    def condition(self: PrimReport) -> ConditionReport:
        """ConditionReport: the condition the regime depends on."""
        return self._condition

    @property
    def weights(self: PrimReport) -> WeightSystem:
        """WeightSystem: the weights of the action."""
        return self._condition.weights

    @property
    def regime(self: PrimReport) -> Regime:
        """Regime: satisfied or violated."""
        return Regime.SATISFIED if self._condition.satisfied else Regime.VIOLATED

    @property
    def enumerated(self: PrimReport) -> bool:
        """bool: True when every primitive ideal is listed."""
        return self._primitive is not None

    @property
    def primitive(self: PrimReport) -> List[InvariantPair]:
        """List[InvariantPair]: the pairs of the primitive ideals, if listed."""
        return list(self._primitive or [])

    @property
    def delta(self: PrimReport) -> List[InvariantSet]:
        """List[InvariantSet]: non-principal prime sets."""
        return list(self._delta)

    @property
    def point_family(self: PrimReport) -> bool:
        """bool: True when every g gives a prime pair ``(g + sg, H | {g})``."""
        return self._point_family

    def to_json(self: PrimReport, window: Optional[int] = None) -> Dict[str, Any]:
        """Returns the report as a json-ready dict."""
        data: Dict[str, Any] = {
            "regime": self.regime.value,
            "condition": self._condition.to_json(),
        }
        delta = [x.to_json(window) for x in self._delta]
        if self._primitive is not None:
            data["count"] = len(self._primitive)
            data["primitive"] = [pair.to_json(window) for pair in self._primitive]
            return data
        group = self.weights.group
        if self._condition.satisfied:
            families = [
                {
                    "family": "set",
                    "pairs": "(X, H_X) for every prime invariant X",
                    "principal": "X = g + sg for every g in " + str(group),
                    "delta": delta,
                }
            ]
            if self._point_family:
                families.append(
                    {"family": "point", "pairs": "(g + sg, H | {g}) for every g in " + str(group)}
                )
            data["families"] = families
            return data
        data["components"] = {
            "circle": {
                "group": str(self._condition.quotient),
                "points": "([g], theta) for [g] in " + str(self._condition.quotient) + ", theta in T",
            },
            "point": {"group": str(group), "points": "g in " + str(group)},
            "delta": delta,
        }
        return data

    def to_rdf(
        self: PrimReport, format: str = "turtle", encoding: Optional[str] = "utf-8"
    ) -> Union[bytes, str]:
        """Maps the report to rdf.

        Args:
            format: a serialization format known to rdflib.
            encoding: the encoding to serialize into

        Returns:
            a rdf serialization as a bytes literal according to format.
        """
        return prim_to_graph(self).serialize(format=format, encoding=encoding)


def prim_space(weights: WeightSystem, size_limit: int = DEFAULT_SIZE_LIMIT) -> PrimReport:
    """Describes the primitive ideal space.

    Raises:
        SizeLimitError: If a finite group is larger than size_limit.

    Example:
        >>> from oinftyideals import GroupSpec, WeightSystem
        >>> G = GroupSpec(0, [3])
        >>> prim_space(WeightSystem(G, tail=[G.element([1])])).to_json()["count"]
        1
    """
    condition = check_condition(weights)
    if weights.group.is_finite:
        primitive = [
            pair
            for pair in enumerate_pairs(weights, size_limit)
            if not pair.x.is_empty and is_prime_pair(pair)
        ]
        logger.debug("%r has %d primitive ideals", weights, len(primitive))
        return PrimReport(condition, primitive)
    delta = delta_candidates(weights, size_limit)
    if not condition.satisfied:
        return PrimReport(condition, delta=delta)
    zero = weights.group.zero()
    return PrimReport(condition, delta=delta, point_family=zero not in h_set(semigroup(weights)))


def is_closed_in_prim(
    weights: WeightSystem, y: YPair, lambda_sets: Iterable[InvariantSet]
) -> bool:
    """Decides whether ``Y | Xinf | Lambda`` is a closed set of primitive ideals.

    It is closed exactly when ``(Y, Xinf)`` is a valid Y-pair and Lambda
    holds exactly the non-principal prime sets whose circles all lie in Y.
    Delta is taken from the known candidates plus the members of Lambda.

    Raises:
        ConditionNotViolatedError: If the condition holds.
    """
    condition = check_condition(weights)
    if condition.satisfied:
        raise ConditionNotViolatedError(weights.to_json(), "the condition holds")
    if not validate_ypair(y):
        return False
    circles = y.circles()
    given = list(lambda_sets)
    if not all(in_delta(x) and saturate(condition, x).issubset(circles) for x in given):
        return False
    expected = [x for x in delta_candidates(weights) if x.issubset(circles)]
    return all(x in given for x in expected)
