"""Condition module deciding whether every ideal is gauge invariant.

An index i passes when its weight has infinite order, or when some nonempty
word whose first letter is not i sums to 0. The latter happens exactly when
``-w`` is a word sum for a value w carried by an index other than i. At most
one index can fail; the failing index then splits off the circle component
of the primitive ideal space over ``Gamma / <w_i>``.
"""
from __future__ import annotations

from enum import Enum
import logging
from typing import Any, Dict, List, Optional

from .abelian import (
    GroupElem,
    GroupSpec,
    INFINITE,
    order_of,
    Projection,
    quotient,
    subgroup_generated,
)
from .exceptions import ConditionNotViolatedError, InternalInvariantBrokenError
from .invariant import InvariantSet
from .monoid import contains, WeightSystem

logger = logging.getLogger(__name__)


class ConditionStatus(str, Enum):
    """Outcome of the condition check."""

    SATISFIED = "satisfied"
    VIOLATED = "violated"


class ConditionReport:
    """Result of check_condition.

    A violated report carries the failing index, the order K of its weight
    and the quotient of the group by the subgroup that weight generates.
    """

    __slots__ = ("_weights", "_status", "_index", "_order", "_projection")

    def __init__(
        self,
        weights: WeightSystem,
        status: ConditionStatus,
        index: Optional[int] = None,
        order: Optional[int] = None,
        projection: Optional[Projection] = None,
    ) -> None:
        """Inits a report."""
        self._weights = weights
        self._status = status
        self._index = index
        self._order = order
        self._projection = projection

    @property
    def weights(self: ConditionReport) -> WeightSystem:
        """WeightSystem: the checked weights."""
        return self._weights

    @property
    def status(self: ConditionReport) -> ConditionStatus:
        """ConditionStatus: satisfied or violated."""
        return self._status

    @property
    def satisfied(self: ConditionReport) -> bool:
        """bool: True when every index passes."""
        return self._status is ConditionStatus.SATISFIED

    @property
    def index(self: ConditionReport) -> int:
        """int: the failing index."""
        return self._violated()._index  # type: ignore[return-value]

    @property
    def order(self: ConditionReport) -> int:
        """int: K, the order of the failing weight."""
        return self._violated()._order  # type: ignore[return-value]

    @property
    def weight(self: ConditionReport) -> GroupElem:
        """GroupElem: the failing weight."""
        return self._weights.weight(self.index)

    @property
    def projection(self: ConditionReport) -> Projection:
        """Projection: the map onto the quotient by the failing weight."""
        return self._violated()._projection  # type: ignore[return-value]

    @property
    def quotient(self: ConditionReport) -> GroupSpec:
        """GroupSpec: the quotient by the failing weight."""
        return self.projection.target

    def _violated(self: ConditionReport) -> ConditionReport:
        if self.satisfied:
            raise ConditionNotViolatedError(
                self._weights.to_json(), "the condition holds, no index fails"
            )
        return self

    def to_json(self: ConditionReport) -> Dict[str, Any]:
        """Returns the report as a json-ready dict."""
        if self.satisfied:
            return {"status": self._status.value}
        return {
            "status": self._status.value,
            "index": self._index,
            "K": self._order,
            "weight": self.weight.to_json(),
            "quotient": str(self.quotient),
            "quotient_group": self.quotient.to_json(),
        }

    def __repr__(self: ConditionReport) -> str:
        if self.satisfied:
            return "ConditionReport(satisfied)"
        return f"ConditionReport(violated, index={self._index}, K={self._order})"


def index_passes(weights: WeightSystem, i: int) -> bool:
    """Returns True when index i meets the condition."""
    if order_of(weights.weight(i)) == INFINITE:
        return True
    return any(contains(weights, -u) for u in weights.values_except(i))


def check_condition(weights: WeightSystem) -> ConditionReport:
    """Checks every index class of the weights.

    Prefix indices are checked one by one; one period of the tail covers
    every tail index.

    Raises:
        InternalInvariantBrokenError: If two indices fail.

    Example:
        >>> from oinftyideals import GroupSpec, WeightSystem
        >>> Z = GroupSpec(1)
        >>> W = WeightSystem(Z, prefix=[Z.element([0])], tail=[Z.element([1])])
        >>> check_condition(W).to_json()["index"]
        1
    """
    period = len(weights.prefix) + len(weights.tail)
    failing: List[int] = [i for i in range(1, period + 1) if not index_passes(weights, i)]
    if len(failing) > 1:
        raise InternalInvariantBrokenError(
            failing, f"indices {failing} all fail the condition for {weights!r}"
        )
    if not failing:
        logger.debug("condition satisfied for %r", weights)
        return ConditionReport(weights, ConditionStatus.SATISFIED)
    i = failing[0]
    w = weights.weight(i)
    _, projection = quotient(weights.group, subgroup_generated([w], weights.group))
    logger.debug("condition violated at index %d for %r", i, weights)
    return ConditionReport(
        weights, ConditionStatus.VIOLATED, i, int(order_of(w)), projection
    )


def escape_set(report: ConditionReport) -> InvariantSet:
    """Returns sg1, the word sums whose first letter avoids the failing index."""
    weights = report.weights
    return InvariantSet.principal(weights, weights.values_except(report.index))
