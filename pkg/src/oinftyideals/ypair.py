"""Ypair module for ideals when the condition fails at one index.

Such an ideal is given by a pair ``(Y, Xinf)``. Y is a closed subset of
``Gamma' x T``, where ``Gamma'`` is the quotient by the failing weight, and
Xinf a subset of Gamma. Here Y is stored as full circles over the classes of
a set ``full`` in Gamma, plus finitely many points ``([g], theta)`` with
exact rational angles in ``[0, 1)``.

Example:
    >>> from fractions import Fraction
    >>> from oinftyideals import GroupSpec, WeightSystem
    >>> from oinftyideals.condition import check_condition
    >>>
    >>> Z = GroupSpec(1)
    >>> W = WeightSystem(Z, prefix=[Z.element([0])], tail=[Z.element([1])])
    >>> report = check_condition(W)
    >>> Y = make_point_primitive(W, report, Z.zero(), Fraction(1, 2))
    >>> validate_ypair(Y)
    True
    >>> [str(p) for p in rotate(Y, Fraction(3, 4)).points]
    ['([0], 3/4)']
"""
from __future__ import annotations

from fractions import Fraction
import logging
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from .abelian import GroupElem
from .condition import ConditionReport, escape_set
from .exceptions import (
    ConditionNotViolatedError,
    InternalInvariantBrokenError,
    InvalidElementError,
    UnsupportedRepresentationError,
)
from .invariant import (
    h_set,
    InvariantPair,
    InvariantSet,
    is_invariant,
    semigroup,
    validate_pair,
)
from .monoid import WeightSystem

logger = logging.getLogger(__name__)

Angle = Union[Fraction, int, str]


def _angle(theta: Angle) -> Fraction:
    try:
        return Fraction(theta) % 1
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidElementError(theta, f"{theta!r} is not a rational angle") from e


def format_angle(theta: Fraction) -> str:
    """Returns an angle as a "p/q" string."""
    return f"{theta.numerator}/{theta.denominator}"


class CirclePoint:
    """A point ``([g], theta)`` of ``Gamma' x T``."""

    __slots__ = ("_coset", "_angle")

    def __init__(self, coset: GroupElem, angle: Angle) -> None:
        """Inits a point with the angle reduced into [0, 1)."""
        self._coset = coset
        self._angle = _angle(angle)

    @property
    def coset(self: CirclePoint) -> GroupElem:
        """GroupElem: the class in the quotient."""
        return self._coset

    @property
    def angle(self: CirclePoint) -> Fraction:
        """Fraction: the angle in [0, 1)."""
        return self._angle

    def rotate(self: CirclePoint, t: Angle) -> CirclePoint:
        """Returns ``([g], theta - t)``."""
        return CirclePoint(self._coset, self._angle - _angle(t))

    def _key(self: CirclePoint) -> Tuple[Tuple[int, ...], Fraction]:
        return (self._coset.coords, self._angle)

    def __eq__(self: CirclePoint, other: object) -> bool:
        if not isinstance(other, CirclePoint):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self: CirclePoint, other: CirclePoint) -> bool:
        return self._key() < other._key()

    def __hash__(self: CirclePoint) -> int:
        return hash(self._key())

    def __repr__(self: CirclePoint) -> str:
        return f"CirclePoint({self._coset!r}, {format_angle(self._angle)!r})"

    def __str__(self: CirclePoint) -> str:
        return f"([{self._coset}], {format_angle(self._angle)})"

    def to_json(self: CirclePoint) -> Dict[str, Any]:
        """Returns the point as a json-ready dict."""
        return {"coset": self._coset.to_json(), "angle": format_angle(self._angle)}


class YPair:
    """A pair ``(Y, Xinf)`` classifying an ideal when the condition fails.

    Args:
        report: a violated condition report.
        full: the classes of this set carry full circles in Y.
        points: extra points of Y.
        xinf: the set Xinf.

    Raises:
        ConditionNotViolatedError: If the report is satisfied.
    """

    __slots__ = ("_report", "_full", "_points", "_xinf")

    def __init__(
        self,
        report: ConditionReport,
        full: InvariantSet,
        points: Iterable[CirclePoint],
        xinf: InvariantSet,
    ) -> None:
        """Inits a Y-pair; points on full circles are dropped."""
        if report.satisfied:
            raise ConditionNotViolatedError(
                report.weights.to_json(), "Y-pairs need a failing index"
            )
        self._report = report
        self._full = full
        saturated = saturate(report, full)
        self._points = tuple(
            sorted(
                {
                    p
                    for p in points
                    if report.projection.lift(p.coset) not in saturated
                }
            )
        )
        self._xinf = xinf

    @property
    def report(self: YPair) -> ConditionReport:
        """ConditionReport: the violated condition."""
        return self._report

    @property
    def weights(self: YPair) -> WeightSystem:
        """WeightSystem: the weights of the action."""
        return self._report.weights

    @property
    def full(self: YPair) -> InvariantSet:
        """InvariantSet: its classes carry full circles."""
        return self._full

    @property
    def points(self: YPair) -> Tuple[CirclePoint, ...]:
        """Tuple[CirclePoint, ...]: points of Y off the full circles."""
        return self._points

    @property
    def xinf(self: YPair) -> InvariantSet:
        """InvariantSet: the set Xinf."""
        return self._xinf

    def covers_coset(self: YPair, coset: GroupElem) -> bool:
        """Returns True when Y holds the whole circle over coset."""
        return self._report.projection.lift(coset) in saturate(self._report, self._full)

    def contains_point(self: YPair, point: CirclePoint) -> bool:
        """Returns True when point lies in Y."""
        return point in self._points or self.covers_coset(point.coset)

    def circles(self: YPair) -> InvariantSet:
        """Returns the preimage of the full circles of Y in Gamma."""
        return saturate(self._report, self._full)

    def support(self: YPair) -> InvariantSet:
        """Returns X, the preimage in Gamma of the projection of Y."""
        lifted = [self._report.projection.lift(p.coset) for p in self._points]
        return self.circles() | saturate(
            self._report, InvariantSet.explicit(self.weights, lifted)
        )

    def issuperset(self: YPair, other: YPair) -> bool:
        """Returns True when Y contains other's Y."""
        return other.circles().issubset(self.circles()) and all(
            self.contains_point(p) for p in other._points
        )

    def __eq__(self: YPair, other: object) -> bool:
        if not isinstance(other, YPair):
            return NotImplemented
        return ypair_contains(self, other) and ypair_contains(other, self)

    def __hash__(self: YPair) -> int:
        return hash((self.weights, self._points))

    def __repr__(self: YPair) -> str:
        return f"YPair({self._full!r}, {[str(p) for p in self._points]}, {self._xinf!r})"

    def to_json(self: YPair, window: Optional[int] = None) -> Dict[str, Any]:
        """Returns the Y-pair as a json-ready dict."""
        return {
            "full_circles": self._full.to_json(window),
            "points": [p.to_json() for p in self._points],
            "xinf": self._xinf.to_json(window),
        }


def _require_violated(report: ConditionReport) -> None:
    if report.satisfied:
        raise ConditionNotViolatedError(
            report.weights.to_json(), "the condition holds, every ideal is gauge invariant"
        )


def saturate(report: ConditionReport, s: InvariantSet) -> InvariantSet:
    """Returns ``s + <w_i>``, the union of the classes meeting s."""
    w = report.weight
    return s.union(*(s.translate(w * k) for k in range(1, report.order)))


def validate_ypair(y: YPair) -> bool:
    """Returns True when ``(X, Xinf)`` is a valid pair and ``[X^(1)] x T <= Y``.

    X is the support of Y and ``X^(1)`` is Xinf together with the translates
    of X by the weights of every index but the failing one.
    """
    weights = y.weights
    x = y.support()
    if not (is_invariant(x) and validate_pair(x, y.xinf)):
        return False
    x1 = y.xinf.union(*(x.translate(v) for v in weights.values_except(y.report.index)))
    return x1.issubset(y.circles())


def make_point_primitive(
    weights: WeightSystem, report: ConditionReport, gamma: GroupElem, theta: Angle
) -> YPair:
    """Returns the Y-pair of the primitive ideal at ``([gamma], theta)``.

    Y is the point itself together with the circles over ``gamma + sg1``,
    and Xinf is ``H`` of ``gamma + sg``.

    Raises:
        ConditionNotViolatedError: If the report is satisfied.
        InternalInvariantBrokenError: If gamma lies in its own H set.
    """
    _require_violated(report)
    if gamma.group != weights.group:
        raise InvalidElementError(gamma.coords, f"{gamma} is not in {weights.group}")
    xinf = h_set(semigroup(weights, gamma))
    if gamma in xinf:
        raise InternalInvariantBrokenError(gamma.to_json(), f"{gamma} lies in H of {gamma} + sg")
    full = escape_set(report).translate(gamma)
    point = CirclePoint(report.projection(gamma), theta)
    return YPair(report, full, [point], xinf)


def rotate(y: YPair, t: Angle) -> YPair:
    """Returns ``Y_t``, every angle moved from theta to ``theta - t``."""
    return YPair(y.report, y.full, [p.rotate(t) for p in y.points], y.xinf)


def gauge_image(y: YPair, t: Angle) -> YPair:
    """Returns the Y-pair of the ideal moved by the gauge action at t.

    The gauge action rotates by ``K t`` where K is the order of the failing
    weight.
    """
    return rotate(y, _angle(t) * y.report.order)


def ypair_contains(first: YPair, second: YPair) -> bool:
    """Returns True when the ideal of first is contained in the ideal of second.

    Raises:
        UnsupportedRepresentationError: If the pairs belong to different weights.
    """
    if first.weights != second.weights:
        raise UnsupportedRepresentationError(second, "Y-pairs over different weights")
    return first.issuperset(second) and second.xinf.issubset(first.xinf)


def ypair_from_pair(report: ConditionReport, pair: InvariantPair) -> YPair:
    """Returns ``([X] x T, Xinf)``, the Y-pair of a gauge-invariant ideal."""
    _require_violated(report)
    return YPair(report, pair.x, (), pair.xinf)


def underlying_pair(y: YPair) -> InvariantPair:
    """Returns ``(X, Xinf)``, the pair of the largest gauge-invariant subideal."""
    return InvariantPair(y.support(), y.xinf)


class LocalSubquotients:
    """The two subquotients cut out around one point gamma.

    With ``X1 = gamma + sg`` and ``X2 = gamma + sg1`` the pairs
    ``(X1, X1) >= (X1, X2) >= (X2, X2)`` give ideals whose successive
    quotients are ``K (x) C(T)`` for the circle at gamma and ``K (x) C(P)``
    with P the K points ``gamma + k w_i``.
    """

    __slots__ = ("_gamma", "_pairs", "_points", "_order")

    def __init__(
        self,
        gamma: GroupElem,
        pairs: Tuple[InvariantPair, InvariantPair, InvariantPair],
        points: List[GroupElem],
        order: int,
    ) -> None:
        """Inits the report."""
        self._gamma = gamma
        self._pairs = pairs
        self._points = points
        self._order = order

    @property
    def gamma(self: LocalSubquotients) -> GroupElem:
        """GroupElem: the base point."""
        return self._gamma

    @property
    def pairs(self: LocalSubquotients) -> Tuple[InvariantPair, InvariantPair, InvariantPair]:
        """Tuple: the pairs ``(X1, X1)``, ``(X1, X2)`` and ``(X2, X2)``."""
        return self._pairs

    @property
    def circles(self: LocalSubquotients) -> int:
        """int: the number of circles in the first subquotient."""
        return 1

    @property
    def points(self: LocalSubquotients) -> List[GroupElem]:
        """List[GroupElem]: the points of ``X1 - X2``."""
        return list(self._points)

    def to_json(self: LocalSubquotients, window: Optional[int] = None) -> Dict[str, Any]:
        """Returns the report as a json-ready dict."""
        names = ("lower", "middle", "upper")
        return {
            "gamma": self._gamma.to_json(),
            "K": self._order,
            "pairs": {n: p.to_json(window) for n, p in zip(names, self._pairs)},
            "circle_quotient": {
                "algebra": "K (x) C(X x T)",
                "circles": self.circles,
                "points": [self._gamma.to_json()],
            },
            "point_quotient": {
                "algebra": "K (x) C(X1 - X2)",
                "size": len(self._points),
                "points": [g.to_json() for g in self._points],
            },
        }


def local_subquotients(
    weights: WeightSystem, report: ConditionReport, gamma: GroupElem
) -> LocalSubquotients:
    """Returns the subquotients of the ideals of ``gamma + sg`` and ``gamma + sg1``.

    Raises:
        ConditionNotViolatedError: If the report is satisfied.
        InternalInvariantBrokenError: If ``gamma + k w_i`` falls into ``gamma + sg1``.
    """
    _require_violated(report)
    if gamma.group != weights.group:
        raise InvalidElementError(gamma.coords, f"{gamma} is not in {weights.group}")
    x1 = semigroup(weights, gamma)
    x2 = escape_set(report).translate(gamma)
    points = [gamma + report.weight * k for k in range(report.order)]
    for p in points:
        if p in x2:
            raise InternalInvariantBrokenError(p.to_json(), f"{p} lies in {gamma} + sg1")
    pairs = (InvariantPair(x1, x1), InvariantPair(x1, x2), InvariantPair(x2, x2))
    logger.debug("local subquotients at %s have %d points", gamma, len(points))
    return LocalSubquotients(gamma, pairs, points, report.order)
