"""Structure module for spectrum, structural flags, K-theory and fibers.

Example:
    >>> from oinftyideals import GroupSpec, WeightSystem
    >>>
    >>> Z = GroupSpec(1)
    >>> W = WeightSystem(Z, tail=[Z.element([1])])
    >>> f = flags(W)
    >>> f.simple, f.primitive, f.af_embeddable_sufficient
    (False, True, True)
"""
from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Union

from .abelian import GroupSpec, subgroup_generated
from .condition import check_condition, ConditionReport
from .exceptions import InvalidElementError
from .invariant import h_set, InvariantPair, InvariantSet, semigroup, x_n
from .monoid import contains, is_full_group, WeightSystem

logger = logging.getLogger(__name__)

AF_LABEL = "sufficient only"
COUNTABLE = "countably infinite"


def connes_spectrum(weights: WeightSystem) -> InvariantSet:
    """Returns the strong Connes spectrum ``{0} | H_sg``.

    Example:
        >>> from oinftyideals import GroupSpec, WeightSystem
        >>> G = GroupSpec(0, [4])
        >>> sorted(g.coords[0] for g in connes_spectrum(WeightSystem(G, tail=[G.element([2])])))
        [0, 2]
    """
    zero = InvariantSet.explicit(weights, [weights.group.zero()])
    return zero | h_set(semigroup(weights))


class StructureFlags:
    """Simplicity, primitivity and the AF-embeddability test of an action."""

    __slots__ = ("_simple", "_primitive", "_af_sufficient", "_condition")

    def __init__(
        self, simple: bool, primitive: bool, af_sufficient: bool, condition: ConditionReport
    ) -> None:
        """Inits the flags."""
        self._simple = simple
        self._primitive = primitive
        self._af_sufficient = af_sufficient
        self._condition = condition

    @property
    def simple(self: StructureFlags) -> bool:
        """bool: True when 0 is the only proper ideal."""
        return self._simple

    @property
    def purely_infinite_if_simple(self: StructureFlags) -> bool:
        """bool: simple crossed products here are purely infinite."""
        return self._simple

    purely_infinite = purely_infinite_if_simple

    @property
    def primitive(self: StructureFlags) -> bool:
        """bool: True when the weights generate the group."""
        return self._primitive

    @property
    def af_embeddable_sufficient(self: StructureFlags) -> bool:
        """bool: True when no ``-w`` is a word sum.

        A sufficient condition for AF-embeddability; False asserts nothing.
        """
        return self._af_sufficient

    @property
    def condition(self: StructureFlags) -> ConditionReport:
        """ConditionReport: the condition check."""
        return self._condition

    def to_json(self: StructureFlags) -> Dict[str, Any]:
        """Returns the flags as a json-ready dict."""
        return {
            "simple": self._simple,
            "purely_infinite": self.purely_infinite_if_simple,
            "primitive": self._primitive,
            "af_embeddable_sufficient": self._af_sufficient,
            "af_embeddable_test": AF_LABEL,
            "condition": self._condition.status.value,
        }


def flags(weights: WeightSystem) -> StructureFlags:
    """Returns the structural flags of the weights."""
    group = weights.group
    simple = bool(is_full_group(weights))
    primitive = subgroup_generated(list(weights.values), group).is_full
    af_sufficient = not any(contains(weights, -w) for w in weights.values)
    logger.debug("flags of %r: simple=%s primitive=%s", weights, simple, primitive)
    return StructureFlags(simple, primitive, af_sufficient, check_condition(weights))


class KTheoryReport:
    """K-groups of the crossed product, those of ``C_0(Gamma)``.

    ``K_0`` is free abelian of rank ``|Gamma|`` and ``K_1`` vanishes.
    """

    __slots__ = ("_group",)

    def __init__(self, group: GroupSpec) -> None:
        """Inits the report."""
        self._group = group

    @property
    def k0_rank(self: KTheoryReport) -> Union[int, str]:
        """Union[int, str]: rank of K_0, or "countably infinite"."""
        return int(self._group.order) if self._group.is_finite else COUNTABLE

    @property
    def k1(self: KTheoryReport) -> int:
        """int: K_1 is trivial."""
        return 0

    def to_json(self: KTheoryReport) -> Dict[str, Any]:
        """Returns the report as a json-ready dict."""
        return {
            "K0_rank": self.k0_rank,
            "K1": self.k1,
            "derived_from": "C_0(Gamma) includes as a KK-equivalence",
        }


def k_theory(weights: WeightSystem) -> KTheoryReport:
    """Returns the K-theory report."""
    return KTheoryReport(weights.group)


class FiberEntry:
    """One level k of the fibration at depth n: ``M_(n^k) (x) C_0(S)``."""

    __slots__ = ("_k", "_size", "_spectrum")

    def __init__(self, k: int, size: int, spectrum: InvariantSet) -> None:
        """Inits the entry."""
        self._k = k
        self._size = size
        self._spectrum = spectrum

    @property
    def k(self: FiberEntry) -> int:
        """int: the level."""
        return self._k

    @property
    def size(self: FiberEntry) -> int:
        """int: the matrix size n^k."""
        return self._size

    @property
    def spectrum(self: FiberEntry) -> InvariantSet:
        """InvariantSet: the spectrum S."""
        return self._spectrum

    def to_json(self: FiberEntry, window: Optional[int] = None) -> Dict[str, Any]:
        """Returns the entry as a json-ready dict."""
        return {"k": self._k, "matrix_size": self._size, "spectrum": self._spectrum.to_json(window)}


def fiber_report(pair: InvariantPair, n: int) -> List[FiberEntry]:
    """Returns the levels ``k = 0..n``; below n the spectrum is ``X^(n)``, at n it is X.

    Raises:
        InvalidElementError: If n is not positive.
    """
    if n < 1:
        raise InvalidElementError(n, "n must be positive")
    xn = x_n(pair, n)
    return [FiberEntry(k, n ** k, xn if k < n else pair.x) for k in range(n + 1)]
