"""Prime module for primeness of invariant sets and pairs.

On a discrete group an invariant set X is prime when any two of its points
have a common ancestor in X, i.e. some γ in X with both points in γ + sg.
A valid pair is prime exactly when X is prime with ``Xinf = H_X``, or when X
is principal, ``X = γ + sg``, with ``Xinf = H_X | {γ}`` and γ not in H_X.
"""
from __future__ import annotations

import logging
from typing import List, Optional

from .abelian import GroupElem, subgroup_generated
from .invariant import (
    DEFAULT_SIZE_LIMIT,
    enumerate_invariant_sets,
    h_set,
    InvariantPair,
    InvariantSet,
    semigroup,
    SetKind,
    up_closures,
)
from .monoid import contains, is_full_group, WeightSystem

logger = logging.getLogger(__name__)


def _generators(x: InvariantSet) -> List[GroupElem]:
    return list(x.bases + x.points)


def principal_base(x: InvariantSet) -> Optional[GroupElem]:
    """Returns some γ with ``X = γ + sg``, or None when X is not principal."""
    weights = x.weights
    if x.kind is SetKind.EMPTY:
        return None
    if x.kind is SetKind.FULL:
        return weights.group.zero() if is_full_group(weights) else None
    if x.kind is SetKind.EXPLICIT:
        group = weights.group
        ups = up_closures(weights)
        for g in x:
            if ups[group.index_of(g)] == x.bits:
                return g
        return None
    generators = _generators(x)
    for c in generators:
        if all(contains(weights, g - c) for g in generators):
            return c
    return None


def is_prime_set(x: InvariantSet) -> bool:
    """Returns True when every two points of X have a common ancestor in X.

    Finite groups are scanned pairwise. On infinite groups the whole group is
    prime exactly when the weights generate it, and a principal union is
    prime exactly when it is principal.

    Example:
        >>> from oinftyideals import GroupSpec, WeightSystem
        >>> G = GroupSpec(0, [4])
        >>> W = WeightSystem(G, tail=[G.element([2])])
        >>> is_prime_set(InvariantSet.full(W))
        False
    """
    weights = x.weights
    if x.is_empty:
        return True
    if x.kind is SetKind.FULL:
        return subgroup_generated(list(weights.values), weights.group).is_full
    if x.kind is SetKind.PRINCIPAL:
        return principal_base(x) is not None
    group = weights.group
    ups = up_closures(weights)
    members = [group.index_of(g) for g in x]
    ancestors = {
        i: sum(1 << j for j in members if ups[j] >> i & 1) for i in members
    }
    return all(ancestors[a] & ancestors[b] for a in members for b in members if a < b)


def is_principal(x: InvariantSet) -> bool:
    """Returns True when ``X = γ + sg`` for some γ."""
    return principal_base(x) is not None


def in_delta(x: InvariantSet) -> bool:
    """Returns True for nonempty prime invariant sets that are not principal."""
    return not x.is_empty and is_prime_set(x) and not is_principal(x)


def is_prime_pair(pair: InvariantPair) -> bool:
    """Decides primeness of a valid pair by the two admissible shapes.

    Example:
        >>> from oinftyideals import GroupSpec, WeightSystem
        >>> G = GroupSpec(0, [3])
        >>> W = WeightSystem(G, tail=[G.element([1])])
        >>> X = InvariantSet.full(W)
        >>> is_prime_pair(InvariantPair(X, X))
        True
    """
    x, xinf = pair.x, pair.xinf
    h = h_set(x)
    if is_prime_set(x) and xinf == h:
        return True
    weights = pair.weights
    candidates = list(x) if x.kind is SetKind.EXPLICIT else _generators(x) + list(xinf.points)
    for c in candidates:
        if c in h or semigroup(weights, c) != x:
            continue
        if xinf == h | InvariantSet.explicit(weights, [c]):
            return True
    return False


def point_pair(weights: WeightSystem, gamma: GroupElem) -> InvariantPair:
    """Returns ``(γ + sg, H | {γ})``, the pair of the primitive ideal at γ."""
    x = semigroup(weights, gamma)
    return InvariantPair(x, h_set(x) | InvariantSet.explicit(weights, [gamma]))


def set_pair(x: InvariantSet) -> InvariantPair:
    """Returns ``(X, H_X)``."""
    return InvariantPair(x, h_set(x))


def delta_candidates(
    weights: WeightSystem, size_limit: int = DEFAULT_SIZE_LIMIT
) -> List[InvariantSet]:
    """Returns the non-principal prime sets known without enumeration.

    On finite groups these are all of them; on infinite groups only the whole
    group is examined, other candidates are tested with ``in_delta``.
    """
    if weights.group.is_finite:
        return [x for x in enumerate_invariant_sets(weights, size_limit) if in_delta(x)]
    full = InvariantSet.full(weights)
    return [full] if in_delta(full) else []
