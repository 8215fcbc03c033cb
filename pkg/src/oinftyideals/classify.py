"""Classify module gathering every classification step in one namespace.

Example:
    >>> from oinftyideals import classify, GroupSpec, WeightSystem
    >>>
    >>> G = GroupSpec(0, [3])
    >>> W = classify.WeightSystem(G, tail=[G.element([1])])
    >>> classify.check_condition(W).satisfied, len(classify.enumerate_ideals(W))
    (True, 2)
"""
from .condition import (
    check_condition,
    ConditionReport,
    ConditionStatus,
    escape_set,
    index_passes,
)
from .lattice import enumerate_ideals, IdealLattice, IdealNode
from .monoid import WeightSystem
from .prim import is_closed_in_prim, prim_space, PrimReport, Regime
from .prime import (
    delta_candidates,
    in_delta,
    is_prime_pair,
    is_prime_set,
    is_principal,
    point_pair,
    principal_base,
    set_pair,
)
from .structure import (
    connes_spectrum,
    fiber_report,
    FiberEntry,
    flags,
    k_theory,
    KTheoryReport,
    StructureFlags,
)
from .ypair import (
    CirclePoint,
    gauge_image,
    local_subquotients,
    LocalSubquotients,
    make_point_primitive,
    rotate,
    saturate,
    underlying_pair,
    validate_ypair,
    YPair,
    ypair_contains,
    ypair_from_pair,
)

__all__ = [
    "CirclePoint",
    "ConditionReport",
    "ConditionStatus",
    "FiberEntry",
    "IdealLattice",
    "IdealNode",
    "KTheoryReport",
    "LocalSubquotients",
    "PrimReport",
    "Regime",
    "StructureFlags",
    "WeightSystem",
    "YPair",
    "check_condition",
    "connes_spectrum",
    "delta_candidates",
    "enumerate_ideals",
    "escape_set",
    "fiber_report",
    "flags",
    "gauge_image",
    "in_delta",
    "index_passes",
    "is_closed_in_prim",
    "is_prime_pair",
    "is_prime_set",
    "is_principal",
    "k_theory",
    "local_subquotients",
    "make_point_primitive",
    "point_pair",
    "prim_space",
    "principal_base",
    "rotate",
    "saturate",
    "set_pair",
    "underlying_pair",
    "validate_ypair",
    "ypair_contains",
    "ypair_from_pair",
]
