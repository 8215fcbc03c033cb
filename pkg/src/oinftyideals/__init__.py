"""Oinftyideals package.

Modules:
    abelian
    monoid
    invariant
    condition
    prime
    lattice
    ypair
    prim
    structure
    classify
    instance
    rdf
    cli
"""
try:
    from importlib.metadata import version, PackageNotFoundError  # type: ignore
except ImportError:  # pragma: no cover
    from importlib_metadata import version, PackageNotFoundError  # type: ignore

try:
    __version__ = version(__name__)
except PackageNotFoundError:  # pragma: no cover
    __version__ = "unknown"

from . import classify
from .abelian import (
    GroupElem,
    GroupSpec,
    normalize,
    order_of,
    quotient,
    subgroup_generated,
    SubgroupDescriptor,
)
from .exceptions import (
    BudgetExceededError,
    ConditionNotViolatedError,
    Error,
    InternalInvariantBrokenError,
    InvalidElementError,
    InvalidGroupError,
    InvalidInstanceError,
    NotFiniteError,
    SizeLimitError,
    UnsupportedRepresentationError,
)
from .instance import InstanceSpec
from .invariant import (
    enumerate_invariant_sets,
    enumerate_pairs,
    h_set,
    InvariantPair,
    InvariantSet,
    is_invariant,
    pair_union,
    validate_pair,
    x_n,
)
from .monoid import (
    closure_table,
    contains,
    is_full_group,
    MembershipCertificate,
    sg1_contains,
    WeightSystem,
)
