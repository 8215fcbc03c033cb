"""Abelian module for finitely generated abelian groups.

Groups are kept in invariant-factor form ``Z^r + Z/n_1 + ... + Z/n_k`` with
each ``n_j`` dividing the next. Elements are integer vectors whose torsion
coordinates are reduced into ``[0, n_j)``.

Example:
    >>> from oinftyideals import GroupSpec
    >>>
    >>> group = GroupSpec(1, [2])
    >>> g = group.element([3, 1])
    >>> (g + g).coords
    (6, 0)
    >>> str(normalize(2, [[2, 4]]))
    'Z + Z/2'
"""
from __future__ import annotations

import itertools
import logging
import math
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from sympy.core.intfunc import igcdex

from .exceptions import InvalidElementError, InvalidGroupError, NotFiniteError

logger = logging.getLogger(__name__)

INFINITE = math.inf

IntMatrix = List[List[int]]


class GroupSpec:
    """A finitely generated abelian group in invariant-factor form.

    Args:
        free_rank: number of infinite cyclic factors.
        torsion: invariant factors, each at least 2 and dividing the next.

    Raises:
        InvalidGroupError: If the rank is negative or the torsion list is not \
            a divisibility chain of factors at least 2.
    """

    __slots__ = ("_free_rank", "_torsion")

    _free_rank: int
    _torsion: Tuple[int, ...]

    def __init__(self, free_rank: int = 0, torsion: Optional[Sequence[int]] = None) -> None:
        """Inits an object with validated values."""
        if not isinstance(free_rank, int) or isinstance(free_rank, bool) or free_rank < 0:
            raise InvalidGroupError(free_rank, "free_rank must be a nonnegative integer")
        factors = tuple(torsion or ())
        for factor in factors:
            if not isinstance(factor, int) or isinstance(factor, bool) or factor < 2:
                raise InvalidGroupError(factors, f"invariant factor {factor!r} is not >= 2")
        for small, large in zip(factors, factors[1:]):
            if large % small:
                raise InvalidGroupError(
                    factors, f"{small} does not divide {large}; use normalize()"
                )
        self._free_rank = free_rank
        self._torsion = factors

    @property
    def free_rank(self: GroupSpec) -> int:
        """int: number of infinite cyclic factors."""
        return self._free_rank

    @property
    def torsion(self: GroupSpec) -> Tuple[int, ...]:
        """Tuple[int, ...]: invariant factors."""
        return self._torsion

    @property
    def rank(self: GroupSpec) -> int:
        """int: length of element vectors."""
        return self._free_rank + len(self._torsion)

    @property
    def moduli(self: GroupSpec) -> Tuple[int, ...]:
        """Tuple[int, ...]: per coordinate modulus, 0 for free coordinates."""
        return (0,) * self._free_rank + self._torsion

    @property
    def is_finite(self: GroupSpec) -> bool:
        """bool: True when the free rank is zero."""
        return self._free_rank == 0

    @property
    def order(self: GroupSpec) -> Union[int, float]:
        """Union[int, float]: number of elements, INFINITE when free rank > 0."""
        if not self.is_finite:
            return INFINITE
        return math.prod(self._torsion)

    def element(self: GroupSpec, coords: Sequence[int]) -> GroupElem:
        """Returns the element with the given coordinates, reducing torsion parts."""
        return GroupElem(self, coords)

    def zero(self: GroupSpec) -> GroupElem:
        """Returns the identity element."""
        return GroupElem._make(self, (0,) * self.rank)

    def elements(self: GroupSpec) -> Iterator[GroupElem]:
        """Iterates over a finite group in index order.

        Yields:
            GroupElem: the elements, last coordinate varying fastest.

        Raises:
            NotFiniteError: If the group has positive free rank.
        """
        if not self.is_finite:
            raise NotFiniteError(self, f"{self} is infinite")
        for coords in itertools.product(*(range(n) for n in self._torsion)):
            yield GroupElem._make(self, coords)

    def index_of(self: GroupSpec, g: GroupElem) -> int:
        """Returns the position of g in elements()."""
        if not self.is_finite:
            raise NotFiniteError(self, f"{self} is infinite")
        index = 0
        for c, n in zip(g.coords, self._torsion):
            index = index * n + c
        return index

    def element_at(self: GroupSpec, index: int) -> GroupElem:
        """Returns the element at a position of elements()."""
        coords: List[int] = []
        for n in reversed(self._torsion):
            index, c = divmod(index, n)
            coords.append(c)
        return GroupElem._make(self, tuple(reversed(coords)))

    # -
    def to_json(self: GroupSpec) -> Dict[str, Any]:
        """Returns the group as a json-ready dict."""
        return {"free_rank": self._free_rank, "torsion": list(self._torsion)}

    def __eq__(self: GroupSpec, other: object) -> bool:
        if not isinstance(other, GroupSpec):
            return NotImplemented
        return (self._free_rank, self._torsion) == (other._free_rank, other._torsion)

    def __hash__(self: GroupSpec) -> int:
        return hash((self._free_rank, self._torsion))

    def __repr__(self: GroupSpec) -> str:
        return f"GroupSpec({self._free_rank}, {list(self._torsion)})"

    def __str__(self: GroupSpec) -> str:
        parts = []
        if self._free_rank == 1:
            parts.append("Z")
        elif self._free_rank > 1:
            parts.append(f"Z^{self._free_rank}")
        parts.extend(f"Z/{n}" for n in self._torsion)
        return " + ".join(parts) or "0"


class GroupElem:
    """An element of a GroupSpec, stored as a reduced integer vector.

    Raises:
        InvalidElementError: If the coordinates do not fit the group.
    """

    __slots__ = ("_group", "_coords")

    _group: GroupSpec
    _coords: Tuple[int, ...]

    def __init__(self, group: GroupSpec, coords: Sequence[int]) -> None:
        """Inits an element, reducing torsion coordinates."""
        coords = tuple(coords)
        if len(coords) != group.rank:
            raise InvalidElementError(
                list(coords), f"expected {group.rank} coordinates for {group}"
            )
        for c in coords:
            if not isinstance(c, int) or isinstance(c, bool):
                raise InvalidElementError(list(coords), f"coordinate {c!r} is not an integer")
        self._group = group
        self._coords = _reduce(coords, group.moduli)

    @classmethod
    def _make(cls, group: GroupSpec, coords: Tuple[int, ...]) -> GroupElem:
        g = object.__new__(cls)
        g._group = group
        g._coords = coords
        return g

    @property
    def group(self: GroupElem) -> GroupSpec:
        """GroupSpec: the group this element lives in."""
        return self._group

    @property
    def coords(self: GroupElem) -> Tuple[int, ...]:
        """Tuple[int, ...]: reduced coordinates."""
        return self._coords

    @property
    def free_part(self: GroupElem) -> Tuple[int, ...]:
        """Tuple[int, ...]: the free coordinates."""
        return self._coords[: self._group.free_rank]

    @property
    def torsion_part(self: GroupElem) -> Tuple[int, ...]:
        """Tuple[int, ...]: the torsion coordinates."""
        return self._coords[self._group.free_rank :]

    @property
    def is_zero(self: GroupElem) -> bool:
        """bool: True for the identity."""
        return not any(self._coords)

    def _check(self: GroupElem, other: GroupElem) -> None:
        if other._group != self._group:
            raise InvalidElementError(other.coords, f"{other} is not in {self._group}")

    def __add__(self: GroupElem, other: GroupElem) -> GroupElem:
        self._check(other)
        return GroupElem._make(
            self._group,
            _reduce(tuple(a + b for a, b in zip(self._coords, other._coords)), self._group.moduli),
        )

    def __sub__(self: GroupElem, other: GroupElem) -> GroupElem:
        return self + (-other)

    def __neg__(self: GroupElem) -> GroupElem:
        return GroupElem._make(
            self._group, _reduce(tuple(-a for a in self._coords), self._group.moduli)
        )

    def __mul__(self: GroupElem, k: int) -> GroupElem:
        return GroupElem._make(
            self._group, _reduce(tuple(k * a for a in self._coords), self._group.moduli)
        )

    __rmul__ = __mul__

    def __eq__(self: GroupElem, other: object) -> bool:
        if not isinstance(other, GroupElem):
            return NotImplemented
        return self._coords == other._coords and self._group == other._group

    def __lt__(self: GroupElem, other: GroupElem) -> bool:
        return self._coords < other._coords

    def __hash__(self: GroupElem) -> int:
        return hash(self._coords)

    def __repr__(self: GroupElem) -> str:
        return f"GroupElem({list(self._coords)})"

    def __str__(self: GroupElem) -> str:
        if len(self._coords) == 1:
            return str(self._coords[0])
        return "(" + ", ".join(str(c) for c in self._coords) + ")"

    def to_json(self: GroupElem) -> List[int]:
        """Returns the coordinates as a list."""
        return list(self._coords)


def _reduce(coords: Tuple[int, ...], moduli: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(c % n if n else c for c, n in zip(coords, moduli))


def order_of(g: GroupElem, group: Optional[GroupSpec] = None) -> Union[int, float]:
    """Returns the least k >= 1 with k*g = 0, or INFINITE.

    Args:
        g: the element.
        group: the group, defaults to the element's own group.

    Returns:
        the order of g.

    Raises:
        InvalidElementError: If g is not an element of group.

    Example:
        >>> from oinftyideals import GroupSpec
        >>> order_of(GroupSpec(0, [4]).element([1]))
        4
    """
    group = group or g.group
    if g.group != group:
        raise InvalidElementError(g.coords, f"{g} is not in {group}")
    if any(g.free_part):
        return INFINITE
    order = 1
    for c, n in zip(g.torsion_part, group.torsion):
        order = math.lcm(order, n // math.gcd(c, n))
    return order


# - integer matrix normal forms
def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(
    matrix: Sequence[Sequence[int]], columns: Optional[int] = None
) -> Tuple[IntMatrix, IntMatrix, IntMatrix, IntMatrix]:
    """Diagonalizes an integer matrix by unimodular row and column operations.

    Args:
        matrix: an m x n integer matrix given by rows.
        columns: n, needed when the matrix has no rows.

    Returns:
        (D, S, T, T_inv) with D = S * matrix * T, D diagonal with nonnegative
        entries each dividing the next, and T_inv the inverse of T.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = columns if columns is not None else (len(a[0]) if a else 0)
    s = _identity(m)
    t = _identity(n)
    t_inv = _identity(n)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        s[i], s[j] = s[j], s[i]

    def swap_cols(i: int, j: int) -> None:
        for row in itertools.chain(a, t):
            row[i], row[j] = row[j], row[i]
        t_inv[i], t_inv[j] = t_inv[j], t_inv[i]

    def add_row(src: int, dst: int, q: int) -> None:
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        s[dst] = [x + q * y for x, y in zip(s[dst], s[src])]

    def add_col(src: int, dst: int, q: int) -> None:
        for row in itertools.chain(a, t):
            row[dst] += q * row[src]
        t_inv[src] = [x - q * y for x, y in zip(t_inv[src], t_inv[dst])]

    for k in range(min(m, n)):
        entries = [(abs(a[i][j]), i, j) for i in range(k, m) for j in range(k, n) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(k, i)
        swap_cols(k, j)
        while True:
            for i in range(k + 1, m):
                if a[i][k]:
                    add_row(k, i, -(a[i][k] // a[k][k]))
            for j in range(k + 1, n):
                if a[k][j]:
                    add_col(k, j, -(a[k][j] // a[k][k]))
            leftovers = [(abs(a[i][k]), i, k) for i in range(k + 1, m) if a[i][k]]
            leftovers += [(abs(a[k][j]), k, j) for j in range(k + 1, n) if a[k][j]]
            if leftovers:
                _, i, j = min(leftovers)
                swap_rows(k, i)
                swap_cols(k, j)
                continue
            stray = next(
                (
                    i
                    for i in range(k + 1, m)
                    for j in range(k + 1, n)
                    if a[i][j] % a[k][k]
                ),
                None,
            )
            if stray is None:
                break
            add_row(stray, k, 1)
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            s[k] = [-x for x in s[k]]
    return a, s, t, t_inv


def hermite_normal_form(rows: Sequence[Sequence[int]], columns: int) -> Tuple[Tuple[int, ...], ...]:
    """Returns the row-style Hermite normal form of the lattice spanned by rows.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``, so
    the result only depends on the lattice.
    """
    a = [[int(x) for x in row] for row in rows if any(row)]
    r = 0
    for col in range(columns):
        nonzero = [i for i in range(r, len(a)) if a[i][col]]
        if not nonzero:
            continue
        a[r], a[nonzero[0]] = a[nonzero[0]], a[r]
        for i in range(r + 1, len(a)):
            if a[i][col]:
                x, y, g = (int(v) for v in igcdex(a[r][col], a[i][col]))
                p, q = a[r][col] // g, a[i][col] // g
                top, other = a[r], a[i]
                a[r] = [x * u + y * v for u, v in zip(top, other)]
                a[i] = [p * v - q * u for u, v in zip(top, other)]
        if a[r][col] < 0:
            a[r] = [-u for u in a[r]]
        for i in range(r):
            q = a[i][col] // a[r][col]
            if q:
                a[i] = [u - q * v for u, v in zip(a[i], a[r])]
        r += 1
    return tuple(tuple(row) for row in a[:r])


def in_row_span(hnf: Sequence[Sequence[int]], vector: Sequence[int]) -> bool:
    """Decides membership of vector in the lattice of a Hermite normal form."""
    v = list(vector)
    rows = iter(hnf)
    row = next(rows, None)
    for col in range(len(v)):
        if row is not None and row[col]:
            q, rem = divmod(v[col], row[col])
            if rem:
                return False
            if q:
                v = [x - q * y for x, y in zip(v, row)]
            row = next(rows, None)
        elif v[col]:
            return False
    return True


class Presentation:
    """The group Z^n modulo the row span of a relation matrix.

    The Smith normal form D = S R T turns ``x -> x T`` into an isomorphism onto
    a product of cyclic groups; coordinates with modulus 1 are dropped.

    Args:
        generators: n, the number of generators.
        relations: integer relation rows of length n.

    Raises:
        InvalidGroupError: If a relation has the wrong length.
    """

    __slots__ = ("_generators", "_spec", "_columns", "_transform", "_inverse")

    def __init__(self, generators: int, relations: Sequence[Sequence[int]] = ()) -> None:
        """Inits the presentation and its normal form."""
        rows = [list(row) for row in relations]
        for row in rows:
            if len(row) != generators:
                raise InvalidGroupError(row, f"relation length differs from {generators}")
        d, _, t, t_inv = smith_normal_form(rows, generators)
        diagonal = [d[k][k] if k < min(len(d), generators) else 0 for k in range(generators)]
        free = [k for k in range(generators) if diagonal[k] == 0]
        cyclic = [k for k in range(generators) if diagonal[k] > 1]
        self._generators = generators
        self._columns = tuple(free + cyclic)
        self._transform = t
        self._inverse = t_inv
        self._spec = GroupSpec(len(free), [diagonal[k] for k in cyclic])
        logger.debug("presentation of rank %d normalized to %s", generators, self._spec)

    @property
    def spec(self: Presentation) -> GroupSpec:
        """GroupSpec: the presented group in invariant-factor form."""
        return self._spec

    def project(self: Presentation, vector: Sequence[int]) -> GroupElem:
        """Returns the class of an integer vector."""
        image = [
            sum(v * self._transform[i][c] for i, v in enumerate(vector)) for c in self._columns
        ]
        return self._spec.element(image)

    def lift(self: Presentation, element: GroupElem) -> Tuple[int, ...]:
        """Returns an integer vector whose class is element."""
        y = [0] * self._generators
        for position, c in enumerate(self._columns):
            y[c] = element.coords[position]
        return tuple(
            sum(y[k] * self._inverse[k][j] for k in range(self._generators))
            for j in range(self._generators)
        )


def normalize(free_rank: int, relations: Sequence[Sequence[int]] = ()) -> GroupSpec:
    """Returns the invariant-factor form of Z^free_rank modulo relations.

    Example:
        >>> normalize(2, [[2, 0], [0, 2]])
        GroupSpec(0, [2, 2])
    """
    return Presentation(free_rank, relations).spec


def _relation_rows(group: GroupSpec) -> List[List[int]]:
    rows = []
    for j, n in enumerate(group.torsion):
        row = [0] * group.rank
        row[group.free_rank + j] = n
        rows.append(row)
    return rows


class SubgroupDescriptor:
    """A subgroup given by the Hermite normal form of its preimage lattice.

    The lattice always contains the relation lattice of the group, so two
    descriptors are equal exactly when the subgroups are.
    """

    __slots__ = ("_group", "_basis")

    def __init__(self, group: GroupSpec, basis: Tuple[Tuple[int, ...], ...]) -> None:
        """Inits the descriptor from a canonical basis."""
        self._group = group
        self._basis = basis

    @property
    def group(self: SubgroupDescriptor) -> GroupSpec:
        """GroupSpec: the ambient group."""
        return self._group

    @property
    def basis(self: SubgroupDescriptor) -> Tuple[Tuple[int, ...], ...]:
        """Tuple: canonical basis rows of the preimage lattice."""
        return self._basis

    def contains(self: SubgroupDescriptor, g: GroupElem) -> bool:
        """Returns True when g lies in the subgroup."""
        return in_row_span(self._basis, g.coords)

    __contains__ = contains

    @property
    def is_full(self: SubgroupDescriptor) -> bool:
        """bool: True when the subgroup is the whole group."""
        return self._basis == tuple(tuple(row) for row in _identity(self._group.rank))

    @property
    def is_trivial(self: SubgroupDescriptor) -> bool:
        """bool: True when the subgroup is {0}."""
        return self._basis == hermite_normal_form(_relation_rows(self._group), self._group.rank)

    def __eq__(self: SubgroupDescriptor, other: object) -> bool:
        if not isinstance(other, SubgroupDescriptor):
            return NotImplemented
        return (self._group, self._basis) == (other._group, other._basis)

    def __hash__(self: SubgroupDescriptor) -> int:
        return hash((self._group, self._basis))

    def __repr__(self: SubgroupDescriptor) -> str:
        return f"SubgroupDescriptor({self._group!r}, {[list(r) for r in self._basis]})"

    def to_json(self: SubgroupDescriptor) -> Dict[str, Any]:
        """Returns the descriptor as a json-ready dict."""
        return {"group": self._group.to_json(), "basis": [list(r) for r in self._basis]}


def subgroup_generated(gens: Sequence[GroupElem], group: GroupSpec) -> SubgroupDescriptor:
    """Returns the canonical descriptor of the subgroup generated by gens.

    Example:
        >>> Z = GroupSpec(1)
        >>> subgroup_generated([Z.element([2]), Z.element([3])], Z).is_full
        True
    """
    for g in gens:
        if g.group != group:
            raise InvalidElementError(g.coords, f"{g} is not in {group}")
    rows = _relation_rows(group) + [list(g.coords) for g in gens]
    return SubgroupDescriptor(group, hermite_normal_form(rows, group.rank))


class Projection:
    """The quotient map from a group onto its quotient by a subgroup."""

    __slots__ = ("_source", "_kernel", "_presentation")

    def __init__(self, kernel: SubgroupDescriptor) -> None:
        """Inits the projection for a kernel."""
        self._source = kernel.group
        self._kernel = kernel
        self._presentation = Presentation(kernel.group.rank, kernel.basis)

    @property
    def source(self: Projection) -> GroupSpec:
        """GroupSpec: the group being divided."""
        return self._source

    @property
    def target(self: Projection) -> GroupSpec:
        """GroupSpec: the quotient group."""
        return self._presentation.spec

    @property
    def kernel(self: Projection) -> SubgroupDescriptor:
        """SubgroupDescriptor: the subgroup being divided out."""
        return self._kernel

    def __call__(self: Projection, g: GroupElem) -> GroupElem:
        """Returns the class [g]."""
        return self._presentation.project(g.coords)

    def lift(self: Projection, q: GroupElem) -> GroupElem:
        """Returns a representative of the class q."""
        return self._source.element(self._presentation.lift(q))


def quotient(group: GroupSpec, subgroup: SubgroupDescriptor) -> Tuple[GroupSpec, Projection]:
    """Returns the quotient group and the projection onto it.

    Example:
        >>> Z = GroupSpec(1)
        >>> spec, project = quotient(Z, subgroup_generated([Z.element([3])], Z))
        >>> spec, project(Z.element([7])).coords
        (GroupSpec(0, [3]), (1,))
    """
    if subgroup.group != group:
        raise InvalidGroupError(subgroup.group.to_json(), f"subgroup is not a subgroup of {group}")
    projection = Projection(subgroup)
    return projection.target, projection
