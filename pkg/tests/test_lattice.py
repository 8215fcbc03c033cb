"""Test cases for the lattice module."""
import pytest
from pytest_mock import MockFixture

from oinftyideals import (
    enumerate_invariant_sets,
    GroupSpec,
    h_set,
    InternalInvariantBrokenError,
    InvariantPair,
    InvariantSet,
    NotFiniteError,
    SizeLimitError,
    WeightSystem,
)
from oinftyideals.classify import enumerate_ideals, IdealLattice

G3 = GroupSpec(0, [3])
G4 = GroupSpec(0, [4])


def _cosets() -> WeightSystem:
    return WeightSystem(G4, tail=[G4.element([2])])


def test_simple_lattice() -> None:
    """It returns the two ideals 0 and the whole algebra."""
    lattice = enumerate_ideals(WeightSystem(G3, tail=[G3.element([1])]))
    assert len(lattice) == 2
    assert lattice.is_simple
    assert lattice.complete
    assert lattice.top.index == 0
    assert lattice.zero.index == 1
    assert [node.index for node in lattice.primitive_nodes] == [1]


def test_simple_with_prefix_generator() -> None:
    """It returns a simple lattice when a prefix weight generates Z/8."""
    G8 = GroupSpec(0, [8])
    lattice = enumerate_ideals(WeightSystem(G8, prefix=[G8.element([1])], tail=[G8.element([4])]))
    assert len(lattice) == 2


def test_coset_lattice_count() -> None:
    """It returns one node for each term of the sum over X of 2^|X - H_X|."""
    lattice = enumerate_ideals(_cosets())
    sets = enumerate_invariant_sets(_cosets())
    assert len(lattice) == sum(2 ** len(x - h_set(x)) for x in sets) == 4
    assert not lattice.is_simple


def test_coset_lattice_order() -> None:
    """It returns the diamond of ideals."""
    lattice = enumerate_ideals(_cosets())
    assert lattice.leq(3, 0)
    assert lattice.leq(1, 0) and lattice.leq(2, 0)
    assert not lattice.leq(1, 2) and not lattice.leq(2, 1)
    assert all(lattice.leq(a, a) for a in range(4))
    assert lattice.meet(1, 2) == 3
    assert lattice.join(1, 2) == 0
    assert lattice.meet(0, 1) == 1
    assert lattice.join(3, 2) == 2
    assert lattice.covers() == [(1, 0), (2, 0), (3, 1), (3, 2)]


def test_coset_lattice_primitive() -> None:
    """It returns the two coset ideals as primitive."""
    lattice = enumerate_ideals(_cosets())
    assert [node.index for node in lattice.primitive_nodes] == [1, 2]
    assert not lattice.top.primitive


def test_index_of_node_pair() -> None:
    """It returns the position of each node."""
    lattice = enumerate_ideals(_cosets())
    assert [lattice.index_of(node.pair) for node in lattice] == [0, 1, 2, 3]


def test_to_json() -> None:
    """It returns count, nodes and covers."""
    data = enumerate_ideals(_cosets()).to_json()
    assert data["count"] == 4
    assert data["complete"] is True
    assert data["simple"] is False
    assert data["condition"] == {"status": "satisfied"}
    assert data["covers"] == [[1, 0], [2, 0], [3, 1], [3, 2]]
    assert data["nodes"][1] == {
        "index": 1,
        "primitive": True,
        "x": {"kind": "explicit", "elements": [[0], [2]]},
        "xinf": {"kind": "explicit", "elements": [[0], [2]]},
    }


def test_infinite_group() -> None:
    """It raises a NotFiniteError."""
    Z = GroupSpec(1)
    with pytest.raises(NotFiniteError):
        _ = enumerate_ideals(WeightSystem(Z, tail=[Z.element([1])]))


def test_size_limit() -> None:
    """It raises a SizeLimitError."""
    with pytest.raises(SizeLimitError):
        _ = enumerate_ideals(_cosets(), size_limit=3)


def test_accessors() -> None:
    """It returns the weights, the nodes and each node by index."""
    lattice = enumerate_ideals(_cosets())
    assert lattice.weights == _cosets()
    assert lattice.nodes == list(lattice)
    assert lattice[3] is lattice.zero
    assert repr(lattice[0]).startswith("IdealNode(0, ")


def test_index_of_foreign_pair() -> None:
    """It raises an InternalInvariantBrokenError for a pair that is no node."""
    weights = _cosets()
    full = InvariantSet.full(weights)
    even = InvariantSet.explicit(weights, [G4.element([0]), G4.element([2])])
    with pytest.raises(InternalInvariantBrokenError):
        _ = enumerate_ideals(weights).index_of(InvariantPair(full, even))


def test_join_without_upper_bound(mocker: MockFixture) -> None:
    """It raises an InternalInvariantBrokenError when no node lies above both."""
    lattice = enumerate_ideals(_cosets())
    mocker.patch.object(IdealLattice, "leq", return_value=False)
    with pytest.raises(InternalInvariantBrokenError):
        _ = lattice.join(1, 2)
