"""Test cases for the invariant module."""
from typing import Callable, List

import pytest

from oinftyideals import (
    enumerate_invariant_sets,
    enumerate_pairs,
    GroupSpec,
    h_set,
    InvalidElementError,
    InvariantPair,
    InvariantSet,
    is_invariant,
    NotFiniteError,
    pair_union,
    SizeLimitError,
    UnsupportedRepresentationError,
    validate_pair,
    WeightSystem,
    x_n,
)
from oinftyideals.invariant import semigroup, SetKind, up_closures
from tests.oracle import bounded_member

Z = GroupSpec(1)
G3 = GroupSpec(0, [3])
G4 = GroupSpec(0, [4])

WINDOW = range(-5, 31)

# (prefix, tail) systems on Z checked pointwise against the definitions
Z_SYSTEMS = [([], [1]), ([0], [1]), ([], [2, 3])]


def _z(*values: int) -> list:
    return [Z.element([v]) for v in values]


def _g4(*values: int) -> List:
    return [G4.element([v]) for v in values]


def _on_window(s: InvariantSet) -> List[int]:
    return [p for p in WINDOW if Z.element([p]) in s]


def _oracle_set(values: List[int], bases: List[int]) -> Callable[[int], bool]:
    member = bounded_member(values, (-40, 60), 60)
    return lambda p: any(member(p - b) for b in bases)


def test_enumerate_invariant_sets_z4() -> None:
    """It returns the four invariant sets of Z/4 under translation by 2."""
    weights = WeightSystem(G4, tail=_g4(2))
    sets = enumerate_invariant_sets(weights)
    assert [sorted(g.coords[0] for g in x) for x in sets] == [[], [0, 2], [1, 3], [0, 1, 2, 3]]
    assert all(is_invariant(x) for x in sets)


def test_is_invariant_examples() -> None:
    """It returns True for {1, 3} and False for {1} under translation by 2."""
    weights = WeightSystem(G4, tail=_g4(2))
    assert is_invariant(InvariantSet.explicit(weights, _g4(1, 3)))
    assert not is_invariant(InvariantSet.explicit(weights, _g4(1)))


def test_enumerate_pairs_z3() -> None:
    """It returns the pairs (∅, ∅) and (Γ, Γ)."""
    weights = WeightSystem(G3, tail=[G3.element([1])])
    pairs = enumerate_pairs(weights)
    assert len(pairs) == 2
    assert pairs[0].x.is_empty and pairs[0].xinf.is_empty
    assert pairs[1].x.is_full and pairs[1].xinf.is_full


def test_enumerate_pairs_size_limit() -> None:
    """It raises a SizeLimitError."""
    G = GroupSpec(0, [2, 4])
    with pytest.raises(SizeLimitError):
        _ = enumerate_pairs(WeightSystem(G, tail=[G.element([1, 1])]), size_limit=7)


def test_enumerate_pairs_infinite() -> None:
    """It raises a NotFiniteError."""
    with pytest.raises(NotFiniteError):
        _ = enumerate_pairs(WeightSystem(Z, tail=_z(1)))


def test_h_set_of_full_finite_group() -> None:
    """It returns Γ for Γ = Z/3."""
    weights = WeightSystem(G3, tail=[G3.element([1])])
    full = InvariantSet.full(weights)
    assert h_set(full) == full


def test_validate_pair_examples() -> None:
    """It returns False for (Γ, ∅) and True for (Γ, Γ) on Z/3."""
    weights = WeightSystem(G3, tail=[G3.element([1])])
    full, empty = InvariantSet.full(weights), InvariantSet.empty(weights)
    assert not validate_pair(full, empty)
    assert validate_pair(full, full)
    assert InvariantPair(full, full).is_valid()


def test_pair_union_z4() -> None:
    """It returns (Γ, Γ) for the union of the two cosets of {0, 2}."""
    weights = WeightSystem(G4, tail=_g4(2))
    even = InvariantSet.explicit(weights, _g4(0, 2))
    odd = InvariantSet.explicit(weights, _g4(1, 3))
    union = pair_union(InvariantPair(even, even), InvariantPair(odd, odd))
    assert union.x.is_full and union.xinf.is_full


def test_h_set_naturals() -> None:
    """It returns ℕ for X = ℕ with weight 1."""
    weights = WeightSystem(Z, tail=_z(1))
    assert _on_window(h_set(semigroup(weights))) == list(range(0, 31))


def test_h_set_naturals_with_prefix_five() -> None:
    """It returns ℕ for X = ℕ with weights 5, 1, 1, ..."""
    weights = WeightSystem(Z, prefix=_z(5), tail=_z(1))
    assert _on_window(h_set(semigroup(weights))) == list(range(0, 31))


def test_h_set_naturals_with_prefix_zero() -> None:
    """It returns 1 + ℕ for X = ℕ with weights 0, 1, 1, ..."""
    weights = WeightSystem(Z, prefix=_z(0), tail=_z(1))
    h = h_set(semigroup(weights))
    assert _on_window(h) == list(range(1, 31))
    assert Z.zero() not in h


@pytest.mark.parametrize("prefix,tail", Z_SYSTEMS)
@pytest.mark.parametrize("bases", [[0], [-3, 4]])
def test_h_set_on_z_matches_definition(prefix: list, tail: list, bases: list) -> None:
    """It returns the points of the defining formula on the window."""
    weights = WeightSystem(Z, prefix=_z(*prefix), tail=_z(*tail))
    x = InvariantSet.principal(weights, _z(*bases))
    member = _oracle_set(sorted(set(prefix + tail)), bases)
    sequence = prefix + tail
    expected = [
        p
        for p in WINDOW
        if member(p)
        and (all(not member(p - w) for w in sequence) or any(member(p - w) for w in tail))
    ]
    assert _on_window(h_set(x)) == expected


@pytest.mark.parametrize("prefix,tail", Z_SYSTEMS)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_x_n_on_z_matches_definition(prefix: list, tail: list, n: int) -> None:
    """It returns Xinf together with the translates by weights past n."""
    weights = WeightSystem(Z, prefix=_z(*prefix), tail=_z(*tail))
    x = semigroup(weights)
    pair = InvariantPair(x, h_set(x))
    member = _oracle_set(sorted(set(prefix + tail)), [0])
    in_h = set(_on_window(pair.xinf))
    indices = range(n + 1, max(n, len(prefix)) + len(tail) + 1)
    later = [weights.weight(i).coords[0] for i in indices]
    expected = [p for p in WINDOW if p in in_h or any(member(p - w) for w in later)]
    assert _on_window(x_n(pair, n)) == expected


def test_x_n_zero_is_x() -> None:
    """It returns X for n = 0."""
    weights = WeightSystem(G4, tail=_g4(2))
    x = InvariantSet.explicit(weights, _g4(0, 2))
    assert x_n(InvariantPair(x, x), 0) == x


def test_principal_sets_compare() -> None:
    """It returns containment and equality of principal unions."""
    weights = WeightSystem(Z, tail=_z(1))
    naturals = semigroup(weights)
    assert semigroup(weights, Z.element([2])) <= naturals
    assert not naturals <= semigroup(weights, Z.element([2]))
    assert InvariantSet.principal(weights, _z(1), _z(0)) == naturals
    assert naturals <= InvariantSet.full(weights)
    assert not InvariantSet.full(weights) <= naturals


def test_full_cover_by_group_monoid() -> None:
    """It returns True when a group monoid's translates cover every coset."""
    weights = WeightSystem(Z, tail=_z(2, -2))
    assert not semigroup(weights).is_full
    assert InvariantSet.principal(weights, _z(0, 1)).is_full
    assert InvariantSet.principal(weights, _z(4, -1)) == InvariantSet.full(weights)


def test_translate_and_union_on_z() -> None:
    """It returns translated principal unions."""
    weights = WeightSystem(Z, tail=_z(1))
    moved = semigroup(weights).translate(Z.element([-2]))
    assert moved.kind is SetKind.PRINCIPAL
    assert _on_window(moved)[:3] == [-2, -1, 0]
    assert (moved | semigroup(weights)) == moved


def test_intersection_needs_finite_sets() -> None:
    """It raises an UnsupportedRepresentationError."""
    weights = WeightSystem(Z, tail=_z(1))
    with pytest.raises(UnsupportedRepresentationError):
        _ = semigroup(weights) & semigroup(weights)


def test_to_json_window_sample() -> None:
    """It returns the members inside the window."""
    weights = WeightSystem(Z, tail=_z(1))
    data = semigroup(weights).to_json(window=2)
    assert data["kind"] == "principal"
    assert data["bases"] == [[0]]
    assert data["window"]["members"] == [[0], [1], [2]]


def test_to_json_explicit() -> None:
    """It returns the element list of a finite set."""
    weights = WeightSystem(G4, tail=_g4(2))
    assert InvariantSet.explicit(weights, _g4(3, 1)).to_json() == {
        "kind": "explicit",
        "elements": [[1], [3]],
    }


def test_up_closures() -> None:
    """It returns the cosets g + {0, 2} as bitsets over element indices."""
    weights = WeightSystem(G4, tail=_g4(2))
    assert up_closures(weights) == [0b0101, 0b1010, 0b0101, 0b1010]
    weights = WeightSystem(G3, tail=[G3.element([1])])
    assert up_closures(weights) == [0b111] * 3


def test_up_closures_infinite() -> None:
    """It raises a NotFiniteError."""
    with pytest.raises(NotFiniteError):
        _ = up_closures(WeightSystem(Z, tail=_z(1)))


def test_foreign_elements() -> None:
    """It raises an InvalidElementError for elements of another group."""
    weights = WeightSystem(G4, tail=_g4(2))
    with pytest.raises(InvalidElementError):
        _ = InvariantSet.explicit(weights, [G3.zero()])
    with pytest.raises(InvalidElementError):
        _ = InvariantSet.principal(weights, [G3.zero()])


def test_from_bits_needs_finite_group() -> None:
    """It raises a NotFiniteError."""
    with pytest.raises(NotFiniteError):
        _ = InvariantSet.from_bits(WeightSystem(Z, tail=_z(1)), 1)


def test_empty_and_full_on_z() -> None:
    """It returns the tagged empty and full sets of an infinite group."""
    weights = WeightSystem(Z, tail=_z(1))
    empty, full = InvariantSet.empty(weights), InvariantSet.full(weights)
    assert InvariantSet.principal(weights, []).kind is SetKind.EMPTY
    assert InvariantSet.explicit(weights, []) == empty
    assert not empty.is_full
    assert Z.zero() not in empty
    assert list(empty) == []
    assert h_set(empty) is empty
    assert h_set(full) is full
    assert not semigroup(weights) <= empty
    assert not full <= empty
    assert full >= semigroup(weights)
    assert repr(empty) == "<empty>"
    assert full.to_json() == {"kind": "full"}
    assert full.to_json(window=1)["window"]["members"] == [[-1], [0], [1]]
    assert empty.to_json(window=1) == {"kind": "empty"}
    assert hash(full) == hash(weights)


def test_infinite_set_has_no_elements() -> None:
    """It raises an UnsupportedRepresentationError."""
    weights = WeightSystem(Z, tail=_z(1))
    with pytest.raises(UnsupportedRepresentationError):
        _ = list(semigroup(weights))
    with pytest.raises(UnsupportedRepresentationError):
        _ = len(semigroup(weights))


def test_finite_set_dunders() -> None:
    """It returns the size, the printed members and the hash of a bitset."""
    weights = WeightSystem(G4, tail=_g4(2))
    odd = InvariantSet.explicit(weights, _g4(3, 1))
    assert len(odd) == 2
    assert repr(odd) == "{1, 3}"
    assert hash(odd) == hash(InvariantSet.from_bits(weights, 0b1010))
    assert odd != {1, 3}
    assert repr(InvariantPair(odd, odd)) == "InvariantPair({1, 3}, {1, 3})"
    assert InvariantPair(odd, odd) != (odd, odd)
    assert hash(InvariantPair(odd, odd)) == hash(InvariantPair(odd, odd))


def test_principal_repr() -> None:
    """It returns the bases as translates of sg followed by the points."""
    weights = WeightSystem(Z, tail=_z(1))
    assert repr(InvariantSet.principal(weights, _z(2), _z(-1))) == "{2+sg | -1}"


def test_sets_over_different_weights() -> None:
    """It raises an UnsupportedRepresentationError."""
    first = WeightSystem(Z, tail=_z(1))
    second = WeightSystem(Z, tail=_z(2))
    with pytest.raises(UnsupportedRepresentationError):
        _ = semigroup(first) <= semigroup(second)
    with pytest.raises(UnsupportedRepresentationError):
        _ = semigroup(first) | semigroup(second)
    with pytest.raises(UnsupportedRepresentationError):
        _ = InvariantPair(semigroup(first), semigroup(second))


def test_group_monoid_of_infinite_index() -> None:
    """It returns False when the monoid is a group of infinite index."""
    Z2 = GroupSpec(2)
    weights = WeightSystem(Z2, tail=[Z2.element([1, 0]), Z2.element([-1, 0])])
    assert not semigroup(weights).is_full
    assert semigroup(weights) != InvariantSet.full(weights)


def test_is_invariant_under_other_weights() -> None:
    """It returns invariance under the given weights."""
    weights = WeightSystem(Z, tail=_z(2))
    odd_steps = WeightSystem(Z, tail=_z(1))
    assert is_invariant(semigroup(weights))
    assert not is_invariant(semigroup(weights), odd_steps)
    assert is_invariant(InvariantSet.full(weights), odd_steps)


def test_x_n_negative() -> None:
    """It raises an InvalidElementError."""
    weights = WeightSystem(G4, tail=_g4(2))
    x = InvariantSet.full(weights)
    with pytest.raises(InvalidElementError):
        _ = x_n(InvariantPair(x, x), -1)
