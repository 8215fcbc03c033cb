"""Test cases for the instance module."""
import json
from pathlib import Path
from typing import Any

import pytest

from oinftyideals import GroupSpec, InstanceSpec, InvalidInstanceError, order_of


def _document(**overrides: Any) -> dict:
    document = {
        "group": {"free_rank": 1, "torsion": []},
        "weights": {"prefix": [[0]], "tail": [[1]]},
    }
    document.update(overrides)
    return document


def test_from_json() -> None:
    """It returns the group, the weights and the default options."""
    spec = InstanceSpec.from_json(_document())
    assert spec.group == GroupSpec(1)
    weights = spec.weights()
    assert weights.weight(1) == spec.group.zero()
    assert weights.weight(5) == spec.group.element([1])
    assert spec.size_limit == 20
    assert spec.search_budget == 1_000_000


def test_options() -> None:
    """It returns the options of the document."""
    spec = InstanceSpec.from_json(_document(options={"size_limit": 8, "search_budget": 50}))
    assert spec.size_limit == 8
    assert spec.weights().budget == 50
    assert spec.weights(budget=7).budget == 7


def test_normalizes_torsion() -> None:
    """It returns Z/6 for the factors 2 and 3."""
    spec = InstanceSpec.from_json(
        {"group": {"free_rank": 0, "torsion": [2, 3]}, "weights": {"tail": [[1, 1]]}}
    )
    assert str(spec.group) == "Z/6"
    assert order_of(spec.weights().tail[0]) == 6
    assert order_of(spec.element([1, 0])) == 2


def test_to_json() -> None:
    """It returns the document with filled in options."""
    data = InstanceSpec.from_json(_document()).to_json()
    assert data == {
        "group": {"free_rank": 1, "torsion": []},
        "weights": {"prefix": [[0]], "tail": [[1]]},
        "options": {"size_limit": 20, "search_budget": 1_000_000},
    }


@pytest.mark.parametrize(
    "document,field",
    [
        ([], "instance"),
        ({"weights": {"tail": [[1]]}}, "group"),
        ({"group": {"free_rank": 1}}, "weights"),
        (_document(group={"free_rank": -1}), "group.free_rank"),
        (_document(group={"free_rank": True}), "group.free_rank"),
        (_document(group={"free_rank": 1, "torsion": [1]}), "group.torsion"),
        (_document(group={"free_rank": 1, "torsion": 2}), "group.torsion"),
        (_document(weights={"tail": []}), "weights.tail"),
        (_document(weights={"tail": [[1, 2]]}), "weights.tail"),
        (_document(weights={"tail": [["1"]]}), "weights.tail"),
        (_document(weights={"prefix": 0, "tail": [[1]]}), "weights.prefix"),
        (_document(options={"size_limit": 0}), "options.size_limit"),
        (_document(options={"search_budget": "many"}), "options.search_budget"),
        (_document(options=[]), "options"),
    ],
)
def test_invalid_documents(document: Any, field: str) -> None:
    """It raises an InvalidInstanceError naming the field."""
    with pytest.raises(InvalidInstanceError) as e:
        _ = InstanceSpec.from_json(document)
    assert e.value.field == field


def test_load(tmp_path: Path) -> None:
    """It returns the instance stored in the file."""
    path = tmp_path / "instance.json"
    path.write_text(json.dumps(_document()), encoding="utf-8")
    assert InstanceSpec.load(path).group == GroupSpec(1)


def test_load_bad_json(tmp_path: Path) -> None:
    """It raises an InvalidInstanceError."""
    path = tmp_path / "instance.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(InvalidInstanceError):
        _ = InstanceSpec.load(path)


def test_load_missing_file(tmp_path: Path) -> None:
    """It raises an InvalidInstanceError."""
    with pytest.raises(InvalidInstanceError):
        _ = InstanceSpec.load(tmp_path / "missing.json")
