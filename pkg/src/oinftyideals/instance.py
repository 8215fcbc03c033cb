"""Instance module for reading a weight system from a json document.

An instance document looks like::

    {
      "group": {"free_rank": 1, "torsion": []},
      "weights": {"prefix": [[0]], "tail": [[1]]},
      "options": {"size_limit": 20, "search_budget": 1000000}
    }

Torsion factors that do not form a divisibility chain are normalized, and
weight vectors are mapped into the normalized coordinates.

Example:
    >>> spec = InstanceSpec.from_json(
    ...     {"group": {"free_rank": 0, "torsion": [2, 3]}, "weights": {"tail": [[1, 1]]}}
    ... )
    >>> from oinftyideals import order_of
    >>> str(spec.group), order_of(spec.weights().tail[0])
    ('Z/6', 6)
"""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from .abelian import GroupElem, GroupSpec, Presentation
from .exceptions import InvalidGroupError, InvalidInstanceError
from .invariant import DEFAULT_SIZE_LIMIT
from .monoid import DEFAULT_BUDGET, WeightSystem

logger = logging.getLogger(__name__)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _vectors(value: Any, field: str, length: int) -> List[List[int]]:
    if not isinstance(value, (list, tuple)):
        raise InvalidInstanceError(field, f"expected a list of vectors, got {value!r}")
    for vector in value:
        if not isinstance(vector, (list, tuple)) or not all(_is_int(c) for c in vector):
            raise InvalidInstanceError(field, f"{vector!r} is not an integer vector")
        if len(vector) != length:
            raise InvalidInstanceError(field, f"{vector!r} does not have length {length}")
    return [list(v) for v in value]


def _option(options: Dict[str, Any], name: str, default: int) -> int:
    value = options.get(name, default)
    if not _is_int(value) or value < 1:
        raise InvalidInstanceError(f"options.{name}", f"{value!r} is not a positive integer")
    return value


class InstanceSpec:
    """A validated instance: group, weights and options.

    Args:
        free_rank: number of infinite cyclic factors.
        torsion: orders of the finite cyclic factors, in any order.
        prefix: weight vectors of the first indices.
        tail: weight vectors repeated forever, at least one.
        size_limit: largest finite group that is enumerated.
        search_budget: node budget of membership searches.

    Raises:
        InvalidInstanceError: If a field fails validation.
    """

    __slots__ = (
        "_free_rank",
        "_torsion",
        "_prefix",
        "_tail",
        "_size_limit",
        "_search_budget",
        "_group",
        "_presentation",
    )

    def __init__(
        self,
        free_rank: int,
        torsion: Sequence[int],
        prefix: Sequence[Sequence[int]],
        tail: Sequence[Sequence[int]],
        size_limit: int = DEFAULT_SIZE_LIMIT,
        search_budget: int = DEFAULT_BUDGET,
    ) -> None:
        """Inits an instance with validated values."""
        if not _is_int(free_rank) or free_rank < 0:
            raise InvalidInstanceError("group.free_rank", f"{free_rank!r} is not a nonnegative integer")
        if not all(_is_int(n) and n >= 2 for n in torsion):
            raise InvalidInstanceError("group.torsion", f"{list(torsion)!r} has a factor below 2")
        length = free_rank + len(torsion)
        self._prefix = _vectors(prefix, "weights.prefix", length)
        self._tail = _vectors(tail, "weights.tail", length)
        if not self._tail:
            raise InvalidInstanceError("weights.tail", "tail must contain at least one weight")
        self._free_rank = free_rank
        self._torsion = list(torsion)
        self._size_limit = size_limit
        self._search_budget = search_budget
        self._presentation: Optional[Presentation] = None
        try:
            self._group = GroupSpec(free_rank, self._torsion)
        except InvalidGroupError:
            relations = []
            for j, n in enumerate(self._torsion):
                row = [0] * length
                row[free_rank + j] = n
                relations.append(row)
            self._presentation = Presentation(length, relations)
            self._group = self._presentation.spec
            logger.debug("torsion %s normalized to %s", self._torsion, self._group)

    @property
    def group(self: InstanceSpec) -> GroupSpec:
        """GroupSpec: the group in invariant-factor form."""
        return self._group

    @property
    def size_limit(self: InstanceSpec) -> int:
        """int: largest finite group that is enumerated."""
        return self._size_limit

    @property
    def search_budget(self: InstanceSpec) -> int:
        """int: node budget of membership searches."""
        return self._search_budget

    def element(self: InstanceSpec, coords: Sequence[int], field: str = "element") -> GroupElem:
        """Returns the element with coordinates given as in the document."""
        (vector,) = _vectors([list(coords)], field, self._free_rank + len(self._torsion))
        if self._presentation is not None:
            return self._presentation.project(vector)
        return self._group.element(vector)

    def weights(self: InstanceSpec, budget: Optional[int] = None) -> WeightSystem:
        """Returns the weight system, searching with budget if given."""
        return WeightSystem(
            self._group,
            prefix=[self.element(v) for v in self._prefix],
            tail=[self.element(v) for v in self._tail],
            budget=budget or self._search_budget,
        )

    # -
    @classmethod
    def from_json(cls, data: Any) -> InstanceSpec:
        """Returns the instance of a parsed json document.

        Raises:
            InvalidInstanceError: If a field is missing or malformed.
        """
        if not isinstance(data, dict):
            raise InvalidInstanceError("instance", "document must be a json object")
        group = data.get("group")
        weights = data.get("weights")
        options = data.get("options", {})
        if not isinstance(group, dict):
            raise InvalidInstanceError("group", "missing group object")
        if not isinstance(weights, dict):
            raise InvalidInstanceError("weights", "missing weights object")
        if not isinstance(options, dict):
            raise InvalidInstanceError("options", "options must be a json object")
        torsion = group.get("torsion", [])
        if not isinstance(torsion, list):
            raise InvalidInstanceError("group.torsion", f"{torsion!r} is not a list")
        return cls(
            group.get("free_rank", 0),
            torsion,
            weights.get("prefix", []),
            weights.get("tail", []),
            size_limit=_option(options, "size_limit", DEFAULT_SIZE_LIMIT),
            search_budget=_option(options, "search_budget", DEFAULT_BUDGET),
        )

    @classmethod
    def load(cls, path: Union[str, Path]) -> InstanceSpec:
        """Returns the instance stored in a UTF-8 json file.

        Raises:
            InvalidInstanceError: If the file is not json or fails validation.
        """
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
            raise InvalidInstanceError(str(path), f"cannot read instance: {e}") from e
        return cls.from_json(data)

    def to_json(self: InstanceSpec) -> Dict[str, Any]:
        """Returns the instance document."""
        return {
            "group": {"free_rank": self._free_rank, "torsion": list(self._torsion)},
            "weights": {"prefix": self._prefix, "tail": self._tail},
            "options": {"size_limit": self._size_limit, "search_budget": self._search_budget},
        }
