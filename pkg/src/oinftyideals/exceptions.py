"""Exceptions module for oinftyideals."""
from typing import Any, Optional

__all__ = [
    "Error",
    "InvalidGroupError",
    "InvalidElementError",
    "InvalidInstanceError",
    "BudgetExceededError",
    "NotFiniteError",
    "SizeLimitError",
    "UnsupportedRepresentationError",
    "ConditionNotViolatedError",
    "InternalInvariantBrokenError",
]


class Error(Exception):
    """Base class for exceptions."""

    def __init__(self, msg: Optional[str] = None) -> None:
        """Inits the exception."""
        Exception.__init__(self, msg)
        self.msg = msg


class InvalidGroupError(Error):
    """Exception raised for an invalid group presentation.

    Attributes:
        datum -- the offending free rank or torsion list
        message -- explanation of the error
    """

    __slots__ = ()

    def __init__(self, datum: Any, msg: str) -> None:
        """Inits the exception."""
        Error.__init__(self, msg)
        self.datum = datum
        self.message = msg


class InvalidElementError(Error):
    """Exception raised for a vector or index that is not valid in a group.

    Attributes:
        element -- the offending coordinates or index
        message -- explanation of the error
    """

    __slots__ = ()

    def __init__(self, element: Any, msg: str) -> None:
        """Inits the exception."""
        Error.__init__(self, msg)
        self.element = element
        self.message = msg


class InvalidInstanceError(Error):
    """Exception raised when an instance file does not validate.

    Attributes:
        field -- dotted path of the offending field
        message -- explanation of the error
    """

    __slots__ = ()

    def __init__(self, field: str, msg: str) -> None:
        """Inits the exception."""
        Error.__init__(self, f"{field}: {msg}")
        self.field = field
        self.message = msg


class BudgetExceededError(Error):
    """Exception raised when a membership search runs out of nodes.

    Attributes:
        query -- the element whose membership was undecided
        budget -- the node budget that was exhausted
        message -- explanation of the error
    """

    __slots__ = ()

    def __init__(self, query: Any, budget: int, msg: str) -> None:
        """Inits the exception."""
        Error.__init__(self, msg)
        self.query = query
        self.budget = budget
        self.message = msg


class NotFiniteError(Error):
    """Exception raised when an operation needs a finite group.

    Attributes:
        group -- the infinite group
        message -- explanation of the error
    """

    __slots__ = ()

    def __init__(self, group: Any, msg: str) -> None:
        """Inits the exception."""
        Error.__init__(self, msg)
        self.group = group
        self.message = msg


class SizeLimitError(Error):
    """Exception raised when a finite group exceeds the enumeration bound.

    Attributes:
        size -- order of the group
        limit -- configured bound
        message -- explanation of the error
    """

    __slots__ = ()

    def __init__(self, size: int, limit: int, msg: str) -> None:
        """Inits the exception."""
        Error.__init__(self, msg)
        self.size = size
        self.limit = limit
        self.message = msg


class UnsupportedRepresentationError(Error):
    """Exception raised when a set representation cannot answer a query exactly.

    Attributes:
        representation -- the set that could not be handled
        message -- explanation of the error
    """

    __slots__ = ()

    def __init__(self, representation: Any, msg: str) -> None:
        """Inits the exception."""
        Error.__init__(self, msg)
        self.representation = representation
        self.message = msg


class ConditionNotViolatedError(Error):
    """Exception raised when a construction needs a violating index.

    Attributes:
        weights -- the weight system satisfying the condition
        message -- explanation of the error
    """

    __slots__ = ()

    def __init__(self, weights: Any, msg: str) -> None:
        """Inits the exception."""
        Error.__init__(self, msg)
        self.weights = weights
        self.message = msg


class InternalInvariantBrokenError(Error):
    """Exception raised when a proven structural property fails to hold.

    Attributes:
        datum -- the data exhibiting the failure
        message -- explanation of the error
    """

    __slots__ = ()

    def __init__(self, datum: Any, msg: str) -> None:
        """Inits the exception."""
        Error.__init__(self, msg)
        self.datum = datum
        self.message = msg
