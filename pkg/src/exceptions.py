"""
Error hierarchy for the MLST solver library.

Every error raised by the library derives from MLSTError so callers
(the CLI in particular) can catch domain failures in one place.
"""

from typing import List, Optional, Union


class MLSTError(Exception):
    """Base class for all domain errors."""


# Graph construction and parsing

class GraphValidationError(MLSTError, ValueError):
    """Raised when an edge list does not describe a valid labeled graph."""

    def __init__(self, message: str, edge_index: Optional[int] = None):
        super().__init__(message)
        self.edge_index = edge_index


class SelfLoopError(GraphValidationError):
    pass


class DuplicateEdgeError(GraphValidationError):
    pass


class NodeOutOfRangeError(GraphValidationError):
    pass


class LabelOutOfRangeError(GraphValidationError):
    pass


class UnusedLabelError(GraphValidationError):
    pass


class DisconnectedInputError(GraphValidationError):
    pass


class WidthMismatchError(MLSTError, ValueError):
    """Label subset width differs from the graph's label count."""

    def __init__(self, expected: int, actual: int):
        super().__init__(f"Label subset has width {actual}, graph has k={expected}")
        self.expected = expected
        self.actual = actual


class ParseError(MLSTError, ValueError):
    """Malformed instance file."""

    def __init__(self, message: str, line_number: Optional[int] = None,
                 path: Optional[str] = None):
        location = ''
        if path:
            location += f"{path}:"
        if line_number is not None:
            location += f"{line_number}:"
        super().__init__(f"{location} {message}".strip())
        self.detail = message
        self.line_number = line_number
        self.path = path


# Algorithms

class InfeasibleInitError(MLSTError, ValueError):
    pass


class InvalidTreeError(MLSTError, ValueError):
    pass


class InfeasibleSolutionError(MLSTError, ValueError):
    pass


# Oracle

class TooManyLabelsError(MLSTError):

    def __init__(self, k: int, k_limit: int):
        super().__init__(f"Instance has k={k} labels, exhaustive search is limited to {k_limit}")
        self.k = k
        self.k_limit = k_limit


class PreconditionViolatedError(MLSTError, ValueError):
    pass


# Instance generators

class ParamOutOfRangeError(MLSTError, ValueError):
    pass


class ConstructionVerificationFailedError(MLSTError):
    pass


class InfeasibleParamsError(MLSTError, ValueError):
    pass


class RetriesExhaustedError(MLSTError):
    pass


# Configuration and harness

class ConfigError(MLSTError, ValueError):
    """Invalid configuration or experiment plan; lists every problem found."""

    def __init__(self, errors: Union[str, List[str]]):
        self.errors = [errors] if isinstance(errors, str) else list(errors)
        super().__init__("; ".join(self.errors))


class TooFewPointsError(MLSTError, ValueError):
    pass
