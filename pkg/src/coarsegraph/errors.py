"""Exception types shared across the package."""

from __future__ import annotations


class GraphToolError(Exception):
    """Base class for all errors raised by this package."""


class UnknownVertexError(GraphToolError, KeyError):
    """An operation referenced a vertex that is not in the graph."""


class EmptySetError(GraphToolError, ValueError):
    """A set argument that must be non-empty was empty."""


class StructuralError(GraphToolError, ValueError):
    """An input structure is malformed (not a tree, inconsistent parts, bad model shape)."""


class ContractViolationError(GraphToolError, ValueError):
    """A documented precondition of an operation was violated."""


class CapacityError(GraphToolError, ValueError):
    """An input exceeds a configured size cap for an exact algorithm."""


class ParseError(GraphToolError, ValueError):
    """Malformed textual or JSON input.

    Carries a 1-based line number when the source is line-oriented text.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GeneratorError(GraphToolError, ValueError):
    """Unknown generator family or invalid generator parameters."""


class ClassificationError(GraphToolError, ValueError):
    """A torso fits none of the recognised classes."""


class MarkerError(GraphToolError, ValueError):
    """Component pruning could not designate a unique component to keep."""


class PlanarityContradictionError(GraphToolError, ValueError):
    """A planar graph exhibited a configuration impossible in planar graphs.

    Raised when more than two components fully attached to a 3-separator are
    found in a graph that was classified planar; such a configuration forces a
    K_{3,3} minor.
    """


class CompositionError(GraphToolError, ValueError):
    """Two maps were composed whose domains/codomains do not line up."""
