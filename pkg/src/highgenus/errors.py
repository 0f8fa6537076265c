"""Exception hierarchy for surface construction and certification.

Every error carries the process exit code the CLI reports for it and an
optional JSON-serializable witness describing where the failure was found.
"""

from typing import Any


class HighGenusError(Exception):
    """Base class for all errors raised by this package."""

    exit_code: int = 5

    def __init__(self, message: str, witness: dict[str, Any] | None = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def __str__(self) -> str:
        if self.witness:
            return f"{self.message} (witness: {self.witness})"
        return self.message


class ParseError(HighGenusError):
    """An input file could not be read or does not match its schema."""

    exit_code = 2


class DomainError(HighGenusError):
    """A parameter or input object violates a documented precondition."""

    exit_code = 3


class EdgeDegree(DomainError):
    """An edge lies in a number of faces other than two."""


class BrokenLink(DomainError):
    """A vertex link is not a single closed cycle."""


class Disconnected(DomainError):
    """The edge graph of a surface is not connected."""


class IrregularFace(DomainError):
    """A face cycle is too short or repeats a vertex."""


class InvalidScheme(DomainError):
    """A rotation scheme row repeats a vertex or is not symmetric."""


class FlowViolation(DomainError):
    """Kirchhoff's law fails at a vertex of a current graph."""


class LabelReuse(DomainError):
    """A current label is missing or used more than once."""


class NotCubic(DomainError):
    """A vertex of a current graph does not have degree three."""


class NotSingleCycle(DomainError):
    """The face-tracing walk of a current graph closes before covering it."""


class NotFourGPlusOne(DomainError):
    """The field order is not congruent to 1 mod 4."""


class UnsupportedPrimePower(DomainError):
    """The field order is not a prime or a tabulated prime power."""


class EpsilonOutOfRange(DomainError):
    """The deformation parameter is outside the open interval (0, 1/2)."""


class DegenerateSpan(DomainError):
    """A point set does not affinely span the ambient space."""


class CertificationError(HighGenusError):
    """A geometric or combinatorial certificate could not be produced."""

    exit_code = 4


class NotPreserved(CertificationError):
    """A cube face is not strictly preserved by the projection."""


class MissingCertificate(CertificationError):
    """A surface face has no preservation certificate."""


class EmbeddingFailure(CertificationError):
    """The embedded mesh failed planarity, convexity or intersection checks."""


class InternalAssertion(HighGenusError):
    """A proven invariant failed at runtime."""

    exit_code = 5
