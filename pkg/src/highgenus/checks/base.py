"""Base classes for checks run against an embedded mesh.

A check inspects an EmbeddedMesh and yields one Violation per defect it
finds. Checks compose, so a certificate can be assembled from any
selection of them.
"""

from abc import ABC, abstractmethod
from collections.abc import Generator, Sequence
from enum import StrEnum
from typing import Any

from ..models import EmbeddedMesh, RationalVector


class Severity(StrEnum):
    """Severity levels for check violations.

    Attributes:
        WARNING: The mesh is usable but not what the construction promises
        CRITICAL: The mesh is not an embedded polyhedral surface
    """

    WARNING = "warning"
    CRITICAL = "critical"


class Violation:
    """A defect found by a check.

    Attributes:
        check: The check that found it
        message: Human-readable description
        severity: How bad it is
        witness: JSON-serializable description of where it was found
    """

    def __init__(
        self,
        check: "Check",
        message: str,
        severity: Severity = Severity.CRITICAL,
        witness: dict[str, Any] | None = None,
    ):
        self.check = check
        self.message = message
        self.severity = severity
        self.witness = witness or {}

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check.cli_code(),
            "severity": self.severity.value,
            "message": self.message,
            **self.witness,
        }


class Check(ABC):
    """Abstract base class for all mesh checks."""

    @classmethod
    @abstractmethod
    def cli_name(cls) -> str:
        """Return the CLI-friendly name for this check, e.g. "planarity"."""
        ...

    @classmethod
    @abstractmethod
    def cli_code(cls) -> str:
        """Return the shorthand code for this check, e.g. "PLN"."""
        ...

    @abstractmethod
    def test(self, mesh: EmbeddedMesh) -> Generator[Violation, None, None]:
        """Yield every violation found in the mesh."""
        ...


class CompositeCheck(Check):
    """Runs several checks one after the other."""

    @classmethod
    def cli_name(cls) -> str:
        return "composite"

    @classmethod
    def cli_code(cls) -> str:
        return "COMP"

    def __init__(self, *checks: Check):
        self._checks = list(checks)

    @property
    def checks(self) -> list[Check]:
        return list(self._checks)

    def test(self, mesh: EmbeddedMesh) -> Generator[Violation, None, None]:
        for check in self._checks:
            yield from check.test(mesh)


class FaceCheck(Check, ABC):
    """Abstract base class for checks that look at one face at a time."""

    @abstractmethod
    def test_face(
        self, index: int, face: Sequence[int], points: Sequence[RationalVector]
    ) -> Generator[Violation, None, None]:
        """Test a single face given the coordinates of its vertices in order."""
        ...

    def test(self, mesh: EmbeddedMesh) -> Generator[Violation, None, None]:
        for index, face in enumerate(mesh.faces):
            yield from self.test_face(index, face, [mesh.vertices[v] for v in face])
