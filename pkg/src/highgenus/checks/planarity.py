"""Planarity and strict convexity of mesh faces, decided exactly."""

import logging
from collections.abc import Generator, Sequence

from ..geometry.linalg import Vector, affine_rank, cross, dot, sub
from ..models import EmbeddedMesh, RationalVector, Verdict
from .base import FaceCheck, Severity, Violation

logger = logging.getLogger(__name__)


def plane_normal(points: Sequence[RationalVector]) -> Vector | None:
    """A normal of the plane through the points, or None if they are collinear.

    For a strictly convex polygon the normal is oriented along its boundary walk.
    """
    p0 = points[0]
    for j in range(1, len(points)):
        for k in range(j + 1, len(points)):
            n = cross(sub(points[j], p0), sub(points[k], p0))
            if any(n):
                return n
    return None


def convexity_defect(points: Sequence[RationalVector]) -> tuple[int, int] | None:
    """First (edge start, vertex) position pair showing the polygon is not strictly convex.

    Every vertex must lie strictly on the same side of every edge it is not on.
    """
    normal = plane_normal(points)
    if normal is None:
        return (0, 0)
    k = len(points)
    side = 0
    for i in range(k):
        a, b = points[i], points[(i + 1) % k]
        for j in range(k):
            if j in (i, (i + 1) % k):
                continue
            value = dot(normal, cross(sub(b, a), sub(points[j], a)))
            sign = (value > 0) - (value < 0)
            if side == 0:
                side = sign
            if sign == 0 or sign != side:
                return (i, j)
    return None


class PlanarityCheck(FaceCheck):
    """Every face has at least three vertices and they lie in one plane."""

    @classmethod
    def cli_name(cls) -> str:
        return "planarity"

    @classmethod
    def cli_code(cls) -> str:
        return "PLN"

    def test_face(
        self, index: int, face: Sequence[int], points: Sequence[RationalVector]
    ) -> Generator[Violation, None, None]:
        if len(points) < 3:
            yield Violation(
                self,
                f"face {index} has only {len(points)} vertices",
                witness={"face": index, "vertices": list(face)},
            )
            return
        rank = affine_rank(points)
        if rank > 2:
            yield Violation(
                self,
                f"face {index} is not planar",
                witness={"face": index, "vertices": list(face), "rank": rank},
            )


class ConvexityCheck(FaceCheck):
    """Every planar face is a strictly convex polygon in its plane.

    Non-planar faces are left to the planarity check.
    """

    @classmethod
    def cli_name(cls) -> str:
        return "convexity"

    @classmethod
    def cli_code(cls) -> str:
        return "CVX"

    def test_face(
        self, index: int, face: Sequence[int], points: Sequence[RationalVector]
    ) -> Generator[Violation, None, None]:
        if len(points) < 3 or affine_rank(points) > 2:
            return
        defect = convexity_defect(points)
        if defect is None:
            return
        i, j = defect
        if plane_normal(points) is None:
            yield Violation(
                self,
                f"face {index} is degenerate: its vertices are collinear",
                witness={"face": index, "vertices": list(face)},
            )
            return
        edge = [face[i], face[(i + 1) % len(face)]]
        yield Violation(
            self,
            f"face {index} is not strictly convex at vertex {face[j]}",
            severity=Severity.CRITICAL,
            witness={"face": index, "vertices": list(face), "edge": edge, "vertex": face[j]},
        )


def check_planarity_convexity(mesh: EmbeddedMesh) -> Verdict:
    """Whether every face is a planar, strictly convex polygon; the first bad face otherwise."""
    for check in (PlanarityCheck(), ConvexityCheck()):
        for violation in check.test(mesh):
            logger.warning(violation.message)
            return Verdict(ok=False, witness=violation.to_dict(), reason=violation.message)
    return Verdict(ok=True)
