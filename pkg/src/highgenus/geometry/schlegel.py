"""Schlegel diagrams of 4-polytopes with exact rational coordinates."""

import logging
from collections.abc import Sequence
from fractions import Fraction

from ..errors import DomainError, InternalAssertion
from ..models import Polytope4, SchlegelScene
from .hull import is_edge
from .linalg import Vector, add, barycenter, det, dot, rank, scale, solve, sub

logger = logging.getLogger(__name__)


def _check_facet(polytope: Polytope4, f0: int) -> None:
    if not 0 <= f0 < len(polytope.facets):
        raise DomainError(
            f"facet {f0} does not exist; the hull has {len(polytope.facets)} facets",
            {"facet": f0},
        )


def choose_viewpoint(polytope: Polytope4, f0: int = 0) -> Vector:
    """A point beyond facet f0 and beneath every other facet.

    It lies on the ray from the vertex barycenter c through the barycenter
    y0 of f0, at parameter t halfway between 1 (the facet hyperplane) and
    the first crossing of another facet hyperplane.
    """
    _check_facet(polytope, f0)
    points = polytope.points
    c = barycenter(points)
    y0 = barycenter([points[i] for i in polytope.facets[f0].vertices])
    direction = sub(y0, c)

    crossings = []
    for j, facet in enumerate(polytope.facets):
        if j == f0:
            continue
        delta = dot(facet.normal, direction)
        if delta > 0:
            crossings.append((facet.offset - dot(facet.normal, c)) / delta)
    t = (1 + min(crossings)) / 2 if crossings else Fraction(2)
    viewpoint = add(c, scale(t, direction))

    for j, facet in enumerate(polytope.facets):
        value = dot(facet.normal, viewpoint)
        ok = value > facet.offset if j == f0 else value < facet.offset
        if not ok:
            raise InternalAssertion(
                f"viewpoint is on the wrong side of facet {j}", {"facet": j, "t": str(t)}
            )
    logger.debug(f"viewpoint for facet {f0} at t={t}")
    return viewpoint


def _frame(polytope: Polytope4, f0: int) -> tuple[int, tuple[int, int, int]]:
    """Origin and three frame vertices of facet f0, edge neighbors of the origin first."""
    members = polytope.facets[f0].vertices
    origin = members[0]
    others = [v for v in members if v != origin]
    candidates = [v for v in others if is_edge(polytope, origin, v)]
    candidates += [v for v in others if v not in candidates]

    base = polytope.points[origin]
    chosen: list[int] = []
    for v in candidates:
        trial = [sub(polytope.points[u], base) for u in [*chosen, v]]
        if rank(trial) == len(trial):
            chosen.append(v)
        if len(chosen) == 3:
            return origin, (chosen[0], chosen[1], chosen[2])
    raise InternalAssertion(f"facet {f0} is not 3-dimensional", {"facet": f0})


def _frame_coordinates(
    frame_vectors: Sequence[Vector], rows: tuple[int, int, int], x: Vector
) -> Vector:
    a = [[frame_vectors[j][i] for j in range(3)] for i in rows]
    solution = solve(a, [x[i] for i in rows])
    if solution is None:
        raise InternalAssertion("frame minor is singular")
    return solution


def _minor_rows(frame_vectors: Sequence[Vector]) -> tuple[int, int, int]:
    """First three coordinates in which the frame vectors are independent."""
    for skip in range(3, -1, -1):
        rows = tuple(i for i in range(4) if i != skip)
        a = [[frame_vectors[j][i] for j in range(3)] for i in rows]
        if det(a) != 0:
            return rows  # type: ignore[return-value]
    raise InternalAssertion("frame vectors are dependent")


def schlegel_map(polytope: Polytope4, f0: int, viewpoint: Vector, v: Vector) -> Vector:
    """Intersection of the segment from the viewpoint to v with the hyperplane of f0, in R^4.

    Args:
        polytope: The hull the viewpoint was chosen for
        f0: Index of the base facet
        viewpoint: A point beyond f0 and beneath all other facets
        v: A vertex of the polytope
    """
    facet = polytope.facets[f0]
    direction = sub(v, viewpoint)
    denominator = dot(facet.normal, direction)
    if denominator == 0:
        raise DomainError("the segment is parallel to the base facet")
    lam = (facet.offset - dot(facet.normal, viewpoint)) / denominator
    return add(viewpoint, scale(lam, direction))


def schlegel_scene(polytope: Polytope4, f0: int = 0) -> SchlegelScene:
    """Map every point into affine frame coordinates of the base facet."""
    viewpoint = choose_viewpoint(polytope, f0)
    origin, frame = _frame(polytope, f0)
    base = polytope.points[origin]
    frame_vectors = [sub(polytope.points[v], base) for v in frame]
    rows = _minor_rows(frame_vectors)

    mapped = tuple(
        _frame_coordinates(
            frame_vectors, rows, sub(schlegel_map(polytope, f0, viewpoint, p), base)
        )
        for p in polytope.points
    )
    return SchlegelScene(
        base_facet=f0, viewpoint=viewpoint, origin=origin, frame=frame, mapped=mapped
    )
