"""Exact convex hulls by gift wrapping, in any dimension.

A first facet is found by tilting a supporting hyperplane until its tight
set spans a hyperplane; every further facet is reached by rotating a known
facet around one of its ridges. Ridges are the facets of the facet, found
by the same procedure one dimension down.
"""

import logging
from collections import deque
from collections.abc import Sequence
from fractions import Fraction

from ..errors import DegenerateSpan, DomainError, InternalAssertion
from ..models import Facet, Polytope4, PolytopeSummary, Verdict
from .linalg import Vector, affine_rank, dot, nullspace, primitive, rank, sub

logger = logging.getLogger(__name__)

RawFacet = tuple[Vector, Fraction, frozenset[int]]


def _tight(points: Sequence[Vector], normal: Vector) -> tuple[Fraction, frozenset[int]]:
    values = [dot(normal, p) for p in points]
    top = max(values)
    return top, frozenset(i for i, v in enumerate(values) if v == top)


def _directions(points: Sequence[Vector], indices: Sequence[int]) -> list[Vector]:
    base = points[indices[0]]
    return [sub(points[i], base) for i in indices[1:]]


def _first_facet(points: Sequence[Vector], d: int) -> RawFacet:
    normal: Vector = tuple(Fraction(-1 if i == 0 else 0) for i in range(d))
    _, tight = _tight(points, normal)
    while rank(_directions(points, sorted(tight))) < d - 1:
        indices = sorted(tight)
        w = nullspace([*_directions(points, indices), normal], d)[0]
        base = points[indices[0]]
        # Tilt until a new point becomes tight.
        alpha = max(
            dot(w, sub(points[i], base)) / -dot(normal, sub(points[i], base))
            for i in range(len(points))
            if i not in tight
        )
        normal = primitive(tuple(alpha * a + b for a, b in zip(normal, w)))
        _, tight = _tight(points, normal)
    offset, tight = _tight(points, normal)
    return normal, offset, tight


def _ridges(points: Sequence[Vector], facet: RawFacet) -> list[frozenset[int]]:
    """Vertex sets of the facets of a facet, as indices into points."""
    normal, _, members = facet
    indices = sorted(members)
    drop = next(i for i, a in enumerate(normal) if a != 0)
    projected = [tuple(x for i, x in enumerate(points[j]) if i != drop) for j in indices]
    return [
        frozenset(indices[i] for i in ridge)
        for _, _, ridge in _hull(projected, len(normal) - 1)
    ]


def _pivot(points: Sequence[Vector], facet: RawFacet, ridge: frozenset[int]) -> RawFacet:
    """Rotate a facet around one of its ridges onto the neighboring facet."""
    normal, _, members = facet
    d = len(normal)
    indices = sorted(ridge)
    base = points[indices[0]]
    w = nullspace([*_directions(points, indices), normal], d)[0]
    inside = next(i for i in sorted(members) if i not in ridge)
    if dot(w, sub(points[inside], base)) > 0:
        w = tuple(-x for x in w)
    alpha = max(
        dot(w, sub(points[i], base)) / -dot(normal, sub(points[i], base))
        for i in range(len(points))
        if i not in members
    )
    rotated = primitive(tuple(alpha * a + b for a, b in zip(normal, w)))
    offset, tight = _tight(points, rotated)
    return rotated, offset, tight


def _hull(points: Sequence[Vector], d: int) -> list[RawFacet]:
    if d == 1:
        values = [p[0] for p in points]
        low, high = min(values), max(values)
        if low == high:
            raise DegenerateSpan("points do not span a line")
        return [
            ((Fraction(-1),), -low, frozenset(i for i, v in enumerate(values) if v == low)),
            ((Fraction(1),), high, frozenset(i for i, v in enumerate(values) if v == high)),
        ]

    first = _first_facet(points, d)
    found: dict[frozenset[int], RawFacet] = {first[2]: first}
    queue = deque([first])
    while queue:
        facet = queue.popleft()
        for ridge in _ridges(points, facet):
            neighbor = _pivot(points, facet, ridge)
            if neighbor[2] not in found:
                found[neighbor[2]] = neighbor
                queue.append(neighbor)
    return list(found.values())


def convex_hull(points: Sequence[Sequence[Fraction]]) -> list[Facet]:
    """All facets of the hull of full-dimensional points, sorted by vertex list.

    Raises:
        DomainError: no points or repeated points
        DegenerateSpan: the points do not affinely span their ambient space
    """
    if not points:
        raise DomainError("the hull of no points is empty")
    pts = [tuple(Fraction(x) for x in p) for p in points]
    d = len(pts[0])
    if len(set(pts)) != len(pts):
        raise DomainError("input points must be distinct")
    if affine_rank(pts) < d:
        raise DegenerateSpan(
            f"points span affine dimension {affine_rank(pts)} < {d}",
            {"rank": affine_rank(pts)},
        )

    facets = [
        Facet(normal=normal, offset=offset, vertices=tuple(sorted(tight)))
        for normal, offset, tight in _hull(pts, d)
    ]
    facets.sort(key=lambda f: f.vertices)
    logger.debug(f"hull of {len(pts)} points in R^{d}: {len(facets)} facets")
    return facets


def hull4(points: Sequence[Sequence[Fraction]]) -> Polytope4:
    """Exact hull of points spanning R^4.

    Args:
        points: Rational points in R^4, at least five affinely independent

    Returns:
        Polytope4 with the points and every facet sorted by vertex list

    Raises:
        DomainError: wrong dimension, repeated points or a degenerate span
    """
    if points and len(points[0]) != 4:
        raise DomainError(f"expected points in R^4, got dimension {len(points[0])}")
    facets = convex_hull(points)
    pts = tuple(tuple(Fraction(x) for x in p) for p in points)
    return Polytope4(points=pts, facets=tuple(facets))


def check_hull(polytope: Polytope4) -> Verdict:
    """Every point lies beneath every facet, tight exactly on its listed vertices."""
    for index, facet in enumerate(polytope.facets):
        for i, p in enumerate(polytope.points):
            value = dot(facet.normal, p)
            if value > facet.offset or (value == facet.offset) != (i in facet.vertices):
                return Verdict(
                    ok=False,
                    witness={"facet": index, "point": i},
                    reason=f"point {i} is misplaced with respect to facet {index}",
                )
        if affine_rank([polytope.points[i] for i in facet.vertices]) != 3:
            return Verdict(ok=False, witness={"facet": index}, reason="facet is not 3-dimensional")
    return Verdict(ok=True)


def facets_containing(polytope: Polytope4, vertex_ids: Sequence[int]) -> list[int]:
    wanted = set(vertex_ids)
    return [i for i, f in enumerate(polytope.facets) if wanted <= set(f.vertices)]


def face_closure(polytope: Polytope4, vertex_ids: Sequence[int]) -> frozenset[int] | None:
    """Smallest face containing the given vertices; None if that is the whole polytope."""
    containing = facets_containing(polytope, vertex_ids)
    if not containing:
        return None
    common = set(polytope.facets[containing[0]].vertices)
    for i in containing[1:]:
        common &= set(polytope.facets[i].vertices)
    return frozenset(common)


def is_vertex(polytope: Polytope4, v: int) -> bool:
    normals = [polytope.facets[i].normal for i in facets_containing(polytope, [v])]
    return rank(normals) == 4 if normals else False


def is_face(polytope: Polytope4, vertex_ids: Sequence[int], dim: int) -> bool:
    """Whether the points form exactly a face of the given dimension."""
    if face_closure(polytope, vertex_ids) != frozenset(vertex_ids):
        return False
    return affine_rank([polytope.points[i] for i in vertex_ids]) == dim


def is_edge(polytope: Polytope4, u: int, v: int) -> bool:
    return is_face(polytope, [u, v], 1)


def facet_ridges(polytope: Polytope4, index: int) -> list[tuple[int, ...]]:
    """The 2-faces of a facet as sorted vertex lists."""
    facet = polytope.facets[index]
    raw = (facet.normal, facet.offset, frozenset(facet.vertices))
    return sorted(tuple(sorted(r)) for r in _ridges(polytope.points, raw))


def _is_combinatorial_cube(polytope: Polytope4, index: int) -> bool:
    if len(polytope.facets[index].vertices) != 8:
        return False
    ridges = facet_ridges(polytope, index)
    if len(ridges) != 6 or any(len(r) != 4 for r in ridges):
        return False
    counts: dict[int, int] = {}
    for r in ridges:
        for v in r:
            counts[v] = counts.get(v, 0) + 1
    return all(c == 3 for c in counts.values())


def polytope_summary(
    polytope: Polytope4,
    quads: Sequence[Sequence[int]] = (),
    edges: Sequence[tuple[int, int]] = (),
) -> PolytopeSummary:
    """Vertex and facet counts, cubicality, and whether given quads and edges survive."""
    n_vertices = sum(is_vertex(polytope, v) for v in range(len(polytope.points)))
    summary = PolytopeSummary(
        n_vertices=n_vertices,
        n_facets=len(polytope.facets),
        cubical=all(_is_combinatorial_cube(polytope, i) for i in range(len(polytope.facets))),
        quads_are_faces=all(is_face(polytope, q, 2) for q in quads),
        edges_are_edges=all(is_edge(polytope, u, v) for u, v in edges),
    )
    logger.info(
        f"Polytope: {summary.n_vertices} vertices, {summary.n_facets} facets, "
        f"cubical={summary.cubical}"
    )
    return summary


def two_face_check(polytope: Polytope4, quads: Sequence[Sequence[int]]) -> Verdict:
    for index, quad in enumerate(quads):
        if not is_face(polytope, quad, 2):
            return Verdict(
                ok=False,
                witness={"quad": index, "vertices": list(quad)},
                reason=f"quad {index} is not a 2-face of the hull",
            )
    return Verdict(ok=True)


def assert_all_vertices(polytope: Polytope4) -> None:
    """Raises InternalAssertion if some input point is not a vertex of the hull."""
    lost = [v for v in range(len(polytope.points)) if not is_vertex(polytope, v)]
    if lost:
        raise InternalAssertion(
            f"{len(lost)} points are not hull vertices", {"points": lost[:10]}
        )
