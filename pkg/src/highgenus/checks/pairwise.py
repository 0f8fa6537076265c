"""Exact pairwise intersection of mesh faces.

Two faces of an embedded polyhedral surface may meet only in their common
subface: nothing, a shared vertex, or a shared edge. Each pair is decided
by intersecting the two convex polygons exactly. Non-parallel planes meet
in a line, on which each polygon cuts out a segment; coplanar polygons are
clipped against each other.
"""

import logging
import math
from collections.abc import Generator, Sequence
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any

from ..config import threads_from_env
from ..geometry.linalg import Vector, add, affine_rank, cross, dot, scale, sub
from ..models import EmbeddedMesh, RationalVector, Verdict
from ..surface.core import edge_key, face_sides
from .base import Check, Violation
from .planarity import plane_normal

logger = logging.getLogger(__name__)

Plane = tuple[Vector, Fraction] | None
"""Normal and offset of a face plane; None for degenerate or non-planar faces."""

Box = tuple[Vector, Vector]


def face_plane(points: Sequence[RationalVector]) -> Plane:
    if len(points) < 3 or affine_rank(points) != 2:
        return None
    normal = plane_normal(points)
    if normal is None:
        return None
    return normal, dot(normal, points[0])


def bounding_box(points: Sequence[RationalVector]) -> Box:
    return (
        tuple(min(c) for c in zip(*points)),
        tuple(max(c) for c in zip(*points)),
    )


def boxes_meet(a: Box, b: Box) -> bool:
    return all(lo <= hi for lo, hi in zip(a[0], b[1])) and all(
        lo <= hi for lo, hi in zip(b[0], a[1])
    )


def _section(points: Sequence[Vector], normal: Vector, offset: Fraction) -> list[Vector]:
    """Points where a polygon boundary meets a plane."""
    values = [dot(normal, p) - offset for p in points]
    k = len(points)
    out: list[Vector] = []
    for i in range(k):
        a, b = points[i], points[(i + 1) % k]
        va, vb = values[i], values[(i + 1) % k]
        if va == 0:
            out.append(a)
        if va * vb < 0:
            out.append(add(a, scale(va / (va - vb), sub(b, a))))
    return out


def _clip(polygon: list[Vector], a: Vector, b: Vector, normal: Vector, sign: int) -> list[Vector]:
    """Keep the part of a coplanar polygon on the closed inner side of line ab."""

    def side(x: Vector) -> Fraction:
        return sign * dot(normal, cross(sub(b, a), sub(x, a)))

    out: list[Vector] = []
    k = len(polygon)
    for i in range(k):
        cur, nxt = polygon[i], polygon[(i + 1) % k]
        sc, sn = side(cur), side(nxt)
        if sc >= 0:
            out.append(cur)
        if sc * sn < 0:
            out.append(add(cur, scale(sc / (sc - sn), sub(nxt, cur))))
    return out


def polygon_intersection(
    p: Sequence[Vector],
    plane_p: tuple[Vector, Fraction],
    q: Sequence[Vector],
    plane_q: tuple[Vector, Fraction],
) -> list[Vector]:
    """Points whose convex hull is the intersection of two planar convex polygons."""
    np_, dp = plane_p
    nq, dq = plane_q
    line = cross(np_, nq)

    if any(line):
        a = _section(p, nq, dq)
        b = _section(q, np_, dp)
        if not a or not b:
            return []
        a_lo, a_hi = min(a, key=lambda x: dot(line, x)), max(a, key=lambda x: dot(line, x))
        b_lo, b_hi = min(b, key=lambda x: dot(line, x)), max(b, key=lambda x: dot(line, x))
        lo = a_lo if dot(line, a_lo) >= dot(line, b_lo) else b_lo
        hi = a_hi if dot(line, a_hi) <= dot(line, b_hi) else b_hi
        if dot(line, lo) > dot(line, hi):
            return []
        return sorted({lo, hi})

    if dot(np_, q[0]) != dp:
        return []
    sign = 1 if dot(np_, nq) > 0 else -1
    clipped = list(p)
    for i in range(len(q)):
        clipped = _clip(clipped, q[i], q[(i + 1) % len(q)], np_, sign)
        if not clipped:
            return []
    return sorted(set(clipped))


def _in_shared_hull(x: Vector, shared: Sequence[Vector]) -> bool:
    if not shared:
        return False
    if len(shared) == 1:
        return x == shared[0]
    s0, s1 = shared
    d = sub(s1, s0)
    if any(cross(d, sub(x, s0))):
        return False
    t = dot(sub(x, s0), d) / dot(d, d)
    return 0 <= t <= 1


def check_face_pair(
    vertices: Sequence[Vector],
    faces: Sequence[Sequence[int]],
    planes: Sequence[Plane],
    i: int,
    j: int,
) -> dict[str, Any] | None:
    """Witness of an improper intersection of faces i and j, or None."""
    shared = sorted(set(faces[i]) & set(faces[j]))
    if len(shared) > 2 or (
        len(shared) == 2
        and edge_key(*shared) not in {edge_key(u, v) for u, v in face_sides(faces[i])}
    ):
        return {"faces": [i, j], "shared": shared, "kind": "shared vertices are not a common edge"}
    plane_i, plane_j = planes[i], planes[j]
    if plane_i is None or plane_j is None:
        return None

    points = polygon_intersection(
        [vertices[v] for v in faces[i]], plane_i, [vertices[v] for v in faces[j]], plane_j
    )
    shared_points = [vertices[v] for v in shared]
    if all(_in_shared_hull(x, shared_points) for x in points):
        return None
    return {
        "faces": [i, j],
        "shared": shared,
        "kind": "intersection exceeds the common subface",
        "dimension": affine_rank(points),
        "points": [[str(c) for c in x] for x in points],
    }


def candidate_pairs(boxes: Sequence[Box]) -> list[tuple[int, int]]:
    """Face pairs whose bounding boxes meet; all other pairs are disjoint."""
    return [
        (i, j)
        for i in range(len(boxes))
        for j in range(i + 1, len(boxes))
        if boxes_meet(boxes[i], boxes[j])
    ]


_worker_mesh: tuple[Sequence[Vector], Sequence[Sequence[int]], Sequence[Plane]] | None = None


def _init_worker(
    vertices: Sequence[Vector], faces: Sequence[Sequence[int]], planes: Sequence[Plane]
) -> None:
    global _worker_mesh
    _worker_mesh = (vertices, faces, planes)


def _check_chunk(pairs: Sequence[tuple[int, int]]) -> list[dict[str, Any]]:
    assert _worker_mesh is not None
    vertices, faces, planes = _worker_mesh
    failures = []
    for i, j in pairs:
        witness = check_face_pair(vertices, faces, planes, i, j)
        if witness is not None:
            failures.append(witness)
    return failures


def find_intersections(mesh: EmbeddedMesh, threads: int | None = None) -> list[dict[str, Any]]:
    """All improper face pairs, in pair order.

    Args:
        mesh: Mesh with planar convex faces
        threads: Worker processes; HIGHGENUS_THREADS when None
    """
    threads = threads if threads is not None else threads_from_env()
    vertices = [tuple(v) for v in mesh.vertices]
    faces = [tuple(f) for f in mesh.faces]
    planes = [face_plane([vertices[v] for v in f]) for f in faces]
    pairs = candidate_pairs([bounding_box([vertices[v] for v in f]) for f in faces])
    total = len(faces) * (len(faces) - 1) // 2
    logger.info(f"Checking {len(pairs)} of {total} face pairs with {threads} worker(s)")

    if threads == 1 or len(pairs) < 2:
        _init_worker(vertices, faces, planes)
        return _check_chunk(pairs)

    size = max(1, math.ceil(len(pairs) / (4 * threads)))
    chunks = [pairs[k : k + size] for k in range(0, len(pairs), size)]
    failures: list[dict[str, Any]] = []
    with ProcessPoolExecutor(
        max_workers=threads, initializer=_init_worker, initargs=(vertices, faces, planes)
    ) as pool:
        for part in pool.map(_check_chunk, chunks):
            failures.extend(part)
    return failures


class PairwiseCheck(Check):
    """No two faces meet outside their common vertex or edge."""

    @classmethod
    def cli_name(cls) -> str:
        return "pairwise-intersection"

    @classmethod
    def cli_code(cls) -> str:
        return "PWI"

    def __init__(self, threads: int | None = None):
        self.threads = threads

    def test(self, mesh: EmbeddedMesh) -> Generator[Violation, None, None]:
        for witness in find_intersections(mesh, self.threads):
            i, j = witness["faces"]
            yield Violation(self, f"faces {i} and {j}: {witness['kind']}", witness=witness)


def check_pairwise(mesh: EmbeddedMesh, threads: int | None = None) -> Verdict:
    """Whether all face pairs meet properly; every failing pair is in the witness."""
    failures = find_intersections(mesh, threads)
    if failures:
        logger.warning(f"{len(failures)} face pairs intersect improperly")
        return Verdict(
            ok=False,
            witness={"failures": failures},
            reason=f"{len(failures)} face pairs intersect improperly",
        )
    return Verdict(ok=True)
