"""Validation and analysis of cell surfaces given by face lists.

Faces are the single source of truth: edges, vertex links and face
adjacencies are always derived from the face cycles.
"""

import logging
from collections import defaultdict, deque
from collections.abc import Iterable, Sequence
from math import comb

from ..errors import (
    BrokenLink,
    Disconnected,
    DomainError,
    EdgeDegree,
    IrregularFace,
)
from ..models import CellSurface, FVector, GenusBound, SurfaceReport, Verdict

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def face_sides(face: Sequence[int]) -> Iterable[tuple[int, int]]:
    """Yield the consecutive vertex pairs of a face cycle, wrap-around included."""
    for i, u in enumerate(face):
        yield u, face[(i + 1) % len(face)]


def edge_faces(faces: Sequence[Sequence[int]]) -> dict[Edge, list[int]]:
    """Map every undirected edge to the indices of the faces containing it."""
    incidence: dict[Edge, list[int]] = defaultdict(list)
    for index, face in enumerate(faces):
        for u, v in face_sides(face):
            incidence[edge_key(u, v)].append(index)
    return incidence


def edges(surface: CellSurface) -> list[Edge]:
    return sorted(edge_faces(surface.faces))


def vertex_degrees(surface: CellSurface) -> list[int]:
    """Number of edges at every vertex, indexed by vertex."""
    degrees = [0] * surface.n_vertices
    for u, v in edges(surface):
        degrees[u] += 1
        degrees[v] += 1
    return degrees


def f_vector(surface: CellSurface) -> FVector:
    return FVector(
        f0=surface.n_vertices,
        f1=len(edge_faces(surface.faces)),
        f2=len(surface.faces),
    )


def _check_links(n_vertices: int, faces: Sequence[Sequence[int]]) -> None:
    # Each face through v contributes one arc of the link of v, joining the
    # two edges of that face at v. Every edge already has degree two, so the
    # link is a disjoint union of cycles and must be connected.
    link_arcs: dict[int, list[Edge]] = defaultdict(list)
    for face in faces:
        k = len(face)
        for i, v in enumerate(face):
            link_arcs[v].append((face[i - 1], face[(i + 1) % k]))

    for v in range(n_vertices):
        arcs = link_arcs.get(v)
        if not arcs:
            raise BrokenLink(f"vertex {v} lies in no face", {"vertex": v})
        adjacency: dict[int, list[int]] = defaultdict(list)
        for a, b in arcs:
            adjacency[a].append(b)
            adjacency[b].append(a)
        start = arcs[0][0]
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(adjacency):
            raise BrokenLink(
                f"link of vertex {v} splits into several cycles",
                {"vertex": v, "component": sorted(seen)},
            )


def _check_connected(n_vertices: int, incidence: dict[Edge, list[int]]) -> None:
    adjacency: dict[int, list[int]] = defaultdict(list)
    for u, v in incidence:
        adjacency[u].append(v)
        adjacency[v].append(u)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != n_vertices:
        missing = min(set(range(n_vertices)) - seen)
        raise Disconnected(
            f"edge graph is disconnected; vertex {missing} is unreachable from 0",
            {"vertex": missing},
        )


def validate_surface(
    faces: Sequence[Sequence[int]],
    n_vertices: int | None = None,
    labels: Sequence[str] | None = None,
) -> CellSurface:
    """Validate a face list and return it as a CellSurface.

    Args:
        faces: Boundary cycles of the 2-cells
        n_vertices: Vertex count; defaults to one more than the largest index
        labels: Optional vertex names

    Raises:
        DomainError: empty input or vertex index out of range
        IrregularFace: a cycle is shorter than 3 or repeats a vertex
        EdgeDegree: an edge lies in a number of faces other than two
        BrokenLink: a vertex link is not a single cycle
        Disconnected: the edge graph is not connected
    """
    if not faces:
        raise DomainError("a surface needs at least one face")
    if n_vertices is None:
        n_vertices = max((v for face in faces for v in face), default=-1) + 1
    if labels is not None and len(labels) != n_vertices:
        raise DomainError(f"expected {n_vertices} labels, got {len(labels)}")

    for index, face in enumerate(faces):
        if len(face) < 3:
            raise IrregularFace(
                f"face {index} has only {len(face)} vertices", {"face": index}
            )
        if len(set(face)) != len(face):
            raise IrregularFace(
                f"face {index} repeats a vertex", {"face": index, "cycle": list(face)}
            )
        for v in face:
            if not 0 <= v < n_vertices:
                raise DomainError(
                    f"face {index} uses vertex {v} outside 0..{n_vertices - 1}",
                    {"face": index, "vertex": v},
                )

    incidence = edge_faces(faces)
    for edge, owners in sorted(incidence.items()):
        if len(owners) != 2:
            raise EdgeDegree(
                f"edge {edge} lies in {len(owners)} faces",
                {"edge": list(edge), "faces": owners},
            )

    _check_links(n_vertices, faces)
    _check_connected(n_vertices, incidence)

    logger.debug(f"Validated surface with {n_vertices} vertices, {len(faces)} faces")
    return CellSurface(
        n_vertices=n_vertices,
        faces=tuple(tuple(face) for face in faces),
        labels=tuple(labels) if labels is not None else None,
    )


def _reversed(face: Sequence[int]) -> tuple[int, ...]:
    return (face[0], *reversed(face[1:]))


def coherent_orientation(surface: CellSurface) -> CellSurface | None:
    """Reorient faces so that every edge is traversed once in each direction.

    Returns None if the surface is not orientable. The first face keeps its
    given orientation.
    """
    faces = surface.faces
    incidence = edge_faces(faces)
    # +1 if the face walks the edge from its smaller to its larger end
    direction: dict[tuple[int, Edge], int] = {}
    for index, face in enumerate(faces):
        for u, v in face_sides(face):
            direction[(index, edge_key(u, v))] = 1 if u < v else -1

    flip: list[int | None] = [None] * len(faces)
    for root in range(len(faces)):
        if flip[root] is not None:
            continue
        flip[root] = 1
        queue = deque([root])
        while queue:
            f = queue.popleft()
            for u, v in face_sides(faces[f]):
                edge = edge_key(u, v)
                for g in incidence[edge]:
                    if g == f:
                        continue
                    same_way = direction[(f, edge)] * direction[(g, edge)]
                    wanted = -flip[f] * same_way  # type: ignore[operator]
                    if flip[g] is None:
                        flip[g] = wanted
                        queue.append(g)
                    elif flip[g] != wanted:
                        return None

    return CellSurface(
        n_vertices=surface.n_vertices,
        faces=tuple(
            tuple(face) if sign == 1 else _reversed(face)
            for face, sign in zip(faces, flip)
        ),
        labels=surface.labels,
    )


def is_coherently_oriented(surface: CellSurface) -> bool:
    darts: set[tuple[int, int]] = set()
    for face in surface.faces:
        for dart in face_sides(face):
            if dart in darts:
                return False
            darts.add(dart)
    return True


def check_intersection_condition(surface: CellSurface) -> Verdict:
    """Check that any two faces meet in nothing, a vertex, or a common edge.

    Two faces sharing exactly two vertices pass only if those vertices are
    consecutive in both cycles.
    """
    faces = surface.faces
    faces_at: dict[int, list[int]] = defaultdict(list)
    for index, face in enumerate(faces):
        for v in face:
            faces_at[v].append(index)
    sides = [{edge_key(u, v) for u, v in face_sides(face)} for face in faces]

    for i, face in enumerate(faces):
        shared: dict[int, list[int]] = defaultdict(list)
        for v in face:
            for j in faces_at[v]:
                if j > i:
                    shared[j].append(v)
        for j in sorted(shared):
            common = sorted(shared[j])
            if len(common) < 2:
                continue
            if len(common) == 2:
                edge = (common[0], common[1])
                if edge in sides[i] and edge in sides[j]:
                    continue
            return Verdict(
                ok=False,
                witness={"faces": [i, j], "shared": common},
                reason=f"faces {i} and {j} share {len(common)} vertices",
            )
    return Verdict(ok=True)


def max_genus_bound(n: int) -> GenusBound:
    """Upper bound (n-3)(n-4)/12 for the genus of a polyhedral map on n vertices."""
    if n < 4:
        raise DomainError(f"the genus bound needs n >= 4, got {n}", {"n": n})
    return GenusBound(
        n=n,
        genus=(n - 3) * (n - 4) // 12,
        requires_neighborly=n % 12 in (0, 3, 4, 7),
    )


def analyze(surface: CellSurface) -> SurfaceReport:
    """Compute the f-vector, Euler characteristic, genus and the derived flags.

    Args:
        surface: A surface that already passed validate_surface

    Returns:
        SurfaceReport; genus is None for a non-orientable surface and
        genus_bound_ok is None when the intersection condition fails
    """
    fv = f_vector(surface)
    chi = fv.euler_characteristic
    orientable = coherent_orientation(surface) is not None
    genus = 1 - chi // 2 if orientable else None
    intersection = bool(check_intersection_condition(surface))

    bound_ok: bool | None = None
    if intersection and genus is not None:
        bound_ok = 12 * genus <= (fv.f0 - 3) * (fv.f0 - 4) if fv.f0 >= 4 else genus == 0

    report = SurfaceReport(
        f_vector=fv,
        euler_characteristic=chi,
        genus=genus,
        orientable=orientable,
        simplicial=3 * fv.f2 == 2 * fv.f1,
        neighborly=fv.f1 == comb(fv.f0, 2),
        intersection_condition=intersection,
        genus_bound_ok=bound_ok,
    )
    logger.debug(
        f"f=({fv.f0},{fv.f1},{fv.f2}) chi={chi} genus={genus} "
        f"orientable={orientable} intersection={intersection}"
    )
    return report


def faces_around_vertices(surface: CellSurface) -> list[tuple[int, ...]]:
    """Cyclic sequence of faces around every vertex of a coherently oriented surface."""
    # In face f the dart (u, v) is followed by (v, w); the face across the
    # side (v, w) contains the dart (w, v).
    owner: dict[tuple[int, int], int] = {}
    nxt: dict[tuple[int, int], int] = {}
    for index, face in enumerate(surface.faces):
        k = len(face)
        for i, v in enumerate(face):
            owner[(face[i - 1], v)] = index
            nxt[(face[i - 1], v)] = face[(i + 1) % k]

    stars: list[tuple[int, ...]] = []
    incoming: dict[int, tuple[int, int]] = {}
    for dart in sorted(owner):
        incoming.setdefault(dart[1], dart)
    for v in range(surface.n_vertices):
        start = incoming[v]
        dart = start
        star: list[int] = []
        while True:
            star.append(owner[dart])
            w = nxt[dart]
            dart = (w, v)
            if dart == start:
                break
        stars.append(tuple(star))
    return stars


def dual_surface(surface: CellSurface) -> CellSurface:
    """Dual cell decomposition: one vertex per face, one face per vertex star."""
    oriented = coherent_orientation(surface)
    if oriented is None:
        raise DomainError("the dual is only built for orientable surfaces")
    return validate_surface(
        faces_around_vertices(oriented), n_vertices=len(surface.faces)
    )
