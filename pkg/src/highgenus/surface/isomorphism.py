"""Combinatorial isomorphism of oriented cell surfaces.

An orientation-preserving isomorphism is fixed by the image of a single
dart, so the search tries every dart of the target as the image of one seed
dart of the source and propagates along faces and across edges.
"""

import logging

from ..errors import DomainError
from ..models import CellSurface
from .core import coherent_orientation, f_vector

logger = logging.getLogger(__name__)

Dart = tuple[int, int]


def _dart_tables(surface: CellSurface) -> tuple[dict[Dart, Dart], list[Dart]]:
    following: dict[Dart, Dart] = {}
    for face in surface.faces:
        k = len(face)
        for i in range(k):
            following[(face[i], face[(i + 1) % k])] = (
                face[(i + 1) % k],
                face[(i + 2) % k],
            )
    return following, sorted(following)


def _extend(
    seed: Dart,
    image: Dart,
    source: dict[Dart, Dart],
    target: dict[Dart, Dart],
) -> dict[int, int] | None:
    dart_map: dict[Dart, Dart] = {seed: image}
    vertex_map: dict[int, int] = {}
    used: set[int] = set()
    stack = [seed]
    while stack:
        d = stack.pop()
        e = dart_map[d]
        for u, x in ((d[0], e[0]), (d[1], e[1])):
            if u in vertex_map:
                if vertex_map[u] != x:
                    return None
            else:
                if x in used:
                    return None
                vertex_map[u] = x
                used.add(x)
        for nd, ne in ((source.get(d), target.get(e)), ((d[1], d[0]), (e[1], e[0]))):
            if nd is None or ne is None or nd not in source or ne not in target:
                return None
            if nd in dart_map:
                if dart_map[nd] != ne:
                    return None
            else:
                dart_map[nd] = ne
                stack.append(nd)
    return vertex_map


def find_isomorphism(
    a: CellSurface, b: CellSurface, allow_reflection: bool = True
) -> dict[int, int] | None:
    """Find a vertex bijection carrying the faces of `a` onto the faces of `b`.

    Both surfaces must be orientable and connected. With `allow_reflection`
    the map may reverse orientation.

    Returns:
        The vertex map, or None if the surfaces are not isomorphic
    """
    if f_vector(a) != f_vector(b):
        return None
    oa, ob = coherent_orientation(a), coherent_orientation(b)
    if oa is None or ob is None:
        raise DomainError("isomorphism testing needs orientable surfaces")

    source, source_darts = _dart_tables(oa)
    seed = source_darts[0]
    candidates = [ob]
    if allow_reflection:
        candidates.append(
            CellSurface(
                n_vertices=ob.n_vertices,
                faces=tuple(tuple(reversed(face)) for face in ob.faces),
            )
        )
    for candidate in candidates:
        target, target_darts = _dart_tables(candidate)
        for image in target_darts:
            vertex_map = _extend(seed, image, source, target)
            if vertex_map is not None and len(vertex_map) == a.n_vertices:
                logger.debug(f"Isomorphism found with seed {seed} -> {image}")
                return vertex_map
    return None
