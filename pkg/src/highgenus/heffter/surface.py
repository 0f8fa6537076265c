"""Heffter's neighborly surfaces, their duals and their stellar triangulations."""

import logging
from collections import Counter
from dataclasses import dataclass
from math import comb

from ..models import CellSurface, Verdict
from ..surface import dual_surface, find_isomorphism, validate_surface, vertex_degrees
from ..surface.core import edge_faces
from .field import FiniteField, make_field

logger = logging.getLogger(__name__)

Cycle = tuple[int, ...]


@dataclass(frozen=True)
class HeffterSurface:
    """q faces F_s on the elements of F_q; face s is at index s."""

    field: FiniteField
    faces: tuple[Cycle, ...]
    surface: CellSurface

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def genus(self) -> int:
        return comb(self.q, 2) // 2 - self.q + 1


def _cyclic_form(cycle: Cycle) -> Cycle:
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def heffter_surface(field: FiniteField) -> HeffterSurface:
    """Build F_s = (s + (alpha^k - 1)/(alpha - 1) for k = 0 .. q-2) for all s.

    Raises:
        DomainError: propagated from surface validation
    """
    q = field.q
    c = field.inv(field.sub(field.alpha, 1))
    offsets = [field.mul(field.sub(a, 1), c) for a in field.powers]
    faces = tuple(tuple(field.add(s, o) for o in offsets) for s in range(q))
    surface = validate_surface(faces, n_vertices=q)
    result = HeffterSurface(field=field, faces=faces, surface=surface)
    logger.info(f"Heffter surface for q={q}: f=({q},{comb(q, 2)},{q}), genus {result.genus}")
    return result


def _face_index(faces: tuple[Cycle, ...]) -> dict[Cycle, int]:
    return {_cyclic_form(face): s for s, face in enumerate(faces)}


def _maps_faces(
    faces: tuple[Cycle, ...], index: dict[Cycle, int], image: list[int]
) -> int | None:
    """Return the first face whose image is not a face, or None."""
    for s, face in enumerate(faces):
        if _cyclic_form(tuple(image[v] for v in face)) not in index:
            return s
    return None


def check_self_dual_and_actions(h: HeffterSurface) -> Verdict:
    """Verify the translations, the map F_s -> F_(alpha s - 1) and the complete dual graph."""
    field, faces, q = h.field, h.faces, h.q
    index = _face_index(faces)

    for t in range(q):
        image = [field.add(x, t) for x in range(q)]
        broken = _maps_faces(faces, index, image)
        if broken is not None:
            logger.warning(f"translation by {t} does not map face {broken} to a face")
            return Verdict(
                ok=False,
                witness={"action": "translation", "t": t, "face": broken},
                reason=f"x -> x + {t} does not preserve the faces",
            )

    for s, face in enumerate(faces):
        expected = field.sub(field.mul(field.alpha, s), 1)
        mapped = _cyclic_form(tuple(field.mul(field.alpha, v) for v in face))
        if index.get(mapped) != expected:
            logger.warning(f"alpha does not map F_{s} onto F_{expected}")
            return Verdict(
                ok=False,
                witness={"action": "multiplication", "face": s, "expected": expected},
                reason=f"x -> alpha x does not map F_{s} onto F_{expected}",
            )

    neighbors = {
        frozenset(owners) for owners in edge_faces(faces).values() if len(owners) == 2
    }
    if len(neighbors) != comb(q, 2):
        missing = next(
            [a, b]
            for a in range(q)
            for b in range(a + 1, q)
            if frozenset((a, b)) not in neighbors
        )
        return Verdict(
            ok=False,
            witness={"action": "dual graph", "faces": missing},
            reason=f"faces {missing[0]} and {missing[1]} share no edge",
        )
    return Verdict(ok=True)


def affine_automorphisms(h: HeffterSurface) -> int:
    """Count the maps x -> a x + t (a != 0) that carry oriented faces to faces."""
    field, q = h.field, h.q
    index = _face_index(h.faces)
    count = 0
    for a in range(1, q):
        for t in range(q):
            image = [field.add(field.mul(a, x), t) for x in range(q)]
            if _maps_faces(h.faces, index, image) is None:
                count += 1
    logger.debug(f"{count} affine automorphisms of the q={q} surface")
    return count


def check_self_duality(h: HeffterSurface) -> Verdict:
    """Check that the dual decomposition is isomorphic to the surface itself."""
    dual = dual_surface(h.surface)
    vertex_map = find_isomorphism(h.surface, dual)
    if vertex_map is None:
        return Verdict(ok=False, reason=f"q={h.q} surface is not self-dual")
    return Verdict(ok=True, witness={"map": [vertex_map[v] for v in range(h.q)]})


def check_dual_generator(h: HeffterSurface) -> Verdict:
    """Check that the dual decomposition is the surface built with generator -alpha.

    Around every vertex the faces follow each other with exponent step 2g+1,
    so the dual faces are progressions with ratio alpha^(2g+1) = -alpha.

    Returns:
        A verdict whose witness holds the other generator and, on success,
        the vertex map from the dual
    """
    field = h.field
    other = make_field(field.q, field.neg(field.alpha))
    dual = dual_surface(h.surface)
    vertex_map = find_isomorphism(dual, heffter_surface(other).surface)
    if vertex_map is None:
        return Verdict(
            ok=False,
            witness={"generator": other.alpha},
            reason=f"the dual of the q={h.q} surface is not the generator {other.alpha} surface",
        )
    return Verdict(
        ok=True,
        witness={"generator": other.alpha, "map": [vertex_map[v] for v in range(h.q)]},
    )


def stellar_triangulation(h: HeffterSurface) -> CellSurface:
    """Cone every face F_s from a new apex q + s."""
    q = h.q
    triangles = [
        (u, face[(i + 1) % len(face)], q + s)
        for s, face in enumerate(h.faces)
        for i, u in enumerate(face)
    ]
    return validate_surface(triangles, n_vertices=2 * q)


def vertex_degree_split(stellar: CellSurface) -> dict[int, int]:
    """Histogram degree -> number of vertices."""
    return dict(sorted(Counter(vertex_degrees(stellar)).items()))
