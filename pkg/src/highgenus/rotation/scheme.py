"""Rotation schemes and the surfaces they determine."""

import logging
from collections.abc import Sequence

from ..errors import InvalidScheme
from ..models import CellSurface, RotationScheme, Verdict
from ..surface import validate_surface

logger = logging.getLogger(__name__)

MOEBIUS_ROW = (1, 3, 2, 6, 4, 5)


def cyclic_scheme(n: int, row0: Sequence[int]) -> RotationScheme:
    """Scheme whose row v is row 0 with every entry shifted by v mod n."""
    return RotationScheme(
        n=n,
        rows=tuple(tuple((x + v) % n for x in row0) for v in range(n)),
    )


def moebius_scheme() -> RotationScheme:
    """The seven-vertex neighborly torus."""
    return cyclic_scheme(7, MOEBIUS_ROW)


def canonical_rows(scheme: RotationScheme) -> tuple[tuple[int, ...], ...]:
    """Rotate every row to start at its smallest entry."""
    rows = []
    for row in scheme.rows:
        if not row:
            rows.append(())
            continue
        k = row.index(min(row))
        rows.append(tuple(row[k:]) + tuple(row[:k]))
    return tuple(rows)


def validate_scheme(scheme: RotationScheme) -> None:
    """Check ranges, repeated entries and the symmetry of adjacency.

    Raises:
        InvalidScheme: on the first violation found
    """
    if len(scheme.rows) != scheme.n:
        raise InvalidScheme(f"expected {scheme.n} rows, got {len(scheme.rows)}")
    members = [set(row) for row in scheme.rows]
    for i, row in enumerate(scheme.rows):
        if len(members[i]) != len(row):
            raise InvalidScheme(f"row {i} repeats a vertex", {"row": i})
        for j in row:
            if not 0 <= j < scheme.n or j == i:
                raise InvalidScheme(
                    f"row {i} contains invalid entry {j}", {"row": i, "entry": j}
                )
            if i not in members[j]:
                raise InvalidScheme(
                    f"{j} is in row {i} but {i} is not in row {j}",
                    {"row": i, "entry": j},
                )


def _successors(row: Sequence[int]) -> dict[int, int]:
    return {x: row[(k + 1) % len(row)] for k, x in enumerate(row)}


def _predecessors(row: Sequence[int]) -> dict[int, int]:
    return {x: row[k - 1] for k, x in enumerate(row)}


def scheme_to_surface(scheme: RotationScheme) -> CellSurface:
    """Trace the faces of a rotation scheme.

    From the directed edge (i, j) the walk continues with (j, k), where k is
    the predecessor of i in row j. Under this convention a row i containing
    the adjacent pair (j, k) yields the oriented triangle [i, j, k] whenever
    the scheme satisfies rule Delta*.

    Returns:
        The validated surface on scheme.n vertices, faces in tracing order

    Raises:
        InvalidScheme: a row is out of range, repeats an entry or the
            adjacency is not symmetric
        DomainError: the traced faces do not form a closed surface
    """
    validate_scheme(scheme)
    predecessors = [_predecessors(row) for row in scheme.rows]

    visited: set[tuple[int, int]] = set()
    faces: list[tuple[int, ...]] = []
    for i, row in enumerate(scheme.rows):
        for j in row:
            if (i, j) in visited:
                continue
            face = []
            u, v = i, j
            while (u, v) not in visited:
                visited.add((u, v))
                face.append(u)
                u, v = v, predecessors[v][u]
            faces.append(tuple(face))

    logger.debug(f"Traced {len(faces)} faces from a scheme on {scheme.n} vertices")
    return validate_surface(faces, n_vertices=scheme.n)


def check_delta_star(scheme: RotationScheme) -> Verdict:
    """Check rule Delta*: (j, k) adjacent in row i forces (k, i) in row j and (i, j) in row k.

    The witness is the first violating triple (i, j, k) in row order.
    """
    validate_scheme(scheme)
    successors = [_successors(row) for row in scheme.rows]
    for i, row in enumerate(scheme.rows):
        for j, k in _successors(row).items():
            if successors[j].get(k) != i or successors[k].get(i) != j:
                return Verdict(
                    ok=False,
                    witness={"i": i, "j": j, "k": k},
                    reason=f"row {i} has ({j}, {k}) but the triangle does not close",
                )
    return Verdict(ok=True)
