"""The quad surface Q_m in the boundary of the m-cube.

Faces of the m-cube are codes over {0, 1, *}; a vertex code has no *, an
edge code one, and Q_m keeps exactly the 2-faces whose two * sit at
cyclically adjacent positions (m-1 and 0 included). Vertex codes map to
vertex ids by reading them as binary numbers, position 0 most significant.
"""

import logging
from itertools import product

from ..errors import DomainError, InternalAssertion
from ..models import CellSurface, QmComplex
from ..surface import is_coherently_oriented, validate_surface

logger = logging.getLogger(__name__)

STAR = "*"


def vertex_code(v: int, m: int) -> str:
    return format(v, f"0{m}b")


def vertex_id(code: str) -> int:
    return int(code, 2)


def code_parity(code: str) -> int:
    """Parity of the number of 1 entries."""
    return code.count("1") % 2


def star_positions(code: str) -> tuple[int, ...]:
    return tuple(i for i, c in enumerate(code) if c == STAR)


def is_qm_quad(code: str) -> bool:
    """A 2-face belongs to Q_m iff its two * are cyclically adjacent."""
    stars = star_positions(code)
    if len(stars) != 2:
        return False
    m = len(code)
    a, b = stars
    return (b - a) % m == 1 or (a - b) % m == 1


def free_pair(code: str) -> tuple[int, int]:
    """The free positions (a, b) of a Q_m quad with b = a + 1 mod m."""
    a, b = star_positions(code)
    if (b - a) % len(code) == 1:
        return a, b
    return b, a


def _fill(m: int, fixed: dict[int, str]) -> list[str]:
    """All codes with the given positions fixed and the rest running over 0/1."""
    free = [i for i in range(m) if i not in fixed]
    codes = []
    for bits in product("01", repeat=len(free)):
        chars = [""] * m
        for i, c in fixed.items():
            chars[i] = c
        for i, c in zip(free, bits):
            chars[i] = c
        codes.append("".join(chars))
    return codes


def _set(code: str, values: dict[int, str]) -> str:
    chars = list(code)
    for i, c in values.items():
        chars[i] = c
    return "".join(chars)


def quad_cycle(code: str) -> tuple[int, int, int, int]:
    """Vertex ids of a quad in the traversal 00, 10, 11, 01 of its free pair."""
    a, b = free_pair(code)
    return tuple(  # type: ignore[return-value]
        vertex_id(_set(code, {a: x, b: y}))
        for x, y in (("0", "0"), ("1", "0"), ("1", "1"), ("0", "1"))
    )


def build_qm(m: int) -> tuple[QmComplex, CellSurface]:
    """Enumerate vertices, edges and quads of Q_m and validate the surface.

    Quads are ordered by their first free position, then by the binary
    value of the fixed entries.

    Returns:
        The complex and its validated surface, labelled by cube codes.

    Raises:
        DomainError: m < 3
    """
    if m < 3:
        raise DomainError(f"Q_m needs m >= 3, got {m}", {"m": m})

    vertices = tuple(vertex_code(v, m) for v in range(2**m))
    edge_codes = tuple(code for i in range(m) for code in _fill(m, {i: STAR}))
    quads = tuple(
        code
        for j in range(m)
        for code in _fill(m, {j: STAR, (j + 1) % m: STAR})
    )
    qm = QmComplex(m=m, vertices=vertices, edges=edge_codes, quads=quads)
    surface = validate_surface(
        [quad_cycle(code) for code in quads], n_vertices=2**m, labels=vertices
    )
    logger.debug(f"Q_{m}: f=({len(vertices)},{len(edge_codes)},{len(quads)})")
    return qm, surface


def qm_genus(m: int) -> int:
    return 1 + (m - 4) * 2 ** (m - 3)


def oriented_quad(code: str) -> tuple[int, int, int, int]:
    """Canonical traversal when the fixed entries sum to an even number, reversed otherwise."""
    cycle = quad_cycle(code)
    if code_parity(code) == 0:
        return cycle
    return (cycle[0], cycle[3], cycle[2], cycle[1])


def orient_qm(qm: QmComplex) -> CellSurface:
    """Orient every quad by the parity rule; faces keep the order of qm.quads.

    Raises:
        InternalAssertion: two quads traverse a common edge in the same direction
    """
    faces = [oriented_quad(code) for code in qm.quads]
    surface = CellSurface(n_vertices=2**qm.m, faces=tuple(faces), labels=qm.vertices)
    if not is_coherently_oriented(surface):
        raise InternalAssertion(f"parity orientation of Q_{qm.m} is not coherent")
    return surface


def diagonal_is_even(code: str) -> bool:
    """Whether a quad is split along the diagonal joining its even-sum vertices.

    With free positions k-1, k counted from 1, the even-sum diagonal is used
    for even k and the odd-sum diagonal for odd k.
    """
    _, b = free_pair(code)
    return (b + 1) % 2 == 0


def split_quad(code: str) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Two triangles of the oriented quad, cut along the parity-selected diagonal."""
    cycle = oriented_quad(code)
    want = 0 if diagonal_is_even(code) else 1
    i = next(
        i for i in range(4) if code_parity(vertex_code(cycle[i], len(code))) == want
    )
    c = cycle[i:] + cycle[:i]
    return (c[0], c[1], c[2]), (c[0], c[2], c[3])


def triangulate_equivelar(qm: QmComplex) -> CellSurface:
    """Split every quad into two triangles without adding vertices.

    Triangles 2i and 2i+1 come from qm.quads[i].
    """
    triangles = [t for code in qm.quads for t in split_quad(code)]
    return validate_surface(triangles, n_vertices=2**qm.m, labels=qm.vertices)


def face_provenance(qm: QmComplex, triangulated: bool = False) -> tuple[str, ...]:
    """Quad code for each face of orient_qm or triangulate_equivelar output."""
    if triangulated:
        return tuple(code for code in qm.quads for _ in range(2))
    return qm.quads


def qm_vertex_link(qm: QmComplex, v: int) -> tuple[str, ...]:
    """The m quads around a vertex in cyclic order; consecutive ones share an edge."""
    code = vertex_code(v, qm.m)
    return tuple(
        _set(code, {j: STAR, (j + 1) % qm.m: STAR}) for j in range(qm.m)
    )
