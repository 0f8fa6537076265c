"""Realization of Q_m in R^3 as a subcomplex of a Schlegel diagram.

The pipeline builds the deformed m-cube, certifies that every quad of Q_m
survives projection to the last four coordinates, takes the exact hull of
the projected vertices, and maps everything into the base facet.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from ..errors import (
    DomainError,
    EmbeddingFailure,
    InternalAssertion,
    MissingCertificate,
    NotPreserved,
)
from ..mirror import build_qm, code_parity, orient_qm, vertex_code
from ..mirror.qm import diagonal_is_even
from ..models import (
    DeformedCube,
    EmbeddedMesh,
    Polytope4,
    PreservationCertificate,
    QmComplex,
    SchlegelScene,
)
from .deformed_cube import (
    DEFAULT_EPSILON,
    build_deformed_cube,
    cube_vertices,
    preservation_certificate,
    project_to_R4,
    verify_cube_combinatorics,
)
from .hull import assert_all_vertices, hull4
from .schlegel import schlegel_scene

logger = logging.getLogger(__name__)


@dataclass
class Realization:
    """Everything the pipeline produced on the way to the mesh."""

    cube: DeformedCube
    qm: QmComplex
    certificates: list[PreservationCertificate]
    polytope: Polytope4
    scene: SchlegelScene
    mesh: EmbeddedMesh


def certify_quads(cube: DeformedCube, qm: QmComplex) -> list[PreservationCertificate]:
    """One preservation certificate per quad of Q_m.

    Raises:
        MissingCertificate: some quad is not strictly preserved
    """
    certificates = []
    for code in qm.quads:
        try:
            certificates.append(preservation_certificate(cube, code))
        except NotPreserved as e:
            raise MissingCertificate(
                f"quad {code} has no preservation certificate", {"face": code}
            ) from e
    return certificates


def realize(
    m: int,
    epsilon: Fraction | str = DEFAULT_EPSILON,
    f0: int = 0,
    *,
    check_range: bool = True,
) -> Realization:
    """Run the full pipeline and keep the intermediate objects.

    With check_range off, epsilon may be any positive rational; the cube is
    then only as good as its combinatorial check.

    Raises:
        DomainError: m < 4 or no facet f0
        EpsilonOutOfRange: epsilon outside (0, 1/2)
        MissingCertificate: a quad does not survive the projection
        EmbeddingFailure: an unchecked epsilon does not give a combinatorial cube
    """
    if m < 4:
        raise DomainError(f"realization needs m >= 4, got {m}", {"m": m})

    logger.info("=" * 60)
    logger.info(f"PHASE 1: Deformed {m}-cube with epsilon={Fraction(epsilon)}")
    logger.info("=" * 60)
    cube = build_deformed_cube(m, epsilon, check_range=check_range)
    verdict = verify_cube_combinatorics(cube)
    if not verdict:
        error = InternalAssertion if check_range else EmbeddingFailure
        raise error(f"deformed cube is not a cube: {verdict.reason}", verdict.witness)
    vertices = cube_vertices(cube)

    logger.info("=" * 60)
    logger.info("PHASE 2: Preservation certificates")
    logger.info("=" * 60)
    qm, _ = build_qm(m)
    certificates = certify_quads(cube, qm)
    logger.info(f"Certified {len(certificates)} quads")

    logger.info("=" * 60)
    logger.info("PHASE 3: Hull of the projection")
    logger.info("=" * 60)
    polytope = hull4([project_to_R4(v) for v in vertices])
    assert_all_vertices(polytope)
    logger.info(f"Hull has {len(polytope.points)} vertices and {len(polytope.facets)} facets")

    logger.info("=" * 60)
    logger.info(f"PHASE 4: Schlegel diagram from facet {f0}")
    logger.info("=" * 60)
    scene = schlegel_scene(polytope, f0)
    oriented = orient_qm(qm)
    mesh = EmbeddedMesh(
        vertices=scene.mapped,
        faces=oriented.faces,
        provenance=qm.quads,
        metadata={"m": str(m), "epsilon": str(cube.epsilon), "f0": str(f0)},
    )
    return Realization(
        cube=cube,
        qm=qm,
        certificates=certificates,
        polytope=polytope,
        scene=scene,
        mesh=mesh,
    )


def realize_surface(
    m: int, epsilon: Fraction | str = DEFAULT_EPSILON, f0: int = 0
) -> EmbeddedMesh:
    """Quad mesh of Q_m in R^3 with one provenance code per face.

    Args:
        m: Cube dimension, at least 4
        epsilon: Deformation parameter in (0, 1/2)
        f0: Base facet of the Schlegel diagram

    Returns:
        EmbeddedMesh with exact coordinates; certify it before trusting it
    """
    return realize(m, epsilon, f0).mesh


def triangulate_mesh(mesh: EmbeddedMesh) -> EmbeddedMesh:
    """Split each quad along its parity diagonal, keeping vertices and provenance.

    Raises:
        DomainError: the mesh has no provenance codes or a face is not a quad
    """
    if mesh.provenance is None:
        raise DomainError("triangulating a mesh needs provenance codes")
    triangles: list[tuple[int, ...]] = []
    provenance: list[str] = []
    for face, code in zip(mesh.faces, mesh.provenance, strict=True):
        if len(face) != 4:
            raise DomainError(f"face {face} of {code} is not a quad", {"face": list(face)})
        want = 0 if diagonal_is_even(code) else 1
        i = next(i for i in range(4) if code_parity(vertex_code(face[i], len(code))) == want)
        c = face[i:] + face[:i]
        triangles += [(c[0], c[1], c[2]), (c[0], c[2], c[3])]
        provenance += [code, code]
    return EmbeddedMesh(
        vertices=mesh.vertices,
        faces=tuple(triangles),
        provenance=tuple(provenance),
        metadata={**mesh.metadata, "triangulated": "true"},
    )
