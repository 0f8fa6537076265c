"""Assembly of an embedding certificate from the selected checks."""

import logging
from collections.abc import Sequence

from ..errors import DomainError
from ..models import EmbeddedMesh, EmbeddingCertificate
from ..surface import analyze, validate_surface
from .base import Check, Severity
from .combinatorics import CombinatoricsCheck
from .pairwise import PairwiseCheck
from .planarity import ConvexityCheck, PlanarityCheck

logger = logging.getLogger(__name__)


def default_checks(threads: int | None = None) -> list[Check]:
    return [PlanarityCheck(), ConvexityCheck(), PairwiseCheck(threads), CombinatoricsCheck()]


def certify(
    mesh: EmbeddedMesh,
    checks: Sequence[Check] | None = None,
    threads: int | None = None,
) -> EmbeddingCertificate:
    """Run the checks, rebuild the surface from the faces and record its genus.

    A check that is not selected counts as passed, and so does a check that
    found only warnings. Never raises on a bad mesh; every violation ends up
    in the certificate.
    """
    checks = list(checks) if checks is not None else default_checks(threads)
    passed: dict[str, bool] = {}
    failures: list[dict] = []
    defects: list[dict] = []

    for check in checks:
        code = check.cli_code()
        violations = list(check.test(mesh))
        passed[code] = all(v.severity != Severity.CRITICAL for v in violations)
        for violation in violations:
            logger.debug(violation.message)
            (failures if code == PairwiseCheck.cli_code() else defects).append(
                violation.to_dict()
            )
        if not passed[code]:
            logger.warning(f"{check.cli_name()}: {len(violations)} violation(s)")
        elif violations:
            logger.info(f"{check.cli_name()}: ok with {len(violations)} warning(s)")
        else:
            logger.info(f"{check.cli_name()}: ok")

    genus: int | None = None
    try:
        surface = validate_surface(mesh.faces, len(mesh.vertices))
        report = analyze(surface)
        genus = report.genus
        if genus is None:
            defects.append(
                {"check": "surface", "severity": "critical", "message": "not orientable"}
            )
    except DomainError as e:
        defects.append(
            {"check": "surface", "severity": "critical", "message": e.message, **(e.witness or {})}
        )

    certificate = EmbeddingCertificate(
        planar_ok=passed.get(PlanarityCheck.cli_code(), True),
        convex_ok=passed.get(ConvexityCheck.cli_code(), True),
        pairwise_ok=passed.get(PairwiseCheck.cli_code(), True),
        combinatorics_ok=passed.get(CombinatoricsCheck.cli_code(), True),
        genus_from_mesh=genus,
        failures=tuple(failures),
        defects=tuple(defects),
    )
    if certificate.ok:
        logger.info(f"Mesh certified: genus {genus}")
    else:
        logger.critical(
            f"Mesh certification failed: {len(failures)} intersecting pairs, {len(defects)} defects"
        )
    return certificate
