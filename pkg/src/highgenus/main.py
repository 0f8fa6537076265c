"""Command implementations behind the CLI.

Each command takes a RunConfig, writes its artifacts under the output
directory, prints a JSON summary, and returns a process exit code.
"""

import json
import logging
import sys
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path
from typing import Any

from .checks import certify, get_selected_checks, instantiate_checks
from .config import RunConfig
from .errors import (
    CertificationError,
    DomainError,
    EmbeddingFailure,
    HighGenusError,
    InternalAssertion,
)
from .geometry import realize, triangulate_mesh
from .heffter import (
    check_dual_generator,
    check_self_dual_and_actions,
    check_self_duality,
    heffter_surface,
    make_field,
    stellar_triangulation,
    vertex_degree_split,
)
from .io import (
    dump_json,
    read_mesh,
    read_scheme,
    read_surface,
    write_json,
    write_obj,
    write_off,
    write_surface,
)
from .mirror import build_qm, orient_qm, qm_genus, triangulate_equivelar
from .models import CellSurface, EmbeddedMesh, EmbeddingCertificate, SurfaceReport
from .reports import FullReport, ReportOptions
from .rotation import (
    canonical_rows,
    check_delta_star,
    network_scheme,
    ringel_current_graph,
    ringel_scheme,
    scheme_to_surface,
    theta_current_graph,
)
from .surface import analyze, validate_surface

logger = logging.getLogger(__name__)


def _require(value: int | None, flag: str) -> int:
    if value is None:
        raise DomainError(f"{flag} is required")
    return value


def _emit(summary: dict[str, Any]) -> None:
    sys.stdout.write(dump_json(summary))


def _surface_summary(surface: CellSurface, report: SurfaceReport) -> dict[str, Any]:
    return {
        "n_vertices": surface.n_vertices,
        "n_faces": len(surface.faces),
        "report": report.model_dump(mode="json"),
    }


def cmd_ringel(config: RunConfig) -> int:
    """Neighborly triangulation from Ringel's current graph, or from a network file."""
    s: int | None = None
    if config.network is not None:
        _, scheme = network_scheme(config.network)
        stem = config.out_dir / f"ringel-{config.network.stem}"
    else:
        s = _require(config.s, "--s")
        stem = config.out_dir / f"ringel-s{s}"
        scheme = ringel_scheme(s)

    surface = scheme_to_surface(scheme)
    report = analyze(surface)
    delta = check_delta_star(scheme)
    logger.info(f"n={scheme.n} genus={report.genus} neighborly={report.neighborly}")

    write_json(f"{stem}-scheme.json", {"n": scheme.n, "rows": canonical_rows(scheme)})
    write_surface(f"{stem}-surface.json", surface)
    if config.current_graph and s is not None:
        graph = theta_current_graph() if s == 0 else ringel_current_graph(s)
        write_json(f"{stem}-current-graph.json", graph)
    summary = {**_surface_summary(surface, report), "delta_star": delta.model_dump(mode="json")}
    write_json(f"{stem}-report.json", summary)
    _emit(summary)
    return 0


def cmd_heffter(config: RunConfig) -> int:
    """Heffter's neighborly surface over F_q, optionally with its stellar triangulation."""
    q = _require(config.q, "--q")
    stem = config.out_dir / (f"heffter-q{q}-stellar" if config.triangulate else f"heffter-q{q}")

    field = make_field(q, config.generator)
    h = heffter_surface(field)
    actions = check_self_dual_and_actions(h)
    if not actions:
        raise InternalAssertion(f"group actions fail: {actions.reason}", actions.witness)
    duality = check_self_duality(h)
    dual_generator = check_dual_generator(h)
    if not dual_generator:
        raise InternalAssertion(dual_generator.reason, dual_generator.witness)
    surface = stellar_triangulation(h) if config.triangulate else h.surface
    report = analyze(surface)
    logger.info(f"q={q} genus={report.genus}")

    write_surface(f"{stem}-surface.json", surface)
    summary: dict[str, Any] = {
        "field": field.describe().model_dump(mode="json"),
        **_surface_summary(surface, report),
        "group_actions": actions.model_dump(mode="json"),
        "self_dual": duality.model_dump(mode="json"),
        "dual_generator": dual_generator.model_dump(mode="json"),
    }
    if config.triangulate:
        summary["degree_split"] = {str(k): v for k, v in vertex_degree_split(surface).items()}
    write_json(f"{stem}-report.json", summary)
    _emit(summary)
    return 0


def cmd_mirror(config: RunConfig) -> int:
    """The mirror surface Q_m, coherently oriented, optionally triangulated."""
    m = _require(config.m, "--m")
    stem = config.out_dir / (f"mirror-m{m}-triangulated" if config.triangulate else f"mirror-m{m}")

    qm, _ = build_qm(m)
    surface = triangulate_equivelar(qm) if config.triangulate else orient_qm(qm)
    report = analyze(surface)
    if report.genus != qm_genus(m):
        logger.warning(f"genus {report.genus} differs from 1+(m-4)2^(m-3) = {qm_genus(m)}")

    write_json(f"{stem}-qm.json", qm)
    write_surface(f"{stem}-surface.json", surface)
    summary = _surface_summary(surface, report)
    write_json(f"{stem}-report.json", summary)
    _emit(summary)
    return 0


def _selected_checks(config: RunConfig):
    classes = get_selected_checks(list(config.checks) if config.checks else None)
    return instantiate_checks(classes, config.threads)


def _write_mesh(path: Path, mesh: EmbeddedMesh, config: RunConfig) -> Path:
    match config.output_format():
        case "off":
            return write_off(path, mesh, config.decimals)
        case "obj":
            return write_obj(path, mesh, config.decimals)
        case _:
            return write_json(path, mesh)


def cmd_realize(config: RunConfig) -> int:
    """Full pipeline from the deformed cube to a certified mesh of Q_m in R^3.

    Any positive epsilon is accepted; outside (0, 1/2) the run goes on with a
    warning and its outcome is recorded, a `-failure.json` when the pipeline
    stops early. The mesh is only written when it is certified, or with
    --force.
    """
    m = _require(config.m, "--m")
    out = config.out or config.out_dir / f"realize-m{m}.{config.output_format()}"
    stem = out.with_suffix("")

    in_range = config.epsilon < Fraction(1, 2)
    if not in_range:
        logger.warning(f"epsilon = {config.epsilon} is outside (0, 1/2); recording the outcome")

    try:
        realization = realize(m, config.epsilon, config.f0, check_range=in_range)
    except CertificationError as e:
        logger.critical(f"{type(e).__name__}: {e.message}")
        write_json(
            f"{stem}-failure.json",
            {"error": type(e).__name__, "message": e.message, "witness": e.witness},
        )
        return e.exit_code

    mesh = triangulate_mesh(realization.mesh) if config.triangulate else realization.mesh

    logger.info("=" * 60)
    logger.info("PHASE 5: Certification")
    logger.info("=" * 60)
    certificate = certify(mesh, _selected_checks(config))
    write_json(f"{stem}-certificate.json", certificate)

    if not certificate.ok and not config.force:
        raise EmbeddingFailure(
            "the realized mesh failed certification; not writing it (use --force)",
            {"failures": len(certificate.failures), "defects": len(certificate.defects)},
        )
    _write_mesh(out, mesh, config)
    _emit(certificate.model_dump(mode="json"))
    return 0 if certificate.ok else EmbeddingFailure.exit_code


def cmd_verify(config: RunConfig) -> int:
    """Re-certify a mesh file; exit code 4 when it does not pass."""
    if config.input is None:
        raise DomainError("verify needs a mesh file")
    mesh = read_mesh(config.input)
    certificate = certify(mesh, _selected_checks(config))
    if config.out is not None:
        write_json(config.out, certificate)
    _emit(certificate.model_dump(mode="json"))
    return 0 if certificate.ok else EmbeddingFailure.exit_code


def _input_kind(path: Path) -> str:
    """"mesh", "scheme" or "surface"; unreadable JSON is left to the surface reader."""
    if path.suffix.lower() in (".off", ".obj"):
        return "mesh"
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return "surface"
    if isinstance(data, dict) and "vertices" in data:
        return "mesh"
    if isinstance(data, dict) and "rows" in data:
        return "scheme"
    return "surface"


def cmd_report(config: RunConfig) -> int:
    """Markdown report of a surface, rotation scheme or mesh file."""
    if config.input is None:
        raise DomainError("report needs an input file")
    path = config.input
    options = ReportOptions(use_collapsible=not config.no_collapse)
    certificate: EmbeddingCertificate | None = None
    metadata: dict[str, str] = {"file": path.name}

    kind = _input_kind(path)
    if kind == "mesh":
        mesh = read_mesh(path)
        metadata.update(mesh.metadata)
        certificate = certify(mesh, _selected_checks(config))
        try:
            surface = validate_surface(mesh.faces, len(mesh.vertices))
            report: SurfaceReport | None = analyze(surface)
        except DomainError as e:
            logger.warning(f"mesh faces do not form a surface: {e}")
            surface = CellSurface(n_vertices=len(mesh.vertices), faces=mesh.faces)
            report = None
    elif kind == "scheme":
        scheme = read_scheme(path)
        delta = check_delta_star(scheme)
        metadata["rule Delta*"] = "holds" if delta else delta.reason
        surface = scheme_to_surface(scheme)
        report = analyze(surface)
    else:
        surface = read_surface(path)
        report = analyze(surface)

    markdown = FullReport(
        f"Surface report: {path.name}",
        surface,
        report,
        certificate=certificate,
        metadata=metadata,
        options=options,
        selected_checks=(
            [cls.cli_code() for cls in get_selected_checks(list(config.checks))]
            if config.checks
            else None
        ),
    ).build()
    if config.out is not None:
        config.out.parent.mkdir(parents=True, exist_ok=True)
        config.out.write_text(markdown + "\n")
        logger.info(f"Saved report to {config.out}")
    else:
        sys.stdout.write(markdown + "\n")
    return 0


COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "ringel": cmd_ringel,
    "heffter": cmd_heffter,
    "mirror": cmd_mirror,
    "realize": cmd_realize,
    "verify": cmd_verify,
    "report": cmd_report,
}


def main(config: RunConfig) -> int:
    """Run one command and map package errors to exit codes.

    Returns:
        0 on success, 2 parse error, 3 domain error, 4 certification
        failure, 5 internal assertion
    """
    command = COMMANDS.get(config.command)
    if command is None:
        logger.critical(f"unknown command {config.command!r}")
        return DomainError.exit_code
    config.out_dir.mkdir(parents=True, exist_ok=True)
    try:
        return command(config)
    except HighGenusError as e:
        logger.critical(f"{type(e).__name__}: {e}")
        return e.exit_code
