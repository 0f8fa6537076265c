"""OFF and OBJ export of embedded meshes, with an exact JSON sidecar.

OFF and OBJ carry decimal coordinates, rounded to a fixed number of
places. The sidecar `<file>.json` holds the same mesh with exact rational
coordinates and is preferred over the decimals when the mesh is read back.
"""

import logging
from fractions import Fraction
from pathlib import Path

from ..errors import ParseError
from ..models import EmbeddedMesh
from .json_files import read_mesh_json, write_json

logger = logging.getLogger(__name__)

DEFAULT_DECIMALS = 12


def format_decimal(value: Fraction, decimals: int = DEFAULT_DECIMALS) -> str:
    """Round half-even to a fixed number of places, exactly."""
    scaled = round(Fraction(value) * 10**decimals)
    digits = str(abs(scaled)).rjust(decimals + 1, "0")
    sign = "-" if scaled < 0 else ""
    return f"{sign}{digits[:-decimals]}.{digits[-decimals:]}"


def sidecar_path(path: Path | str) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".json")


def _header(mesh: EmbeddedMesh) -> list[str]:
    lines = ["# highgenus mesh"]
    lines += [f"# {key} = {value}" for key, value in sorted(mesh.metadata.items())]
    return lines


def write_off(path: Path | str, mesh: EmbeddedMesh, decimals: int = DEFAULT_DECIMALS) -> Path:
    path = Path(path)
    lines = ["OFF", *_header(mesh)]
    lines.append(f"{len(mesh.vertices)} {len(mesh.faces)} 0")
    lines += [" ".join(format_decimal(c, decimals) for c in v) for v in mesh.vertices]
    lines += [" ".join(str(x) for x in (len(f), *f)) for f in mesh.faces]
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")
    write_json(sidecar_path(path), mesh)
    logger.info(f"Saved {path}")
    return path


def write_obj(path: Path | str, mesh: EmbeddedMesh, decimals: int = DEFAULT_DECIMALS) -> Path:
    path = Path(path)
    lines = _header(mesh)
    lines += ["v " + " ".join(format_decimal(c, decimals) for c in v) for v in mesh.vertices]
    # OBJ indices are 1-based
    lines += ["f " + " ".join(str(x + 1) for x in f) for f in mesh.faces]
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")
    write_json(sidecar_path(path), mesh)
    logger.info(f"Saved {path}")
    return path


def _data_lines(path: Path) -> list[str]:
    try:
        text = path.read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}", {"file": str(path)}) from e
    return [s for line in text.splitlines() if (s := line.split("#", 1)[0].strip())]


def _rational(token: str, path: Path, line: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"{path}: bad number {token!r}", {"file": str(path), "line": line}) from e


def _integer(token: str, path: Path, line: int) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise ParseError(f"{path}: bad index {token!r}", {"file": str(path), "line": line}) from e


def read_off(path: Path | str) -> EmbeddedMesh:
    """Decimal OFF file, as exact decimals; no sidecar lookup."""
    path = Path(path)
    lines = _data_lines(path)
    if not lines or lines[0] != "OFF":
        raise ParseError(f"{path} does not start with OFF", {"file": str(path)})
    try:
        n_v, n_f = (int(x) for x in lines[1].split()[:2])
    except (IndexError, ValueError) as e:
        raise ParseError(f"{path}: bad OFF counts line", {"file": str(path)}) from e
    if len(lines) < 2 + n_v + n_f:
        raise ParseError(f"{path} is truncated", {"file": str(path)})

    vertices = []
    for i, line in enumerate(lines[2 : 2 + n_v]):
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"{path}: vertex {i} needs 3 coordinates", {"file": str(path)})
        vertices.append(tuple(_rational(t, path, i) for t in tokens))
    faces = []
    for i, line in enumerate(lines[2 + n_v : 2 + n_v + n_f]):
        tokens = [_integer(t, path, i) for t in line.split()]
        if not tokens or tokens[0] != len(tokens) - 1:
            raise ParseError(f"{path}: face {i} has a wrong vertex count", {"file": str(path)})
        faces.append(tuple(tokens[1:]))
    return EmbeddedMesh(vertices=tuple(vertices), faces=tuple(faces))


def read_obj(path: Path | str) -> EmbeddedMesh:
    """Vertices and faces of an OBJ file; texture and normal indices are dropped."""
    path = Path(path)
    vertices = []
    faces = []
    for i, line in enumerate(_data_lines(path)):
        tokens = line.split()
        if tokens[0] == "v":
            if len(tokens) < 4:
                raise ParseError(f"{path}: vertex line needs 3 coordinates", {"file": str(path)})
            vertices.append(tuple(_rational(t, path, i) for t in tokens[1:4]))
        elif tokens[0] == "f":
            faces.append(tuple(_integer(t.split("/")[0], path, i) - 1 for t in tokens[1:]))
    if not vertices or not faces:
        raise ParseError(f"{path} has no vertices or no faces", {"file": str(path)})
    return EmbeddedMesh(vertices=tuple(vertices), faces=tuple(faces))


def read_mesh(path: Path | str) -> EmbeddedMesh:
    """Any mesh file: JSON directly, OFF/OBJ through their sidecar when present.

    Raises:
        ParseError: unknown suffix or malformed file
    """
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix == ".json":
        return read_mesh_json(path)
    if suffix not in (".off", ".obj"):
        raise ParseError(f"unknown mesh format {suffix!r}", {"file": str(path)})
    sidecar = sidecar_path(path)
    if sidecar.exists():
        logger.info(f"Using exact coordinates from {sidecar}")
        return read_mesh_json(sidecar)
    logger.warning(f"No sidecar for {path}; verifying rounded decimal coordinates")
    return read_off(path) if suffix == ".off" else read_obj(path)
