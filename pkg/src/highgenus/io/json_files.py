"""Reading and writing JSON artifacts.

Every input is checked against its JSON Schema before it becomes a model;
outputs are written with a fixed layout so that identical inputs give
byte-identical files.
"""

import json
import logging
from pathlib import Path
from typing import Any, TypeVar

from jsonschema import Draft202012Validator
from pydantic import BaseModel, ValidationError

from ..errors import ParseError
from ..models import CellSurface, CurrentGraph, EmbeddedMesh, RotationScheme
from ..surface import validate_surface
from .schemas import (
    CURRENT_GRAPH_SCHEMA,
    MESH_SCHEMA,
    NETWORK_TEMPLATE_SCHEMA,
    SCHEME_SCHEMA,
    SURFACE_SCHEMA,
)

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


def load_json(path: Path | str, schema: dict[str, Any]) -> Any:
    """Parse a JSON file and validate it against a schema.

    Raises:
        ParseError: the file is unreadable, not JSON, or does not match the schema
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}", {"file": str(path)}) from e
    except json.JSONDecodeError as e:
        raise ParseError(
            f"{path} is not valid JSON: {e.msg}",
            {"file": str(path), "line": e.lineno, "column": e.colno},
        ) from e

    errors = sorted(Draft202012Validator(schema).iter_errors(data), key=lambda e: list(e.path))
    if errors:
        first = errors[0]
        location = "/".join(str(p) for p in first.absolute_path) or "(root)"
        raise ParseError(
            f"{path} is not a valid {schema.get('title', 'document')}: "
            f"{first.message} at {location}",
            {"file": str(path), "path": [str(p) for p in first.absolute_path]},
        )
    return data


def _to_model(model: type[M], data: Any, path: Path | str) -> M:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise ParseError(
            f"{path}: {e.error_count()} invalid field(s): {e.errors()[0]['msg']}",
            {"file": str(path)},
        ) from e


def surface_to_json(surface: CellSurface) -> dict[str, Any]:
    """The surface file layout: vertex count `n`, the faces, and labels if any."""
    data: dict[str, Any] = {"n": surface.n_vertices, "faces": [list(f) for f in surface.faces]}
    if surface.labels is not None:
        data["labels"] = list(surface.labels)
    return data


def write_surface(path: Path | str, surface: CellSurface) -> Path:
    return write_json(path, surface_to_json(surface))


def read_surface(path: Path | str) -> CellSurface:
    """Read and validate a surface file.

    A missing `n` defaults to one more than the largest vertex index. A
    declared `n` is kept, so a vertex in no face is rejected.

    Raises:
        ParseError: the file is unreadable or does not match the schema
        DomainError: the faces do not form a closed surface on `n` vertices
    """
    data = load_json(path, SURFACE_SCHEMA)
    return validate_surface(data["faces"], data.get("n"), data.get("labels"))


def read_scheme(path: Path | str) -> RotationScheme:
    return _to_model(RotationScheme, load_json(path, SCHEME_SCHEMA), path)


def read_current_graph(path: Path | str) -> CurrentGraph:
    return _to_model(CurrentGraph, load_json(path, CURRENT_GRAPH_SCHEMA), path)


def read_network_template(path: Path | str) -> dict[str, Any]:
    """A current graph whose sizes, rotations and currents are expressions in one parameter."""
    return load_json(path, NETWORK_TEMPLATE_SCHEMA)


def read_mesh_json(path: Path | str) -> EmbeddedMesh:
    return _to_model(EmbeddedMesh, load_json(path, MESH_SCHEMA), path)


def dump_json(data: BaseModel | dict[str, Any]) -> str:
    """Deterministic JSON text: two-space indent, trailing newline."""
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json")
    return json.dumps(data, indent=2) + "\n"


def write_json(path: Path | str, data: BaseModel | dict[str, Any]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_json(data))
    logger.info(f"Saved {path}")
    return path
