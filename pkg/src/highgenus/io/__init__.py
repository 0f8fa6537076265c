"""File formats: JSON artifacts, OFF and OBJ meshes."""

from .json_files import (
    dump_json,
    load_json,
    read_current_graph,
    read_mesh_json,
    read_network_template,
    read_scheme,
    read_surface,
    surface_to_json,
    write_json,
    write_surface,
)
from .mesh_files import (
    DEFAULT_DECIMALS,
    format_decimal,
    read_mesh,
    read_obj,
    read_off,
    sidecar_path,
    write_obj,
    write_off,
)

__all__ = [
    "DEFAULT_DECIMALS",
    "dump_json",
    "format_decimal",
    "load_json",
    "read_current_graph",
    "read_mesh",
    "read_mesh_json",
    "read_network_template",
    "read_obj",
    "read_off",
    "read_scheme",
    "read_surface",
    "sidecar_path",
    "surface_to_json",
    "write_json",
    "write_obj",
    "write_off",
    "write_surface",
]
