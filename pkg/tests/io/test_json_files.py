"""Tests for JSON reading, schema validation and deterministic output."""

import json

import pytest

from highgenus.errors import BrokenLink, ParseError
from highgenus.io import (
    dump_json,
    read_current_graph,
    read_mesh_json,
    read_scheme,
    read_surface,
    surface_to_json,
    write_json,
    write_surface,
)
from highgenus.models import CellSurface
from highgenus.rotation import (
    canonical_rows,
    moebius_scheme,
    scheme_to_surface,
    theta_current_graph,
)


TETRAHEDRON = ((0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2))


def test_surface_round_trip(tmp_path):
    """Test that a written surface reads back unchanged."""
    surface = CellSurface(n_vertices=4, faces=TETRAHEDRON)
    path = write_surface(tmp_path / "tetra.json", surface)
    assert json.loads(path.read_text()) == {"n": 4, "faces": [list(f) for f in TETRAHEDRON]}
    assert read_surface(path) == surface


def test_surface_vertex_count_default(tmp_path):
    """Test that a missing n defaults to one more than the largest index."""
    path = tmp_path / "faces.json"
    path.write_text(json.dumps({"faces": TETRAHEDRON}))
    assert read_surface(path).n_vertices == 4


def test_surface_file_with_declared_count(tmp_path):
    """Test reading the seven-vertex torus from a file that declares n."""
    faces = scheme_to_surface(moebius_scheme()).faces
    path = tmp_path / "torus.json"
    path.write_text(json.dumps({"n": 7, "faces": faces}))
    surface = read_surface(path)
    assert surface.n_vertices == 7
    assert surface_to_json(surface) == {"n": 7, "faces": [list(f) for f in faces]}


def test_surface_file_with_isolated_vertex(tmp_path):
    """Test that a declared vertex lying in no face is rejected."""
    faces = scheme_to_surface(moebius_scheme()).faces
    path = tmp_path / "torus.json"
    path.write_text(json.dumps({"n": 8, "faces": faces}))
    with pytest.raises(BrokenLink) as exc_info:
        read_surface(path)
    assert exc_info.value.witness == {"vertex": 7}
    assert exc_info.value.exit_code == 3


def test_scheme_and_current_graph(tmp_path):
    """Test reading a scheme and a current graph written by the package."""
    scheme = moebius_scheme()
    path = write_json(tmp_path / "scheme.json", {"n": scheme.n, "rows": canonical_rows(scheme)})
    assert read_scheme(path).rows == canonical_rows(scheme)

    graph = theta_current_graph()
    assert read_current_graph(write_json(tmp_path / "theta.json", graph)) == graph


def test_missing_file(tmp_path):
    """Test that an unreadable file is a parse error."""
    with pytest.raises(ParseError) as exc_info:
        read_surface(tmp_path / "missing.json")
    assert exc_info.value.exit_code == 2


def test_invalid_json(tmp_path):
    """Test that the decode position ends up in the witness."""
    path = tmp_path / "bad.json"
    path.write_text('{"faces": [[0, 1, 2]\n')
    with pytest.raises(ParseError) as exc_info:
        read_surface(path)
    assert exc_info.value.witness["line"] == 2


def test_schema_violation(tmp_path):
    """Test that schema errors name the offending location."""
    path = tmp_path / "graph.json"
    path.write_text(
        json.dumps(
            {
                "modulus": 7,
                "vertices": [{"color": "red", "rotation": [0, 1, 2]}],
                "arcs": [],
            }
        )
    )
    with pytest.raises(ParseError) as exc_info:
        read_current_graph(path)
    assert exc_info.value.witness["path"] == ["vertices", "0", "color"]


def test_mesh_rational_strings(tmp_path):
    """Test that mesh coordinates accept integers, fractions and decimals."""
    path = tmp_path / "mesh.json"
    path.write_text(
        json.dumps(
            {
                "vertices": [[0, "1/3", "0.25"], [1, 0, 0], [0, 1, 0]],
                "faces": [[0, 1, 2], [0, 2, 1]],
            }
        )
    )
    mesh = read_mesh_json(path)
    assert [str(c) for c in mesh.vertices[0]] == ["0", "1/3", "1/4"]


def test_mesh_rejects_bad_rational(tmp_path):
    """Test that a float coordinate is refused by the schema."""
    path = tmp_path / "mesh.json"
    path.write_text(json.dumps({"vertices": [[0.5, 0, 0]], "faces": [[0, 0, 0]]}))
    with pytest.raises(ParseError):
        read_mesh_json(path)


def test_dump_is_deterministic():
    """Test fixed indentation and the trailing newline."""
    surface = CellSurface(n_vertices=3, faces=((0, 1, 2), (0, 2, 1)))
    text = dump_json(surface_to_json(surface))
    assert text == dump_json(surface_to_json(surface))
    assert text.endswith("}\n")
    assert text.startswith('{\n  "n": 3,')
