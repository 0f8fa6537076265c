"""Tests for OFF/OBJ export and the exact sidecar."""

from fractions import Fraction
from itertools import product

import pytest

from highgenus.errors import ParseError
from highgenus.io import (
    format_decimal,
    read_mesh,
    read_obj,
    read_off,
    sidecar_path,
    write_obj,
    write_off,
)
from highgenus.models import EmbeddedMesh

CUBE_FACES = (
    (0, 1, 3, 2),
    (4, 6, 7, 5),
    (0, 4, 5, 1),
    (2, 3, 7, 6),
    (0, 2, 6, 4),
    (1, 5, 7, 3),
)


@pytest.fixture
def third_cube():
    """Cube with side 1/3, so decimals are lossy."""
    vertices = tuple(
        tuple(Fraction(c, 3) for c in p) for p in product((0, 1), repeat=3)
    )
    return EmbeddedMesh(vertices=vertices, faces=CUBE_FACES, metadata={"m": "3"})


@pytest.mark.parametrize(
    "value, decimals, expected",
    [
        (Fraction(1, 3), 4, "0.3333"),
        (Fraction(2, 3), 4, "0.6667"),
        (Fraction(1, 8), 2, "0.12"),
        (Fraction(3, 8), 2, "0.38"),
        (Fraction(-1, 8), 2, "-0.12"),
        (Fraction(-1, 300), 2, "0.00"),
        (Fraction(7), 2, "7.00"),
        (Fraction(-41, 4), 1, "-10.2"),
    ],
)
def test_format_decimal(value, decimals, expected):
    """Test exact half-even rounding."""
    assert format_decimal(value, decimals) == expected


def test_sidecar_path(tmp_path):
    """Test that the sidecar appends .json to the full name."""
    assert sidecar_path(tmp_path / "q5.off") == tmp_path / "q5.off.json"


def test_off_layout(tmp_path, third_cube):
    """Test the header, counts, coordinates and face lines of an OFF file."""
    path = write_off(tmp_path / "cube.off", third_cube, decimals=3)
    lines = path.read_text().splitlines()
    assert lines[0] == "OFF"
    assert lines[1:3] == ["# highgenus mesh", "# m = 3"]
    assert lines[3] == "8 6 0"
    assert lines[4] == "0.000 0.000 0.000"
    assert lines[11] == "0.333 0.333 0.333"
    assert lines[12] == "4 0 1 3 2"
    assert sidecar_path(path).exists()


def test_obj_layout(tmp_path, third_cube):
    """Test that OBJ faces are 1-based."""
    path = write_obj(tmp_path / "cube.obj", third_cube, decimals=2)
    lines = path.read_text().splitlines()
    assert "v 0.33 0.33 0.33" in lines
    assert "f 1 2 4 3" in lines


def test_sidecar_preferred(tmp_path, third_cube):
    """Test that reading OFF or OBJ returns the exact mesh when the sidecar exists."""
    assert read_mesh(write_off(tmp_path / "cube.off", third_cube, 3)) == third_cube
    assert read_mesh(write_obj(tmp_path / "cube.obj", third_cube, 3)) == third_cube


def test_without_sidecar_reads_decimals(tmp_path, third_cube):
    """Test the lossy fallback when the sidecar is gone."""
    path = write_off(tmp_path / "cube.off", third_cube, 3)
    sidecar_path(path).unlink()
    mesh = read_mesh(path)
    assert mesh.faces == CUBE_FACES
    assert mesh.vertices[7] == (Fraction(333, 1000),) * 3
    assert mesh.provenance is None


def test_read_obj_with_texture_indices(tmp_path):
    """Test that v/vt/vn face entries keep only the vertex index."""
    path = tmp_path / "tri.obj"
    path.write_text("v 0 0 0\nv 1 0 0\nv 0 1 0\nvt 0 0\nf 1/1/1 2/1/1 3/1/1\n")
    mesh = read_obj(path)
    assert mesh.faces == ((0, 1, 2),)
    assert mesh.vertices[1] == (Fraction(1), Fraction(0), Fraction(0))


@pytest.mark.parametrize(
    "text",
    [
        "PLY\n3 1 0\n",
        "OFF\n3 1 0\n0 0 0\n1 0 0\n",
        "OFF\n1 0 0\n0 0\n",
        "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n4 0 1 2\n",
        "OFF\n3 1 0\n0 0 x\n1 0 0\n0 1 0\n3 0 1 2\n",
    ],
)
def test_malformed_off(tmp_path, text):
    """Test that malformed OFF files are parse errors."""
    path = tmp_path / "bad.off"
    path.write_text(text)
    with pytest.raises(ParseError):
        read_off(path)


def test_unknown_suffix(tmp_path):
    """Test that only JSON, OFF and OBJ are accepted."""
    with pytest.raises(ParseError):
        read_mesh(tmp_path / "mesh.stl")
