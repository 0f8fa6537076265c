from fractions import Fraction
from itertools import product

import pytest

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
def cube_mesh():
    vertices = tuple(tuple(Fraction(c) for c in p) for p in product((0, 1), repeat=3))
    return EmbeddedMesh(vertices=vertices, faces=CUBE_FACES)
