from enum import StrEnum
from fractions import Fraction
from typing import Annotated, Any

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PlainSerializer,
    PlainValidator,
)


def parse_rational(value: Any) -> Fraction:
    """Parse an exact rational from a Fraction, an int or a string like "3/4" or "0.25"."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not an exact rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not an exact rational: {value!r}") from e
    raise ValueError(f"not an exact rational: {value!r}")


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(str, return_type=str),
]
"""An exact rational, serialized as "p/q" (or "p" when integral)."""

RationalVector = tuple[Rational, ...]


class HighGenusModel(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class Verdict(HighGenusModel):
    """Outcome of a yes/no check, with a witness on failure."""

    ok: bool
    witness: dict[str, Any] | None = None
    """Where the check failed, e.g. the offending faces or vertices."""
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


# Surfaces


class CellSurface(HighGenusModel):
    n_vertices: int = Field(ge=1)
    faces: tuple[tuple[int, ...], ...]
    """Boundary walks of the 2-cells; edges and links are derived from these."""
    labels: tuple[str, ...] | None = None
    """Optional vertex names, e.g. cube codes or field elements."""


class FVector(HighGenusModel):
    f0: int = Field(ge=0)
    f1: int = Field(ge=0)
    f2: int = Field(ge=0)

    @property
    def euler_characteristic(self) -> int:
        return self.f0 - self.f1 + self.f2


class SurfaceReport(HighGenusModel):
    f_vector: FVector
    euler_characteristic: int
    genus: int | None
    """None for non-orientable input."""
    orientable: bool
    simplicial: bool
    neighborly: bool
    intersection_condition: bool
    genus_bound_ok: bool | None = None
    """Whether g <= (n-3)(n-4)/12 holds; None when the intersection condition fails."""


class GenusBound(HighGenusModel):
    n: int
    genus: int
    requires_neighborly: bool
    """True when attaining the bound forces a neighborly triangulation."""


# Rotation schemes and current graphs


class RotationScheme(HighGenusModel):
    n: int = Field(ge=1)
    rows: tuple[tuple[int, ...], ...]


class Color(StrEnum):
    """Vertex colors of a current graph.

    Attributes:
        BLACK: the walk turns to the next arc-end of the rotation
        WHITE: the walk turns to the previous arc-end of the rotation
    """

    BLACK = "black"
    WHITE = "white"


class CurrentVertex(HighGenusModel):
    color: Color
    rotation: tuple[int, ...]
    """Arc-end ids in cyclic order."""


class CurrentArc(HighGenusModel):
    tail: int
    head: int
    current: int


class CurrentGraph(HighGenusModel):
    modulus: int = Field(ge=3)
    vertices: tuple[CurrentVertex, ...]
    arcs: tuple[CurrentArc, ...]


class TraversalLog(HighGenusModel):
    labels: tuple[int, ...]
    """Signed currents: positive when an arc is walked along its direction."""
    closed: bool


# Finite fields and the mirror surface


class FieldDescription(HighGenusModel):
    q: int
    alpha: int
    """Canonical index of the chosen multiplicative generator."""


class QmComplex(HighGenusModel):
    m: int = Field(ge=3)
    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    quads: tuple[str, ...]


# Exact geometry


class DeformedCube(HighGenusModel):
    m: int = Field(ge=1)
    epsilon: Rational
    rows: tuple[RationalVector, ...]
    """2m rows; row 2k is the +epsilon member of pair k, row 2k+1 the -epsilon member."""
    rhs: RationalVector
    """One right-hand side per pair, b_k = (6/epsilon)^(k-1)."""


class SignedVertex(HighGenusModel):
    signs: tuple[int, ...]
    """+1 or -1 per coordinate; +1 makes the +epsilon row of that pair tight."""
    coords: RationalVector


class PreservationCertificate(HighGenusModel):
    face: str
    tight_rows: tuple[int, ...]
    lambdas: RationalVector
    """Coefficients >= 1 of a vanishing combination of the restricted normals."""
    rank_witness: tuple[int, ...]
    """Tight rows whose restricted normals form a basis of R^(m-4)."""


class Facet(HighGenusModel):
    normal: RationalVector
    offset: Rational
    vertices: tuple[int, ...]


class Polytope4(HighGenusModel):
    points: tuple[RationalVector, ...]
    facets: tuple[Facet, ...]
    """Sorted by vertex list, so facet 0 has the lexicographically smallest one."""


class PolytopeSummary(HighGenusModel):
    n_vertices: int
    n_facets: int
    cubical: bool
    """Every facet is a combinatorial 3-cube."""
    quads_are_faces: bool
    edges_are_edges: bool


class SchlegelScene(HighGenusModel):
    base_facet: int
    viewpoint: RationalVector
    origin: int
    """Vertex id at the origin of the affine frame of the base facet."""
    frame: tuple[int, int, int]
    """Vertex ids whose differences with the origin span the base facet."""
    mapped: tuple[RationalVector, ...]


class EmbeddedMesh(HighGenusModel):
    vertices: tuple[RationalVector, ...]
    faces: tuple[tuple[int, ...], ...]
    provenance: tuple[str, ...] | None = None
    """Cube face code of the quad each face comes from."""
    metadata: dict[str, str] = Field(default_factory=dict)


class EmbeddingCertificate(HighGenusModel):
    planar_ok: bool
    convex_ok: bool
    pairwise_ok: bool
    combinatorics_ok: bool = True
    genus_from_mesh: int | None
    failures: tuple[dict[str, Any], ...] = ()
    """Pairwise intersection witnesses."""
    defects: tuple[dict[str, Any], ...] = ()
    """Planarity, convexity and combinatorics witnesses."""

    @property
    def ok(self) -> bool:
        return (
            self.planar_ok
            and self.convex_ok
            and self.pairwise_ok
            and self.combinatorics_ok
            and self.genus_from_mesh is not None
        )
