"""The deformed m-cube, its vertices, and certificates for faces that survive
projection to the last four coordinates.

Pair k (0-based) of the 2m inequalities bounds coordinate k:

    +-eps x_k + 2 x_(k-1) - 7 x_(k-2) + 7 x_(k-3) - 2 x_(k-4) <= b_k

with b_k = (6/eps)^k. Row 2k carries +eps, row 2k+1 carries -eps. A cube
face code entry 1 makes the +eps row tight and 0 the -eps row.
"""

import logging
from fractions import Fraction
from itertools import product

from ..errors import (
    DomainError,
    EpsilonOutOfRange,
    InternalAssertion,
    NotPreserved,
)
from ..models import DeformedCube, PreservationCertificate, SignedVertex, Verdict
from .linalg import Vector, dot, independent_rows, rank
from .simplex import positive_dependency

logger = logging.getLogger(__name__)

TAIL = (2, -7, 7, -2)
"""Coefficients of x_(k-1) .. x_(k-4) in pair k."""

DEFAULT_EPSILON = Fraction(1, 4)


def build_deformed_cube(
    m: int, epsilon: Fraction | int | str, *, check_range: bool = True
) -> DeformedCube:
    """Build the 2m rows and right-hand sides of the deformed cube.

    Args:
        m: Dimension, at least 4
        epsilon: Deformation parameter, 0 < epsilon < 1/2
        check_range: Reject epsilon outside (0, 1/2); turned off only to
            study what goes wrong for large epsilon

    Raises:
        DomainError: m < 4
        EpsilonOutOfRange: epsilon outside (0, 1/2) while check_range is set
    """
    eps = Fraction(epsilon)
    if m < 4:
        raise DomainError(f"the deformed cube needs m >= 4, got {m}", {"m": m})
    if eps <= 0 or (check_range and eps >= Fraction(1, 2)):
        raise EpsilonOutOfRange(
            f"epsilon = {eps} is outside (0, 1/2)", {"epsilon": str(eps)}
        )

    rows: list[tuple[Fraction, ...]] = []
    for k in range(m):
        for sign in (1, -1):
            row = [Fraction(0)] * m
            row[k] = sign * eps
            for back, coefficient in enumerate(TAIL, start=1):
                if k - back >= 0:
                    row[k - back] = Fraction(coefficient)
            rows.append(tuple(row))
    rhs = tuple((6 / eps) ** k for k in range(m))
    return DeformedCube(m=m, epsilon=eps, rows=tuple(rows), rhs=rhs)


def _in_range(cube: DeformedCube) -> bool:
    return 0 < cube.epsilon < Fraction(1, 2)


def _slack(cube: DeformedCube, x: list[Fraction], k: int) -> Fraction:
    """b_k - 2 x_(k-1) + 7 x_(k-2) - 7 x_(k-3) + 2 x_(k-4)."""
    value = cube.rhs[k]
    for back, coefficient in enumerate(TAIL, start=1):
        if k - back >= 0:
            value -= coefficient * x[k - back]
    return value


def _forward(cube: DeformedCube, signs: tuple[int, ...]) -> Vector:
    x: list[Fraction] = []
    for k, sign in enumerate(signs):
        x.append(sign * _slack(cube, x, k) / cube.epsilon)
    return tuple(x)


def _all_signs(m: int) -> list[tuple[int, ...]]:
    """Sign vectors in vertex-id order: entry 0 is the most significant bit, 1 is +1."""
    return [tuple(1 if bit else -1 for bit in bits) for bits in product((0, 1), repeat=m)]


def induction_bound(cube: DeformedCube, k: int) -> Fraction:
    """(1/3)(6/eps)^(k+1) for 0-based coordinate k."""
    return (6 / cube.epsilon) ** (k + 1) / 3


def cube_vertex(cube: DeformedCube, signs: tuple[int, ...]) -> SignedVertex:
    """Forward substitution: x_k = sign_k (1/eps) (b_k - 2 x_(k-1) + ... ).

    Raises:
        InternalAssertion: the induction bound fails although 0 < eps < 1/2
    """
    if len(signs) != cube.m or any(s not in (1, -1) for s in signs):
        raise DomainError(f"expected {cube.m} signs in {{+1, -1}}, got {signs}")
    x = _forward(cube, signs)
    if _in_range(cube):
        for k, value in enumerate(x):
            if abs(value) >= induction_bound(cube, k):
                raise InternalAssertion(
                    f"|x_{k + 1}| = {abs(value)} breaks the induction bound",
                    {"signs": list(signs), "coordinate": k + 1},
                )
    return SignedVertex(signs=signs, coords=x)


def cube_vertices(cube: DeformedCube) -> list[SignedVertex]:
    """All 2^m vertices, ordered by vertex id (code read in binary, entry 0 first)."""
    return [cube_vertex(cube, signs) for signs in _all_signs(cube.m)]


def tight_rows(cube: DeformedCube, x: Vector) -> list[int]:
    return [r for r, row in enumerate(cube.rows) if dot(row, x) == cube.rhs[r // 2]]


def verify_cube_combinatorics(cube: DeformedCube) -> Verdict:
    """Check that the 2^m sign vertices are distinct, feasible and tight exactly where chosen."""
    seen: dict[Vector, tuple[int, ...]] = {}
    tight_count = [0] * (2 * cube.m)
    for signs in _all_signs(cube.m):
        point = _forward(cube, signs)

        for r, row in enumerate(cube.rows):
            lhs = dot(row, point)
            rhs = cube.rhs[r // 2]
            if lhs > rhs:
                logger.warning(f"vertex {signs} violates row {r}")
                return Verdict(
                    ok=False,
                    witness={"signs": list(signs), "row": r, "excess": str(lhs - rhs)},
                    reason=f"vertex {signs} violates row {r}",
                )
        chosen = [2 * k + (0 if s == 1 else 1) for k, s in enumerate(signs)]
        tight = tight_rows(cube, point)
        if tight != chosen:
            return Verdict(
                ok=False,
                witness={"signs": list(signs), "tight": tight, "expected": chosen},
                reason=f"vertex {signs} is tight on {tight}",
            )
        if point in seen:
            return Verdict(
                ok=False,
                witness={"signs": list(signs), "duplicate_of": list(seen[point])},
                reason="two sign vectors give the same point",
            )
        seen[point] = signs
        for r in tight:
            tight_count[r] += 1

    if any(count != 2 ** (cube.m - 1) for count in tight_count):
        return Verdict(
            ok=False,
            witness={"tight_counts": tight_count},
            reason="some row is not a facet with 2^(m-1) vertices",
        )
    logger.debug(f"deformed {cube.m}-cube with eps={cube.epsilon} is a combinatorial cube")
    return Verdict(ok=True)


def check_induction_bound(cube: DeformedCube) -> Verdict:
    """|x_k| < (1/3)(6/eps)^k at every vertex (1-based k)."""
    for signs in _all_signs(cube.m):
        for k, value in enumerate(_forward(cube, signs)):
            if abs(value) >= induction_bound(cube, k):
                return Verdict(
                    ok=False,
                    witness={"signs": list(signs), "coordinate": k + 1},
                    reason=f"|x_{k + 1}| reaches the induction bound",
                )
    return Verdict(ok=True)


def limit_matrix(m: int) -> list[list[Fraction]]:
    """The m x (m-4) matrix of the rows at eps = 0 with the last four columns dropped."""
    width = m - 4
    matrix = [[Fraction(0)] * width for _ in range(m)]
    for i in range(m):
        for back, coefficient in enumerate(TAIL, start=1):
            j = i - back
            if 0 <= j < width:
                matrix[i][j] = Fraction(coefficient)
    return matrix


def kernel_vectors(m: int) -> list[Vector]:
    """(1,0,..,0), (1,..,1), (1,2,4,..) and (1,1/2,1/4,..)."""
    return [
        tuple(Fraction(int(i == 0)) for i in range(m)),
        tuple(Fraction(1) for _ in range(m)),
        tuple(Fraction(2) ** i for i in range(m)),
        tuple(Fraction(1, 2**i) for i in range(m)),
    ]


def _is_row_dependency(matrix: list[list[Fraction]], y: Vector) -> bool:
    width = len(matrix[0]) if matrix else 0
    return all(
        sum((y[i] * matrix[i][j] for i in range(len(matrix))), Fraction(0)) == 0
        for j in range(width)
    )


def kernel_check_Am(m: int) -> bool:
    """Check that the four kernel vectors are row dependencies of the limit matrix."""
    if m < 5:
        raise DomainError(f"the limit matrix needs m >= 5, got {m}", {"m": m})
    matrix = limit_matrix(m)
    return all(_is_row_dependency(matrix, y) for y in kernel_vectors(m))


def closed_form_dependency(m: int, t: int) -> Vector:
    """y_i = (2^(i-t) - 1)(1 - 2^(t+1-i)) for i = 1 .. m.

    Vanishes at i = t and i = t + 1 and is positive elsewhere.
    """
    two = Fraction(2)
    return tuple((two ** (i - t) - 1) * (1 - two ** (t + 1 - i)) for i in range(1, m + 1))


def check_closed_form_dependency(m: int, t: int) -> Verdict:
    y = closed_form_dependency(m, t)
    if not _is_row_dependency(limit_matrix(m), y):
        return Verdict(ok=False, witness={"t": t}, reason="not a row dependency")
    for i, value in enumerate(y, start=1):
        if (value == 0) != (i in (t, t + 1)) or value < 0:
            return Verdict(
                ok=False,
                witness={"t": t, "i": i, "value": str(value)},
                reason=f"unexpected sign at row {i}",
            )
    return Verdict(ok=True)


def dependency_oracle(m: int, t: int, drop_first: bool = False) -> Verdict:
    """Positive dependency and spanning of the limit rows without rows t, t+1 (1-based, cyclic).

    The witness carries the LP coefficients on success.
    """
    matrix = limit_matrix(m)
    dropped = {(t - 1) % m, t % m}
    if drop_first:
        dropped.add(0)
    kept = [i for i in range(m) if i not in dropped]
    vectors = [matrix[i] for i in kept]
    lambdas = positive_dependency(vectors)
    if lambdas is None:
        return Verdict(ok=False, witness={"t": t, "rows": [i + 1 for i in kept]})
    if rank(vectors) != m - 4:
        return Verdict(ok=False, witness={"t": t, "rank": rank(vectors)})
    return Verdict(
        ok=True,
        witness={"rows": [i + 1 for i in kept], "lambdas": [str(x) for x in lambdas]},
    )


def face_tight_rows(code: str) -> tuple[int, ...]:
    """Rows made tight by the 0/1 entries of a cube face code."""
    return tuple(2 * k + (0 if c == "1" else 1) for k, c in enumerate(code) if c != "*")


def preservation_certificate(cube: DeformedCube, face: str) -> PreservationCertificate:
    """Certify that a cube face survives projection to the last four coordinates.

    The restricted normals (first m-4 entries of the tight rows) must be
    positively dependent and span R^(m-4).

    Raises:
        DomainError: the code has the wrong length or is the whole cube
        NotPreserved: no positive dependency exists or the span is too small
    """
    m = cube.m
    if len(face) != m or any(c not in "01*" for c in face):
        raise DomainError(f"{face!r} is not a face code of the {m}-cube")
    tight = face_tight_rows(face)
    if not tight:
        raise DomainError("the whole cube is not a proper face", {"face": face})

    width = m - 4
    if width == 0:
        return PreservationCertificate(
            face=face,
            tight_rows=tight,
            lambdas=tuple(Fraction(1) for _ in tight),
            rank_witness=(),
        )

    restricted = [cube.rows[r][:width] for r in tight]
    lambdas = positive_dependency(restricted)
    if lambdas is None:
        raise NotPreserved(
            f"restricted normals of {face} are not positively dependent",
            {"face": face, "tight_rows": list(tight)},
        )
    basis = independent_rows(restricted)
    if len(basis) != width:
        raise NotPreserved(
            f"restricted normals of {face} span only dimension {len(basis)}",
            {"face": face, "rank": len(basis)},
        )
    logger.debug(f"face {face}: lambdas {[str(x) for x in lambdas]}")
    return PreservationCertificate(
        face=face,
        tight_rows=tight,
        lambdas=lambdas,
        rank_witness=tuple(tight[i] for i in basis),
    )


def project_to_R4(v: SignedVertex) -> Vector:
    """The last four coordinates."""
    return tuple(v.coords[-4:])
