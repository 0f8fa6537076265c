"""Exact linear algebra over the rationals.

Vectors are tuples of Fractions and matrices are sequences of row vectors.
Nothing here rounds; every predicate is decided by exact comparison with 0.
"""

from collections.abc import Iterable, Sequence
from fractions import Fraction
from math import gcd, lcm

Vector = tuple[Fraction, ...]
Matrix = Sequence[Sequence[Fraction]]


def vec(values: Iterable[int | Fraction]) -> Vector:
    return tuple(Fraction(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def scale(c: Fraction | int, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def cross(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    """Cross product in R^3."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def barycenter(points: Sequence[Sequence[Fraction]]) -> Vector:
    n = len(points)
    return tuple(sum(coords, Fraction(0)) / n for coords in zip(*points))


def rref(rows: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = [list(map(Fraction, row)) for row in rows]
    if not m:
        return m, []
    n_cols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull; -1 for no points."""
    if not points:
        return -1
    base = points[0]
    return rank([sub(p, base) for p in points[1:]])


def nullspace(rows: Matrix, n_cols: int) -> list[Vector]:
    """Basis of {x : rows . x = 0}, one vector per free column in column order."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(n_cols)) for i in range(n_cols)]
    reduced, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for r, c in enumerate(pivots):
            x[c] = -reduced[r][f]
        basis.append(tuple(x))
    return basis


def solve(a: Matrix, b: Sequence[Fraction]) -> Vector | None:
    """The unique solution of a x = b, or None if there is none or it is not unique."""
    n_cols = len(a[0])
    augmented = [list(row) + [Fraction(rhs)] for row, rhs in zip(a, b, strict=True)]
    reduced, pivots = rref(augmented)
    if n_cols in pivots or len(pivots) != n_cols:
        return None
    return tuple(reduced[i][n_cols] for i in range(n_cols))


def independent_rows(rows: Matrix) -> list[int]:
    """Indices of a maximal independent subset, picked greedily in order."""
    chosen: list[int] = []
    basis: list[Sequence[Fraction]] = []
    for i, row in enumerate(rows):
        if rank([*basis, row]) > len(basis):
            chosen.append(i)
            basis.append(row)
    return chosen


def primitive(v: Sequence[Fraction]) -> Vector:
    """Positive multiple of v with coprime integer entries."""
    denominators = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * denominators) for x in v]
    g = gcd(*ints)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    return tuple(Fraction(x // g) for x in ints)


def det(rows: Matrix) -> Fraction:
    """Determinant by exact elimination."""
    m = [list(map(Fraction, row)) for row in rows]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result
