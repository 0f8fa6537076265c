"""Phase-one simplex over Fractions with Bland's rule.

The tableau keeps one row per basic variable in the form
basic = b_i - sum_j A_ij * nonbasic_j, and reduced costs c_j of a
maximization objective; pivoting swaps a basic and a nonbasic variable.
"""

import logging
from collections.abc import Sequence
from fractions import Fraction

from .linalg import Vector

logger = logging.getLogger(__name__)


class SimplexTableau:
    def __init__(self, a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]):
        self.m = len(a)
        self.n = len(a[0]) if a else 0
        self.A = [[Fraction(x) for x in row] for row in a]
        self.b = [Fraction(x) for x in b]
        self.c = [Fraction(0)] * self.n
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        delta = self.c[j] / piv
        for col in range(self.n):
            self.c[col] -= delta * self.A[i][col]
        self.c[j] = -delta

        self.A[i] = [1 / piv if col == j else x / piv for col, x in enumerate(self.A[i])]
        self.b[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if f == 0:
                continue
            self.A[k] = [
                -f / piv if col == j else x - f * self.A[i][col]
                for col, x in enumerate(self.A[k])
            ]
            self.b[k] -= f * self.b[i]

        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_step(self) -> str:
        entering = [(self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0]
        if not entering:
            return "optimal"
        _, j = min(entering)
        leaving = [
            (self.b[i] / self.A[i][j], self.b_vars[i], i)
            for i in range(self.m)
            if self.A[i][j] > 0
        ]
        if not leaving:
            return "unbounded"
        _, _, i = min(leaving)
        self.pivot(i, j)
        return "go_on"

    def run(self) -> str:
        while True:
            status = self.bland_step()
            if status != "go_on":
                return status


def feasible_point(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector | None:
    """A point x >= 0 with a x = b, or None if the system is infeasible."""
    n = len(a[0]) if a else 0
    rows = [list(map(Fraction, row)) for row in a]
    rhs = [Fraction(x) for x in b]
    # Artificial variables need a nonnegative start.
    for i, value in enumerate(rhs):
        if value < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -value

    tableau = SimplexTableau(rows, rhs)
    # Minimizing the sum of the artificials is maximizing the column sums of x.
    tableau.c = [sum((row[j] for row in rows), Fraction(0)) for j in range(n)]
    status = tableau.run()
    logger.debug(f"phase one {status} after {tableau.pivots} pivots")

    x = [Fraction(0)] * n
    for i, var in enumerate(tableau.b_vars):
        if var >= n:
            if tableau.b[i] != 0:
                return None
        else:
            x[var] = tableau.b[i]
    return tuple(x)


def positive_dependency(vectors: Sequence[Sequence[Fraction]]) -> Vector | None:
    """Coefficients lambda_i >= 1 with sum lambda_i v_i = 0, or None.

    With lambda = 1 + mu this is the phase-one problem
    sum mu_i v_i = -sum v_i with mu >= 0.
    """
    if not vectors:
        return ()
    dim = len(vectors[0])
    if dim == 0:
        return tuple(Fraction(1) for _ in vectors)
    a = [[Fraction(v[k]) for v in vectors] for k in range(dim)]
    b = [-sum(row, Fraction(0)) for row in a]
    mu = feasible_point(a, b)
    if mu is None:
        return None
    return tuple(1 + x for x in mu)
