"""Finite fields of order q = 4g + 1 with canonical integer elements.

An element of F_q with q = p^k is stored as the integer c0 + c1 p + ... +
c(k-1) p^(k-1), where c0 + c1 x + ... is its residue modulo a tabulated
irreducible polynomial. For prime q this is the usual residue 0 .. q-1.
"""

import logging
from functools import cached_property

from sympy import Poly, factorint, primefactors, symbols

from ..errors import DomainError, InternalAssertion, NotFourGPlusOne, UnsupportedPrimePower
from ..models import FieldDescription

logger = logging.getLogger(__name__)

# Coefficients c0, c1, ..., 1 of the monic modulus, lowest degree first.
IRREDUCIBLE_POLYNOMIALS: dict[int, tuple[int, ...]] = {
    9: (2, 2, 1),
    25: (2, 4, 1),
    49: (3, 6, 1),
    81: (2, 0, 0, 2, 1),
    121: (2, 7, 1),
    125: (3, 3, 0, 1),
}


class FiniteField:
    """The field F_q with a fixed multiplicative generator alpha."""

    def __init__(self, q: int, generator: int | None = None):
        if q < 5 or q % 4 != 1:
            raise NotFourGPlusOne(
                f"q = {q} is not of the form 4g+1 with g >= 1", {"q": q}
            )
        factors = factorint(q)
        if len(factors) != 1:
            raise UnsupportedPrimePower(f"q = {q} is not a prime power", {"q": q})
        ((p, k),) = factors.items()
        if k > 1 and q not in IRREDUCIBLE_POLYNOMIALS:
            raise UnsupportedPrimePower(
                f"no irreducible polynomial is tabulated for q = {q}", {"q": q}
            )

        self.q = q
        self.p = int(p)
        self.k = int(k)
        self.modulus = IRREDUCIBLE_POLYNOMIALS.get(q)
        if self.modulus is not None:
            x = symbols("x")
            poly = Poly(list(reversed(self.modulus)), x, modulus=self.p)
            if not poly.is_irreducible:
                raise InternalAssertion(f"tabulated modulus for q = {q} is reducible")

        self.alpha = self._find_generator() if generator is None else generator
        if self.order(self.alpha) != q - 1:
            raise DomainError(
                f"{self.alpha} does not generate F_{q}^*", {"generator": self.alpha}
            )
        if self.power(self.alpha, (q - 1) // 2) != self.neg(1):
            raise InternalAssertion(f"alpha^(2g) != -1 in F_{q}")
        logger.debug(f"F_{q}: p={self.p}, k={self.k}, alpha={self.alpha}")

    def __repr__(self) -> str:
        return f"FiniteField(q={self.q}, alpha={self.alpha})"

    @property
    def g(self) -> int:
        return (self.q - 1) // 4

    def describe(self) -> FieldDescription:
        return FieldDescription(q=self.q, alpha=self.alpha)

    def _digits(self, a: int) -> list[int]:
        digits = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            digits.append(r)
        return digits

    def _number(self, digits: list[int]) -> int:
        value = 0
        for d in reversed(digits):
            value = value * self.p + d % self.p
        return value

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.q
        return self._number([x + y for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.q
        return self._number([-x for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.q
        x, y = self._digits(a), self._digits(b)
        product = [0] * (2 * self.k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    product[i + j] += xi * yj
        assert self.modulus is not None
        # x^k = -(c0 + c1 x + ... + c(k-1) x^(k-1))
        for top in range(len(product) - 1, self.k - 1, -1):
            c = product[top] % self.p
            if c:
                for i in range(self.k):
                    product[top - self.k + i] -= c * self.modulus[i]
            product[top] = 0
        return self._number(product[: self.k])

    def power(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def order(self, a: int) -> int:
        if a == 0:
            return 0
        n = self.q - 1
        for r in primefactors(n):
            while n % r == 0 and self.power(a, n // r) == 1:
                n //= r
        return n

    def _find_generator(self) -> int:
        for a in range(1, self.q):
            if self.order(a) == self.q - 1:
                return a
        raise InternalAssertion(f"F_{self.q}^* has no generator")

    @cached_property
    def powers(self) -> tuple[int, ...]:
        """alpha^0, alpha^1, ..., alpha^(q-2)."""
        result = [1]
        for _ in range(self.q - 2):
            result.append(self.mul(result[-1], self.alpha))
        return tuple(result)

    @cached_property
    def _logs(self) -> dict[int, int]:
        return {a: e for e, a in enumerate(self.powers)}

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.powers[-self._logs[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def generators(self) -> list[int]:
        """All multiplicative generators in canonical order."""
        return [a for a in range(1, self.q) if self.order(a) == self.q - 1]


def make_field(q: int, generator: int | None = None) -> FiniteField:
    """Build F_q for q = 4g+1 with the smallest generator unless one is given.

    Raises:
        NotFourGPlusOne: q is not 1 mod 4 or is smaller than 5
        UnsupportedPrimePower: q is neither prime nor a tabulated prime power
    """
    return FiniteField(q, generator)
