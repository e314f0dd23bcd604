"""Exact arithmetic in the quadratic field Q(sqrt 5).

The 600-cell and the icosahedral solids have coordinates of the form
a + b*sqrt(5).  Keeping a and b as exact integers (or Fractions) makes
distance comparisons and orientation tests exact, so edge detection and
congruence checks need no floating tolerances.
"""

from __future__ import annotations

import math
from fractions import Fraction

_SQRT5 = math.sqrt(5.0)


class QSqrt5:
    """Number a + b*sqrt(5) with exact rational components.

    Supports ring arithmetic, exact sign tests and total ordering.
    Components are ints whenever possible; Fractions are accepted.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a
        self.b = b

    @staticmethod
    def of(x) -> "QSqrt5":
        if isinstance(x, QSqrt5):
            return x
        return QSqrt5(x, 0)

    def __add__(self, other):
        other = QSqrt5.of(other)
        return QSqrt5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = QSqrt5.of(other)
        return QSqrt5(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return QSqrt5.of(other) - self

    def __mul__(self, other):
        other = QSqrt5.of(other)
        return QSqrt5(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QSqrt5.of(other)
        n = other.a * other.a - 5 * other.b * other.b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        num = self * QSqrt5(other.a, -other.b)
        qa = Fraction(num.a, n)
        qb = Fraction(num.b, n)
        # keep integer components integral: plain ints are much faster
        return QSqrt5(
            int(qa) if qa.denominator == 1 else qa,
            int(qb) if qb.denominator == 1 else qb,
        )

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(5)."""
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 5 b^2
        d = a * a - 5 * b * b
        if a > 0:  # b < 0
            return 1 if d > 0 else (-1 if d < 0 else 0)
        return -1 if d > 0 else (1 if d < 0 else 0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.a == other and self.b == 0
        if isinstance(other, QSqrt5):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self - QSqrt5.of(other)).sign() < 0

    def __le__(self, other):
        return (self - QSqrt5.of(other)).sign() <= 0

    def __gt__(self, other):
        return (self - QSqrt5.of(other)).sign() > 0

    def __ge__(self, other):
        return (self - QSqrt5.of(other)).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * _SQRT5

    def __repr__(self):
        return f"QSqrt5({self.a!r}, {self.b!r})"


#: golden ratio phi = (1 + sqrt5)/2 and its inverse, as exact field elements
PHI = QSqrt5(Fraction(1, 2), Fraction(1, 2))
INV_PHI = QSqrt5(Fraction(-1, 2), Fraction(1, 2))
