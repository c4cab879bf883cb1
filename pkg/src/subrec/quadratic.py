"""Exact arithmetic in real quadratic fields.

Values are a + b*sqrt(d) with rational a, b and a fixed nonsquare radicand d.
Everything here is exact: comparisons, floor, mod 1. Floats appear only as
first guesses that are then corrected by integer arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = (int, Fraction)


def _reduce_radicand(c: Fraction, d: int) -> tuple[Fraction, int]:
    """Pull square factors of d into the coefficient: c*sqrt(d) canonical.

    A perfect-square radicand comes back as d == 1; the caller folds it
    into the rational part.
    """
    if d < 0:
        raise ValueError("radicand must be nonnegative")
    if c == 0 or d == 0:
        return Fraction(0), 0
    f = 1
    k = 2
    while k * k <= d:
        while d % (k * k) == 0:
            d //= k * k
            f *= k
        k += 1
    return c * f, d


class QuadraticReal:
    """Immutable exact number a + b*sqrt(d)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        a = Fraction(a)
        b, d = _reduce_radicand(Fraction(b), int(d))
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *args):
        raise AttributeError("QuadraticReal is immutable")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _coerce(self, other) -> "QuadraticReal | None":
        if isinstance(other, QuadraticReal):
            if self.b != 0 and other.b != 0 and self.d != other.d:
                raise ValueError("mixed radicands %d and %d" % (self.d, other.d))
            return other
        if isinstance(other, Rational):
            return QuadraticReal(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticReal(self.a + o.a, self.b + o.b, self.d or o.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticReal(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.d or o.d
        return QuadraticReal(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.d or o.d
        # multiply by the conjugate; the norm is nonzero for nonzero divisors
        norm = o.a * o.a - o.b * o.b * d
        if norm == 0:
            raise ZeroDivisionError("division by zero quadratic value")
        conj = QuadraticReal(o.a, -o.b, d)
        num = self * conj
        return QuadraticReal(num.a / norm, num.b / norm, d)

    def __rtruediv__(self, other):
        return QuadraticReal(other) / self

    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d (sqrt(d) irrational, no tie)
        if a > 0:
            return 1 if a * a > b * b * d else -1
        return 1 if b * b * d > a * a else -1

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __floor__(self) -> int:
        if self.b == 0:
            return math.floor(self.a)
        try:
            est = math.floor(float(self))
        except (OverflowError, ValueError):
            est = 0
        # exact adjustment; float estimate is off by at most a step or two
        while self._cmp(est) < 0:
            est -= 1
        while self._cmp(est + 1) >= 0:
            est += 1
        return est

    def floor(self) -> int:
        return self.__floor__()

    def mod1(self) -> "QuadraticReal":
        return self - self.__floor__()

    def __repr__(self):
        if self.b == 0:
            return "QuadraticReal(%s)" % (self.a,)
        return "QuadraticReal(%s + %s*sqrt(%d))" % (self.a, self.b, self.d)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return "%s + %s*sqrt(%d) (~%.12g)" % (self.a, self.b, self.d, float(self))


ZERO = QuadraticReal(0)
ONE = QuadraticReal(1)
