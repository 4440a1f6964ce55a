"""Exact arithmetic in the constant field Q(w), w a primitive cube root of unity.

Elements are stored as a + b*w with rational a, b, reduced by w^2 = -1 - w.
The field contains a square root of -3, namely 1 + 2w.  All operations are
exact; instances are immutable.
"""

from __future__ import annotations

from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class ConstScalar:
    """An element a + b*w of Q(w), with a, b kept in lowest terms by Fraction."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _frac(a)
        self.b = _frac(b)

    @staticmethod
    def coerce(x) -> "ConstScalar":
        if isinstance(x, ConstScalar):
            return x
        return ConstScalar(_frac(x))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def as_rational(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} has a nonzero w-part")
        return self.a

    def conj(self) -> "ConstScalar":
        # the nontrivial automorphism of Q(w)/Q: w -> w^2 = -1 - w
        return ConstScalar(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        # (a + b*w)(a + b*w^2) = a^2 - a*b + b^2
        return self.a * self.a - self.a * self.b + self.b * self.b

    def __add__(self, other):
        other = ConstScalar.coerce(other)
        return ConstScalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = ConstScalar.coerce(other)
        return ConstScalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return ConstScalar.coerce(other) - self

    def __neg__(self):
        return ConstScalar(-self.a, -self.b)

    def __mul__(self, other):
        other = ConstScalar.coerce(other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        bb = b1 * b2
        return ConstScalar(a1 * a2 - bb, a1 * b2 + b1 * a2 - bb)

    __rmul__ = __mul__

    def inverse(self) -> "ConstScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return ConstScalar((self.a - self.b) / n, -self.b / n)

    def __truediv__(self, other):
        return self * ConstScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return ConstScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, ConstScalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.b == 1:
            w = "w"
        elif self.b == -1:
            w = "-w"
        else:
            w = f"{self.b}*w"
        if self.a == 0:
            return w
        return f"{self.a}+{w}" if not w.startswith("-") else f"{self.a}{w}"

    def __repr__(self):
        return f"ConstScalar({self.a!r}, {self.b!r})"


ZERO = ConstScalar(0)
ONE = ConstScalar(1)
OMEGA = ConstScalar(0, 1)
SQRT_MINUS_3 = ConstScalar(1, 2)
