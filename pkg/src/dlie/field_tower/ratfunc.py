"""Rational functions in t over Q(w).

Canonical form: denominator monic and coprime to the numerator, zero stored
as 0/1.  Equality is therefore plain coordinate comparison.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import P_ONE, Poly, T, gcd
from .scalars import ConstScalar


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=P_ONE):
        num = Poly.coerce(num)
        den = Poly.coerce(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = num, P_ONE
            return
        g = gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = den.leading()
        if lc != 1:
            inv = lc.inverse()
            num = num * inv
            den = den * inv
        self.num, self.den = num, den

    @staticmethod
    def coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (Poly, ConstScalar, int, Fraction)):
            return RatFunc(Poly.coerce(x))
        raise TypeError(f"cannot interpret {x!r} as a rational function")

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc(Poly.const(c))

    @staticmethod
    def t() -> "RatFunc":
        return RatFunc(T)

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den == P_ONE

    def constant_value(self) -> ConstScalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value()

    def __add__(self, other):
        other = RatFunc.coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = RatFunc.coerce(other)
        if self.den == other.den:
            return RatFunc(self.num - other.num, self.den)
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num, out.den = -self.num, self.den
        return out

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        num1, den1, num2, den2 = self.num, self.den, other.num, other.den
        if not num1 or not num2:
            return RF_ZERO
        # cross-cancel before multiplying to keep gcd inputs small
        if den2.degree > 0 and num1.degree > 0:
            g = gcd(num1, den2)
            if g.degree > 0:
                num1 = num1.exact_div(g)
                den2 = den2.exact_div(g)
        if den1.degree > 0 and num2.degree > 0:
            g = gcd(num2, den1)
            if g.degree > 0:
                num2 = num2.exact_div(g)
                den1 = den1.exact_div(g)
        return RatFunc(num1 * num2, den1 * den2)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFunc(P_ONE)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "RatFunc":
        # quotient rule; canonicalization reduces the result
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def evaluate(self, x) -> ConstScalar:
        d = self.den.evaluate(x)
        if not d:
            raise ZeroDivisionError(f"pole at t = {x}")
        return self.num.evaluate(x) * d.inverse()

    def __eq__(self, other):
        if isinstance(other, (Poly, ConstScalar, int, Fraction)):
            other = RatFunc.coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == P_ONE:
            return str(self.num)
        num = str(self.num)
        if " " in num:
            num = f"({num})"
        den = str(self.den)
        if " " in den or "*" in den or "^" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFunc<{self}>"


RF_ZERO = RatFunc(Poly())
RF_ONE = RatFunc(P_ONE)
RF_T = RatFunc(T)
