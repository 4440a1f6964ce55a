"""Dense univariate polynomials in t over the constant field Q(w).

Coefficients are stored low-degree first as a tuple of ConstScalar with no
trailing zeros; the zero polynomial is the empty tuple and has degree -1.
Division, gcd and squarefree decomposition are exact (coefficients form a
field of characteristic zero).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, ZERO, ConstScalar


def _coeff(x) -> ConstScalar:
    if isinstance(x, ConstScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return ConstScalar(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial coefficient")


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "Poly":
        return Poly((_coeff(c),))

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return Poly.const(_coeff(x))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> ConstScalar:
        if len(self.coeffs) > 1:
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else ZERO

    def leading(self) -> ConstScalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == ONE:
            return self
        inv = lc.inverse()
        return Poly(c * inv for c in self.coeffs)

    def __add__(self, other):
        other = Poly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) + (-self)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (ConstScalar, int, Fraction)):
            c = _coeff(other)
            if not c:
                return Poly()
            return Poly(a * c for a in self.coeffs)
        other = Poly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly((ONE,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = Poly.coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lc_inv = other.coeffs[-1].inverse()
        q = [ZERO] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c * lc_inv
            q[i - d] = f
            for j, oc in enumerate(other.coeffs):
                rem[i - d + j] = rem[i - d + j] - f * oc
        return Poly(q), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ValueError("division is not exact")
        return q

    def derivative(self) -> "Poly":
        return Poly(self.coeffs[i] * i for i in range(1, len(self.coeffs)))

    def evaluate(self, x) -> ConstScalar:
        x = _coeff(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "Poly":
        # multiply by t^k
        if not self.coeffs:
            return self
        return Poly((ZERO,) * k + self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (ConstScalar, int, Fraction)):
            other = Poly.coerce(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                term = _scalar_str(c)
            else:
                tpow = "t" if i == 1 else f"t^{i}"
                if c == ONE:
                    term = tpow
                elif c == -ONE:
                    term = f"-{tpow}"
                else:
                    term = f"{_scalar_str(c)}*{tpow}"
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append(f" - {term[1:]}")
            else:
                parts.append(f" + {term}")
        return "".join(parts)

    def __repr__(self):
        return f"Poly<{self}>"


def _scalar_str(c: ConstScalar) -> str:
    s = str(c)
    # composite scalars get parenthesized so polynomial strings stay unambiguous
    if ("+" in s[1:]) or ("-" in s[1:]) or ("/" in s) or ("*" in s):
        return f"({s})"
    return s


T = Poly((ZERO, ONE))
P_ONE = Poly((ONE,))
P_ZERO = Poly()


# -- gcd via a primitive polynomial remainder sequence over Z[w] -------------
#
# Naive Euclid over Q(w) suffers exponential coefficient growth.  Instead we
# clear denominators to the Eisenstein integers Z[w] (norm-Euclidean, so
# coefficient contents are honest gcds), and run pseudo-remainders with a
# content strip per step.  Coefficients are (a, b) integer pairs for a + b*w.


def _eis_mul(x, y):
    a, b = x
    c, d = y
    bd = b * d
    return (a * c - bd, a * d + b * c - bd)


def _eis_nearest_div(p: int, n: int) -> int:
    # nearest integer to p/n for n > 0
    return (2 * p + n) // (2 * n)


def _eis_mod(x, y):
    # remainder of x by y in Z[w]; coordinate rounding gives norm ratio <= 3/4
    c, d = y
    n = c * c - c * d + d * d
    a, b = x
    pa = a * (c - d) + b * d
    pb = b * c - a * d
    qa = _eis_nearest_div(pa, n)
    qb = _eis_nearest_div(pb, n)
    qy = _eis_mul((qa, qb), y)
    return (a - qy[0], b - qy[1])


def _eis_gcd(x, y):
    while y != (0, 0):
        x, y = y, _eis_mod(x, y)
    return x


def _eis_exact_div(x, y):
    c, d = y
    n = c * c - c * d + d * d
    a, b = x
    pa = a * (c - d) + b * d
    pb = b * c - a * d
    qa, ra = divmod(pa, n)
    qb, rb = divmod(pb, n)
    if ra or rb:
        raise ValueError("inexact division in Z[w]")
    return (qa, qb)


def _to_eis(f: Poly) -> list:
    den = 1
    for c in f.coeffs:
        den = den * c.a.denominator // _int_gcd(den, c.a.denominator)
        den = den * c.b.denominator // _int_gcd(den, c.b.denominator)
    return [(int(c.a * den), int(c.b * den)) for c in f.coeffs]


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _eis_primitive(coeffs: list) -> list:
    while coeffs and coeffs[-1] == (0, 0):
        coeffs.pop()
    if not coeffs:
        return coeffs
    g = (0, 0)
    for c in coeffs:
        g = _eis_gcd(g, c)
        if g[0] * g[0] - g[0] * g[1] + g[1] * g[1] == 1:
            return coeffs
    return [_eis_exact_div(c, g) for c in coeffs]


def _eis_prem(f: list, g: list) -> list:
    # pseudo-remainder: repeatedly f <- lc(g)*f - lc(f)*x^k*g, staying in Z[w]
    lc = g[-1]
    dg = len(g) - 1
    f = list(f)
    while len(f) - 1 >= dg and f:
        cf = f[-1]
        k = len(f) - 1 - dg
        new = [_eis_mul(lc, c) for c in f[:-1]]
        for i, c in enumerate(g[:-1]):
            m = _eis_mul(cf, c)
            new[k + i] = (new[k + i][0] - m[0], new[k + i][1] - m[1])
        while new and new[-1] == (0, 0):
            new.pop()
        f = new
    return f


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    if not a:
        return b.monic() if b else b
    if not b:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return P_ONE
    fa = _eis_primitive(_to_eis(a))
    fb = _eis_primitive(_to_eis(b))
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while len(fb) > 1:
        r = _eis_primitive(_eis_prem(fa, fb))
        fa, fb = fb, r
    if fb:  # nonzero constant remainder: coprime
        return P_ONE
    return Poly(ConstScalar(x, y) for x, y in fa).monic()


def lcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return P_ZERO
    return (a * b).exact_div(gcd(a, b)).monic()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: f = lc * prod g_i^i with the g_i monic, squarefree,
    pairwise coprime and nonconstant.  Requires f nonzero."""
    if not f:
        raise ValueError("squarefree decomposition of zero")
    f = f.monic()
    out: list[tuple[Poly, int]] = []
    if f.degree == 0:
        return out
    df = f.derivative()
    a = gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        g = gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        i += 1
    return out


def nth_root_monic(f: Poly, n: int) -> Poly | None:
    """Exact n-th root of a monic polynomial, or None if there is none."""
    if not f:
        return f
    if f.degree == 0:
        return P_ONE
    if f.degree % n:
        return None
    root = P_ONE
    total = 0
    for g, mult in squarefree_decomposition(f):
        if mult % n:
            return None
        root = root * g ** (mult // n)
        total += g.degree * mult
    if total != f.degree:  # defensive; cannot happen for monic input
        return None
    return root
