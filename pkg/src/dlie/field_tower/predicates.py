"""Square/cube predicates for rational functions and small number-field helpers.

The square and cube tests are geometric, i.e. taken over the algebraically
closed constant field: a nonzero f is a square (cube) there iff every
irreducible factor of numerator and denominator occurs with multiplicity
divisible by 2 (3).  Multiplicities are read off a squarefree decomposition,
so no factorization into irreducibles is ever needed.

The module also provides exact cube detection in Q(w) and in imaginary
quadratic fields Q(sqrt(D)), D < 0, by enumerating integral elements of the
required norm; this is the finite search backing the non-cube oracle.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .poly import Poly, nth_root_monic, squarefree_decomposition
from .ratfunc import RatFunc
from .scalars import ConstScalar


def _multiplicities_divisible(f: Poly, n: int) -> bool:
    if f.degree <= 0:
        return True
    return all(mult % n == 0 for _, mult in squarefree_decomposition(f))


def is_square_geometric(f: RatFunc) -> bool:
    """True iff f is a square in C(t).  Nonzero constants count as squares."""
    f = RatFunc.coerce(f)
    if not f:
        raise ZeroDivisionError("zero is neither square nor non-square here")
    return _multiplicities_divisible(f.num, 2) and _multiplicities_divisible(f.den, 2)


def is_cube_geometric(f: RatFunc) -> bool:
    """True iff f is a cube in C(t)."""
    f = RatFunc.coerce(f)
    if not f:
        raise ZeroDivisionError("zero is neither cube nor non-cube here")
    return _multiplicities_divisible(f.num, 3) and _multiplicities_divisible(f.den, 3)


def icbrt(n: int) -> int | None:
    """Exact integer cube root of n >= 0, or None."""
    if n < 0:
        raise ValueError("icbrt of negative")
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    return x if x * x * x == n else None


def squarefree_part(n: int) -> tuple[int, int]:
    """Write n = s^2 * d with d squarefree; returns (s, d).  Sign stays on d."""
    if n == 0:
        raise ValueError("squarefree part of zero")
    sign = -1 if n < 0 else 1
    n = abs(n)
    s, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= n
    return s, sign * d


def cube_candidates(r: int, d: int):
    """All integral elements (u + v*sqrt(d))/2 of Q(sqrt(d)), d < 0 squarefree,
    with norm r, as (u, v) pairs."""
    if r < 0:
        return
    four_r = 4 * r
    vmax = isqrt(four_r // -d) if d else 0
    half_integers = d % 4 == 1
    for v in range(-vmax, vmax + 1):
        uu = four_r + d * v * v
        if uu < 0:
            continue
        u = isqrt(uu)
        if u * u != uu:
            continue
        for uc in {u, -u}:
            if half_integers:
                if (uc - v) % 2:
                    continue
            else:
                if uc % 2 or v % 2:
                    continue
            yield uc, v


class CubeProbe:
    """Outcome of the finite cube search in Q(sqrt(d)): the root if one
    exists, plus the enumeration statistics that make the negative answer a
    checkable certificate."""

    __slots__ = ("root", "norm", "norm_root", "candidates")

    def __init__(self, root, norm, norm_root, candidates):
        self.root = root
        self.norm = norm
        self.norm_root = norm_root
        self.candidates = candidates


def cube_probe(x: Fraction, y: Fraction, d: int) -> CubeProbe:
    """Decide whether x + y*sqrt(d) is a cube in Q(sqrt(d)), d < 0 squarefree.

    The search is finite: a cube root must be integral after scaling by the
    coordinate denominator, its norm is the exact integer cube root of the
    scaled norm, and the norm form of an imaginary quadratic order is
    positive definite, so only finitely many integral elements qualify."""
    if d >= 0:
        raise ValueError("imaginary quadratic field expected (d < 0)")
    if x == 0 and y == 0:
        return CubeProbe((Fraction(0), Fraction(0)), 0, 0, 0)
    s = Fraction(x.denominator * y.denominator // _gcd(x.denominator, y.denominator))
    xs = x * s**3
    ys = y * s**3
    # s^3*(x + y sqrt d) lies in Z[sqrt d] (subset of the maximal order)
    nrm = int(xs * xs - d * ys * ys)
    r = icbrt(nrm)
    if r is None:
        return CubeProbe(None, nrm, None, 0)
    tried = 0
    for u, v in cube_candidates(r, d):
        tried += 1
        # ((u + v sqrt d)/2)^3 = (u^3 + 3 u v^2 d)/8 + (3 u^2 v + v^3 d)/8 sqrt d
        cx = Fraction(u**3 + 3 * u * v * v * d, 8)
        cy = Fraction(3 * u * u * v + v**3 * d, 8)
        if cx == xs and cy == ys:
            return CubeProbe((Fraction(u, 2) / s, Fraction(v, 2) / s), nrm, r, tried)
    return CubeProbe(None, nrm, r, tried)


def cube_root_in_imag_quadratic(
    x: Fraction, y: Fraction, d: int
) -> tuple[Fraction, Fraction] | None:
    """Exact cube root of x + y*sqrt(d) in Q(sqrt(d)) for squarefree d < 0,
    or None."""
    return cube_probe(x, y, d).root


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def cube_root_const(c: ConstScalar) -> ConstScalar | None:
    """Exact cube root in Q(w), or None.  Uses Q(w) = Q(sqrt(-3)):
    a + b*w = (a - b/2) + (b/2)*sqrt(-3).  Rational cubes get their
    rational root."""
    if not c:
        return ConstScalar(0)
    if c.is_rational():
        q = c.as_rational()
        rn = icbrt(abs(q.numerator))
        rd = icbrt(q.denominator)
        if rn is not None and rd is not None:
            sign = -1 if q < 0 else 1
            return ConstScalar(Fraction(sign * rn, rd))
    root = cube_root_in_imag_quadratic(c.a - c.b / 2, Fraction(c.b, 2), -3)
    if root is None:
        return None
    x, y = root
    return ConstScalar(x + y, 2 * y)


def cube_root_in_base(f: RatFunc) -> RatFunc | None:
    """Exact cube root of f in K = Q(w)(t), or None."""
    f = RatFunc.coerce(f)
    if not f:
        return RatFunc.coerce(0)
    lc = f.num.leading()
    croot = cube_root_const(lc)
    if croot is None:
        return None
    num_root = nth_root_monic(f.num.monic(), 3)
    if num_root is None:
        return None
    den_root = nth_root_monic(f.den, 3)
    if den_root is None:
        return None
    return RatFunc(num_root * croot, den_root)
