"""Radical extension towers over K = Q(w)(t) with exact arithmetic.

A tower L is K, K(r2) with r2^2 = alpha, K(r3) with r3^3 = beta, or
K(r2, r3) with beta taken from K(r2).  Elements are K-linear combinations of
the monomials r2^i * r3^j (i < 2, j < 3, restricted to the layers present),
stored flat as RatFunc coordinates.  The derivation extends d/dt uniquely:
d(r2) = (alpha'/2alpha) r2 and d(r3) = (beta'/3beta) r3.

Galois automorphisms: bar (r2 -> -r2), sigma (r3 -> w r3) and, when a gamma
with gamma^3 = beta*conj(beta) is supplied, the involution
tau (r2 -> -r2, r3 -> gamma/r3).  Each fixes K pointwise and commutes with
the derivation.
"""

from __future__ import annotations

from ..errors import IneligibleParameterError, MismatchError
from .predicates import is_cube_geometric, is_square_geometric
from .ratfunc import RF_ONE, RF_ZERO, RatFunc
from .scalars import OMEGA, ConstScalar

_OMEGA_POWERS = (ConstScalar(1), OMEGA, OMEGA * OMEGA)


def _as_ratfunc(x, what: str) -> RatFunc:
    if isinstance(x, str):
        from .parse import parse_ratfunc

        return parse_ratfunc(x)
    try:
        return RatFunc.coerce(x)
    except TypeError:
        raise TypeError(f"{what} must be a rational function, got {x!r}") from None


class TowerSpec:
    """Immutable description of a tower; also the element factory."""

    def __init__(self, alpha=None, beta=None, gamma=None, beta_certified=False):
        self.alpha = _as_ratfunc(alpha, "alpha") if alpha is not None else None
        if self.alpha is not None:
            if not self.alpha:
                raise IneligibleParameterError("alpha is zero")
            if is_square_geometric(self.alpha):
                raise IneligibleParameterError("alpha is a square")
        self._nq = 2 if self.alpha is not None else 1

        # the field beta lives in (K, or K(r2) when alpha is present)
        if beta is None:
            self._quad_part = None
            self.beta = None
            self._nc = 1
        else:
            qp = TowerSpec(alpha=alpha) if self.alpha is not None else TRIVIAL
            self._quad_part = qp
            self.beta = _coerce_beta(qp, beta)
            if not any(self.beta._c):
                raise IneligibleParameterError("beta is zero")
            if self.beta.in_base():
                if is_cube_geometric(self.beta.base_value()):
                    raise IneligibleParameterError("beta is a cube")
            self._nc = 3
        self.beta_certified = bool(beta_certified)

        if gamma is None:
            self.gamma = None
        else:
            if self.alpha is None or self.beta is None:
                raise IneligibleParameterError("gamma requires both radical layers")
            self.gamma = _as_ratfunc(gamma, "gamma")
            if not self.gamma:
                raise IneligibleParameterError("gamma is zero")
            norm = self.beta * self.beta.quad_conj()
            if self._quad_part.from_base(self.gamma**3) != norm:
                raise IneligibleParameterError("gamma^3 != beta * conj(beta)")

        self.degree = self._nq * self._nc
        self.monomials = _monomial_order(self._nq, self._nc)
        self.monomial_labels = tuple(_monomial_label(i, j) for i, j in self.monomials)
        self._flat_of_monomial = tuple(j * self._nq + i for i, j in self.monomials)
        self._init_caches()

    def _init_caches(self):
        zero, one = RF_ZERO, RF_ONE
        self._zero_coords = (zero,) * self.degree
        if self.alpha is not None:
            da = self.alpha.derivative()
            self._sqrt_dlog = da / (self.alpha * 2)
        else:
            self._sqrt_dlog = None
        if self.beta is not None:
            self._beta_pair = self.beta._c
            b = self.beta
            self._cbrt_dlog = (b.derivative() / (b * 3))._c
        else:
            self._beta_pair = None
            self._cbrt_dlog = None
        if self.gamma is not None:
            qp = self._quad_part
            g = qp.from_base(self.gamma)
            binv = self.beta.inverse()
            self._tau_u1 = (g * g * binv)._c  # tau(r3^2) = u1 * r3
            self._tau_u2 = (g * binv)._c      # tau(r3)   = u2 * r3^2
        else:
            self._tau_u1 = self._tau_u2 = None
        names = ["id"]
        if self._nq == 2 and (self.beta is None or self.beta.in_base()):
            names.append("bar")
        if self._nc == 3:
            names.append("sigma")
        if self.gamma is not None:
            names.append("tau")
        self.automorphism_names = tuple(names)

    # -- properties ----------------------------------------------------

    @property
    def has_quadratic(self) -> bool:
        return self._nq == 2

    @property
    def has_cubic(self) -> bool:
        return self._nc == 3

    @property
    def quadratic_part(self) -> "TowerSpec":
        return self._quad_part if self._quad_part is not None else self

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, TowerSpec):
            return NotImplemented
        return (
            self.alpha == other.alpha
            and (self.beta is None) == (other.beta is None)
            and (self.beta is None or self.beta._c == other.beta._c)
            and self.gamma == other.gamma
        )

    def __hash__(self):
        return hash((self.alpha, None if self.beta is None else self.beta._c, self.gamma))

    def __repr__(self):
        parts = []
        if self.alpha is not None:
            parts.append(f"alpha={self.alpha}")
        if self.beta is not None:
            parts.append(f"beta={self.beta}")
        if self.gamma is not None:
            parts.append(f"gamma={self.gamma}")
        return f"TowerSpec({', '.join(parts)})"

    def to_dict(self) -> dict:
        return {
            "alpha": None if self.alpha is None else str(self.alpha),
            "beta": None if self.beta is None else str(self.beta),
            "gamma": None if self.gamma is None else str(self.gamma),
            "beta_certified": self.beta_certified,
            "degree": self.degree,
        }

    # -- element factory -------------------------------------------------

    def _make(self, coords: list[RatFunc]) -> "TowerElement":
        el = TowerElement.__new__(TowerElement)
        el.spec = self
        el._c = tuple(coords)
        return el

    def zero(self) -> "TowerElement":
        return self._make(list(self._zero_coords))

    def one(self) -> "TowerElement":
        return self.from_base(RF_ONE)

    def t(self) -> "TowerElement":
        return self.from_base(RatFunc.t())

    def from_base(self, x) -> "TowerElement":
        coords = list(self._zero_coords)
        coords[0] = RatFunc.coerce(x)
        return self._make(coords)

    def monomial(self, i: int = 0, j: int = 0, coeff=RF_ONE) -> "TowerElement":
        if not (0 <= i < self._nq and 0 <= j < self._nc):
            raise MismatchError(f"monomial r2^{i}*r3^{j} not present in this tower")
        coords = list(self._zero_coords)
        coords[j * self._nq + i] = RatFunc.coerce(coeff)
        return self._make(coords)

    def r2(self) -> "TowerElement":
        return self.monomial(1, 0)

    def r3(self) -> "TowerElement":
        return self.monomial(0, 1)

    def element(self, mapping) -> "TowerElement":
        """Build an element from {(i, j): coefficient}."""
        coords = list(self._zero_coords)
        for (i, j), c in mapping.items():
            if not (0 <= i < self._nq and 0 <= j < self._nc):
                raise MismatchError(f"monomial r2^{i}*r3^{j} not present in this tower")
            coords[j * self._nq + i] = RatFunc.coerce(c)
        return self._make(coords)

    def from_coordinates(self, seq) -> "TowerElement":
        """Inverse of TowerElement.coordinates(): canonical monomial order."""
        seq = list(seq)
        if len(seq) != self.degree:
            raise MismatchError("coordinate length does not match the tower degree")
        coords = list(self._zero_coords)
        for flat, c in zip(self._flat_of_monomial, seq):
            coords[flat] = RatFunc.coerce(c)
        return self._make(coords)

    def embed(self, x: "TowerElement") -> "TowerElement":
        """Lift an element of K or of the quadratic part into this tower."""
        if x.spec == self:
            return x
        coords = list(self._zero_coords)
        if x.spec == TRIVIAL:
            coords[0] = x._c[0]
        elif self._nq == 2 and x.spec == self.quadratic_part:
            coords[0], coords[1] = x._c
        else:
            raise MismatchError("element does not embed into this tower")
        return self._make(coords)

    def automorphism(self, name: str) -> "FieldAutomorphism":
        if name not in self.automorphism_names:
            raise MismatchError(f"automorphism {name!r} is not defined on this tower")
        return FieldAutomorphism(self, name)

    def automorphisms(self) -> dict:
        return {n: FieldAutomorphism(self, n) for n in self.automorphism_names}


def _coerce_beta(quad_part: TowerSpec, beta) -> "TowerElement":
    if isinstance(beta, TowerElement):
        if beta.spec == quad_part:
            return beta
        if beta.spec == TRIVIAL:
            return quad_part.embed(beta)
        raise MismatchError("beta must lie in K or in K(r2) with the same alpha")
    if isinstance(beta, str):
        from .parse import parse_element

        return parse_element(beta, quad_part)
    return quad_part.from_base(RatFunc.coerce(beta))


def _monomial_order(nq: int, nc: int) -> tuple:
    order = [(0, 0)]
    if nq == 2:
        order.append((1, 0))
    for j in range(1, nc):
        order.append((0, j))
    if nq == 2:
        for j in range(1, nc):
            order.append((1, j))
    return tuple(order)


def _monomial_label(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("r2")
    if j:
        parts.append("r3" if j == 1 else f"r3^{j}")
    return "*".join(parts) if parts else "1"


class TowerElement:
    __slots__ = ("spec", "_c")

    def __init__(self, spec: TowerSpec, coords):
        self.spec = spec
        coords = tuple(RatFunc.coerce(c) for c in coords)
        if len(coords) != spec.degree:
            raise MismatchError("coordinate length does not match the tower degree")
        self._c = coords

    # -- inspection ------------------------------------------------------

    def coeff(self, i: int, j: int = 0) -> RatFunc:
        return self._c[j * self.spec._nq + i]

    def coordinates(self) -> tuple:
        """Coordinates over K in canonical monomial order (spec.monomials)."""
        return tuple(self._c[f] for f in self.spec._flat_of_monomial)

    def in_base(self) -> bool:
        return not any(self._c[1:])

    def base_value(self) -> RatFunc:
        if not self.in_base():
            raise ValueError(f"{self} does not lie in K")
        return self._c[0]

    def in_quadratic(self) -> bool:
        nq = self.spec._nq
        return not any(self._c[nq:])

    def __bool__(self) -> bool:
        return any(self._c)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "TowerElement":
        if isinstance(other, TowerElement):
            if other.spec != self.spec:
                raise MismatchError("elements of different towers")
            return other
        return self.spec.from_base(RatFunc.coerce(other))

    def __add__(self, other):
        other = self._coerce(other)
        return self.spec._make([a + b for a, b in zip(self._c, other._c)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return self.spec._make([a - b for a, b in zip(self._c, other._c)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return self.spec._make([-a for a in self._c])

    def __mul__(self, other):
        if not isinstance(other, TowerElement):
            c = RatFunc.coerce(other)
            return self.spec._make([a * c for a in self._c])
        other = self._coerce(other)
        spec = self.spec
        nq = spec._nq
        out = [RF_ZERO] * spec.degree
        alpha = spec.alpha
        beta_pair = spec._beta_pair
        for idx1, v1 in enumerate(self._c):
            if not v1:
                continue
            i1, j1 = idx1 % nq, idx1 // nq
            for idx2, v2 in enumerate(other._c):
                if not v2:
                    continue
                c = v1 * v2
                i = i1 + idx2 % nq
                j = j1 + idx2 // nq
                if i >= 2:
                    i -= 2
                    c = c * alpha
                if j >= 3:
                    j -= 3
                    _add_pair_multiple(out, nq, alpha, i, j, c, beta_pair)
                else:
                    k = j * nq + i
                    out[k] = out[k] + c
        return spec._make(out)

    __rmul__ = __mul__

    def inverse(self) -> "TowerElement":
        spec = self.spec
        if not any(self._c):
            raise ZeroDivisionError("inverse of zero tower element")
        if spec._nc == 1:
            return spec._make(_quad_inverse(spec, self._c))
        # norm down the cubic layer: x * sigma(x) * sigma^2(x) lies in K(r2)
        s1 = self._sigma()
        u = s1 * s1._sigma()
        n = self * u
        nq = spec._nq
        if any(n._c[nq:]):
            raise ArithmeticError("cubic norm left the quadratic layer")
        ninv = _quad_inverse(spec, n._c[:nq])
        coords = list(spec._zero_coords)
        coords[:nq] = ninv
        return u * spec._make(coords)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.spec.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- derivation and automorphisms -----------------------------------

    def derivative(self) -> "TowerElement":
        spec = self.spec
        nq = spec._nq
        out = [RF_ZERO] * spec.degree
        for idx, v in enumerate(self._c):
            if not v:
                continue
            i, j = idx % nq, idx // nq
            dv = v.derivative()
            if dv:
                out[idx] = out[idx] + dv
            if i == 1:
                out[idx] = out[idx] + v * spec._sqrt_dlog
            if j:
                _add_pair_multiple(out, nq, spec.alpha, i, j, v * j, spec._cbrt_dlog)
        return spec._make(out)

    def quad_conj(self) -> "TowerElement":
        """Conjugation of the quadratic layer only (r2 -> -r2, r3 fixed).
        A field automorphism precisely when `bar` is available; exposed for
        norm computations on K(r2)."""
        if self.spec._nq == 1:
            return self
        return self.spec._make(
            [-v if idx % 2 else v for idx, v in enumerate(self._c)]
        )

    def _sigma(self) -> "TowerElement":
        nq = self.spec._nq
        return self.spec._make(
            [v * _OMEGA_POWERS[idx // nq] for idx, v in enumerate(self._c)]
        )

    def _tau(self) -> "TowerElement":
        spec = self.spec
        nq = spec._nq
        out = [RF_ZERO] * spec.degree
        for idx, v in enumerate(self._c):
            if not v:
                continue
            i, j = idx % nq, idx // nq
            if i:
                v = -v
            if j == 0:
                out[i] = out[i] + v
            elif j == 1:
                _add_pair_multiple(out, nq, spec.alpha, i, 2, v, spec._tau_u2)
            else:
                _add_pair_multiple(out, nq, spec.alpha, i, 1, v, spec._tau_u1)
        return spec._make(out)

    def __eq__(self, other):
        if isinstance(other, TowerElement):
            return self.spec == other.spec and self._c == other._c
        try:
            other = self._coerce(other)
        except (TypeError, MismatchError):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __str__(self):
        parts = []
        for (i, j), label in zip(self.spec.monomials, self.spec.monomial_labels):
            v = self.coeff(i, j)
            if not v:
                continue
            s = str(v)
            if label == "1":
                term = s
            elif s == "1":
                term = label
            elif s == "-1":
                term = f"-{label}"
            else:
                if " " in s or "/" in s:
                    s = f"({s})"
                term = f"{s}*{label}"
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append(f" - {term[1:]}")
            else:
                parts.append(f" + {term}")
        return "".join(parts) if parts else "0"

    def __repr__(self):
        return f"TowerElement<{self}>"


def _add_pair_multiple(out, nq, alpha, i, j, c, pair):
    """Add c * (pair[0] + pair[1]*r2) * r2^i * r3^j to flat coords `out`."""
    if pair[0]:
        k = j * nq + i
        out[k] = out[k] + c * pair[0]
    if nq == 2 and pair[1]:
        cc = c * pair[1]
        i2 = i + 1
        if i2 == 2:
            i2 = 0
            cc = cc * alpha
        k = j * nq + i2
        out[k] = out[k] + cc


def _quad_inverse(spec: TowerSpec, pair) -> list:
    """Inverse of a + b*r2 as flat quadratic coords."""
    if spec._nq == 1:
        return [pair[0].inverse()]
    a, b = pair
    if not b:
        return [a.inverse(), RF_ZERO]
    n = a * a - spec.alpha * (b * b)
    if not n:
        raise ZeroDivisionError("inverse of zero tower element")
    ninv = n.inverse()
    return [a * ninv, -(b * ninv)]


class FieldAutomorphism:
    """K-algebra automorphism of a tower, one of id, bar, sigma, tau."""

    __slots__ = ("spec", "name")

    def __init__(self, spec: TowerSpec, name: str):
        if name not in spec.automorphism_names:
            raise MismatchError(f"automorphism {name!r} is not defined on this tower")
        self.spec = spec
        self.name = name

    def __call__(self, x: TowerElement) -> TowerElement:
        if x.spec != self.spec:
            raise MismatchError("element does not belong to this automorphism's tower")
        if self.name == "id":
            return x
        if self.name == "bar":
            return x.quad_conj()
        if self.name == "sigma":
            return x._sigma()
        return x._tau()

    def is_identity_on(self, x: TowerElement) -> bool:
        return self(x) == x

    def __repr__(self):
        return f"FieldAutomorphism({self.name})"


TRIVIAL = TowerSpec()
