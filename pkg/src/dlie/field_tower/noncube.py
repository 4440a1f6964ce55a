"""One-sided non-cube certification for elements of M = K(r2).

The oracle specializes t to small primes t0 with alpha(t0) a negative
rational, which turns "is beta a cube in M?" into "is the specialized value
a cube in the imaginary quadratic field Q(sqrt(alpha(t0)))?" -- a finite,
exactly decidable question.  A negative answer at any usable t0 certifies
that beta is not a cube (a cube specializes to a cube wherever it has no
pole, and passing to the constant field with w adjoined cannot create cube
roots across a degree-2 step).  A positive answer at t0 is inconclusive and
the next point is tried.

Elements of M that actually lie in K are decided completely, without
specialization: cube roots in K are computed exactly, and a non-cube in K
stays a non-cube in the quadratic extension M.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from ..errors import IneligibleParameterError, MismatchError
from .predicates import cube_probe, cube_root_in_base, is_square_geometric, squarefree_part
from .ratfunc import RatFunc
from .tower import TowerElement, TowerSpec

DEFAULT_POINT_LIMIT = 25
_ENV_LIMIT = "DLIE_SPECIALIZATION_LIMIT"


def _point_limit(limit: int | None) -> int:
    if limit is not None:
        return limit
    raw = os.environ.get(_ENV_LIMIT)
    if raw is None:
        return DEFAULT_POINT_LIMIT
    try:
        return max(1, int(raw))
    except ValueError:
        return DEFAULT_POINT_LIMIT


def _primes(count: int):
    found = []
    n = 2
    while len(found) < count:
        if all(n % p for p in found):
            found.append(n)
            yield n
        n += 1


@dataclass(frozen=True)
class NoncubeCertificate:
    kind: str  # "specialization" or "base-field"
    t0: int | None = None
    disc: int | None = None
    value: str | None = None
    norm: int | None = None
    norm_root: int | None = None
    candidates: int | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "t0": self.t0,
            "disc": self.disc,
            "value": self.value,
            "norm": self.norm,
            "norm_root": self.norm_root,
            "candidates": self.candidates,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class NoncubeResult:
    status: str  # "certified", "cube" or "unknown"
    certificate: NoncubeCertificate | None = None
    cube_root: RatFunc | None = None
    points_tried: tuple = ()

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "cube_root": None if self.cube_root is None else str(self.cube_root),
            "points_tried": list(self.points_tried),
        }


def noncube_certify(beta: TowerElement, limit: int | None = None) -> NoncubeResult:
    """Certify beta not a cube in its quadratic tower, report a cube root,
    or return `unknown`.  Never certifies an actual cube."""
    if not isinstance(beta, TowerElement) or not beta.spec.has_quadratic:
        raise MismatchError("noncube_certify expects an element of K(r2)")
    if not beta:
        raise ValueError("beta must be nonzero")

    if beta.in_base():
        f = beta.base_value()
        root = cube_root_in_base(f)
        if root is not None:
            return NoncubeResult("cube", cube_root=root)
        cert = NoncubeCertificate(
            kind="base-field",
            reason="beta lies in K and is not a cube there; "
            "X^3 - beta stays irreducible over the quadratic extension",
        )
        return NoncubeResult("certified", certificate=cert)

    alpha = beta.spec.alpha
    x_coord = beta.coeff(0, 0)
    y_coord = beta.coeff(1, 0)
    tried = []
    for t0 in _primes(_point_limit(limit)):
        try:
            a_val = alpha.evaluate(t0)
            x_val = x_coord.evaluate(t0)
            y_val = y_coord.evaluate(t0)
        except ZeroDivisionError:
            continue
        if not (a_val.is_rational() and x_val.is_rational() and y_val.is_rational()):
            continue
        d0 = a_val.as_rational()
        if d0 >= 0:
            continue
        tried.append(t0)
        # sqrt(P/Q) = (s/Q) * sqrt(D) with P*Q = s^2 * D, D squarefree (< 0)
        s, disc = squarefree_part(d0.numerator * d0.denominator)
        x = x_val.as_rational()
        y = y_val.as_rational() * Fraction(s, d0.denominator)
        if x == 0 and y == 0:
            continue
        probe = cube_probe(x, y, disc)
        if probe.root is not None:
            continue  # a cube at this point; inconclusive
        cert = NoncubeCertificate(
            kind="specialization",
            t0=t0,
            disc=disc,
            value=f"{x} + {y}*sqrt({disc})",
            norm=probe.norm,
            norm_root=probe.norm_root,
            candidates=probe.candidates,
            reason="specialized value is not a cube in the imaginary quadratic field",
        )
        return NoncubeResult("certified", certificate=cert, points_tried=tuple(tried))
    return NoncubeResult("unknown", points_tried=tuple(tried))


@dataclass(frozen=True)
class S3ExtensionReport:
    """Checks for the quadratic-cubic tower to carry the full S3 action:
    (a) alpha not a square, (b) beta certified non-cube in K(r2),
    (c) gamma^3 = beta * conj(beta); plus the derived identity
    tau(r3) * r3 = gamma when the full tower exists."""

    alpha_nonsquare: bool
    beta_noncube: NoncubeResult
    gamma_identity: bool | None
    tau_identity: bool | None
    notes: tuple = ()

    @property
    def overall(self) -> bool:
        return (
            self.alpha_nonsquare
            and self.beta_noncube.certified
            and self.gamma_identity is True
        )

    def to_dict(self) -> dict:
        return {
            "alpha_nonsquare": self.alpha_nonsquare,
            "beta_noncube": self.beta_noncube.to_dict(),
            "gamma_identity": self.gamma_identity,
            "tau_identity": self.tau_identity,
            "overall": self.overall,
            "notes": list(self.notes),
        }


def check_s3_extension(alpha, beta, gamma, limit: int | None = None) -> S3ExtensionReport:
    """Validate tower data (alpha, beta, gamma) for the S3 Galois setup.
    Failures land in the report, not in exceptions."""
    from .parse import parse_element, parse_ratfunc

    notes = []
    alpha = parse_ratfunc(alpha) if isinstance(alpha, str) else RatFunc.coerce(alpha)
    gamma = parse_ratfunc(gamma) if isinstance(gamma, str) else RatFunc.coerce(gamma)

    a_ok = bool(alpha) and not is_square_geometric(alpha)
    if not a_ok:
        notes.append("alpha is a square (or zero); remaining checks need the quadratic layer")
        if isinstance(beta, TowerElement):
            b_res = noncube_certify(beta, limit=limit)
        else:
            b_res = NoncubeResult("unknown")
        return S3ExtensionReport(False, b_res, None, None, tuple(notes))

    quad = TowerSpec(alpha=alpha)
    if isinstance(beta, str):
        beta = parse_element(beta, quad)
    elif not isinstance(beta, TowerElement):
        beta = quad.from_base(RatFunc.coerce(beta))
    elif beta.spec != quad:
        raise MismatchError("beta must lie in K(r2) for the given alpha")
    if not beta:
        raise ValueError("beta must be nonzero")

    b_res = noncube_certify(beta, limit=limit)
    c_ok = quad.from_base(gamma**3) == beta * beta.quad_conj() if gamma else False

    tau_ok = None
    if c_ok:
        try:
            full = TowerSpec(alpha=alpha, beta=beta, gamma=gamma,
                             beta_certified=b_res.certified)
            tau = full.automorphism("tau")
            r3 = full.r3()
            tau_ok = tau(r3) * r3 == full.from_base(gamma)
        except IneligibleParameterError as exc:
            notes.append(f"full tower not constructible: {exc}")
    return S3ExtensionReport(a_ok, b_res, c_ok, tau_ok, tuple(notes))
