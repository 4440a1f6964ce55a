"""Closed-form bases for the twisted forms, built directly from the matrix
models, plus the certification glue that compares them with computed fixed
points.

Type A over L = K(r2): skew matrices over K plus r2 times traceless
symmetric matrices over K.  Type D: first row and column scaled by r2, the
skew remainder over K.  For so8 the order-3 symmetry acts on seven
4-vectors; its eigendata (matrix S with eigenvalues 1, 1, w, w^2) spans the
fixed 4-spaces Xi (cubic tower) and Theta (full S3 tower) whose seven
copies give the 28-dimensional forms.
"""

from __future__ import annotations

from .descent_engine import TRIALITY_S, FixedSubalgebra, seven_join
from .dlie_core import LieElement, make_sl, make_so
from .errors import IneligibleParameterError, MismatchError
from .field_tower.scalars import SQRT_MINUS_3, ConstScalar
from .field_tower.tower import TowerSpec
from .linalg import spans_equal
from .report import VerificationReport, timed_report

#: eigenvectors of TRIALITY_S for eigenvalues 1, 1, w, w^2
EIGENVECTOR_1A = tuple(ConstScalar(v) for v in (0, 1, -1, 0))
EIGENVECTOR_1B = tuple(ConstScalar(v) for v in (0, 1, 0, -1))
EIGENVECTOR_W = (SQRT_MINUS_3, ConstScalar(1), ConstScalar(1), ConstScalar(1))
EIGENVECTOR_W2 = (-SQRT_MINUS_3, ConstScalar(1), ConstScalar(1), ConstScalar(1))


class EigenData:
    """The triality matrix with its eigenvectors, all over the constants."""

    def __init__(self, matrix=TRIALITY_S, vectors=None):
        self.matrix = matrix
        if vectors is None:
            vectors = {
                "v1_1": EIGENVECTOR_1A,
                "v1_2": EIGENVECTOR_1B,
                "v_w": EIGENVECTOR_W,
                "v_w2": EIGENVECTOR_W2,
            }
        self.vectors = dict(vectors)
        self.eigenvalues = {
            "v1_1": ConstScalar(1),
            "v1_2": ConstScalar(1),
            "v_w": ConstScalar(0, 1),
            "v_w2": ConstScalar(0, 1) * ConstScalar(0, 1),
        }


def _mat_vec(matrix, vec):
    return tuple(
        sum((r * v for r, v in zip(row, vec)), ConstScalar(0)) for row in matrix
    )


def _mat_mat(a, b):
    n = len(a)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(n)), ConstScalar(0)) for j in range(n)
        )
        for i in range(n)
    )


def _const_det4(rows):
    # Laplace expansion is fine at size 4 over exact scalars
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = ConstScalar(0)
    sign = ConstScalar(1)
    for j in range(n):
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        total = total + sign * rows[0][j] * _const_det4(minor)
        sign = -sign
    return total


def eigen_check(data: EigenData | None = None) -> VerificationReport:
    """S^3 = I, the four eigen-relations, and independence of the vectors."""
    if data is None:
        data = EigenData()
    report = VerificationReport(configuration={"object": "triality-eigendata"})
    with timed_report(report):
        s3 = _mat_mat(data.matrix, _mat_mat(data.matrix, data.matrix))
        ident = tuple(
            tuple(ConstScalar(1 if i == j else 0) for j in range(4)) for i in range(4)
        )
        report.add("S_cubed_is_identity", s3 == ident)
        for name, vec in data.vectors.items():
            lam = data.eigenvalues[name]
            image = _mat_vec(data.matrix, vec)
            report.add(f"eigen_relation_{name}", image == tuple(lam * v for v in vec))
        det = _const_det4([list(data.vectors[n]) for n in ("v1_1", "v1_2", "v_w", "v_w2")])
        report.add("eigenvectors_independent", bool(det), {"det": str(det)})
    return report


# -- types A and D -----------------------------------------------------------


def basis_typeA_form(n: int, tower: TowerSpec) -> FixedSubalgebra:
    """o_n(K) + r2 * (Sym_n(K) traceless): dimension n^2 - 1."""
    if n < 3:
        raise IneligibleParameterError("type A needs n >= 3 (A1 has no outer symmetry)")
    if not tower.has_quadratic:
        raise IneligibleParameterError("type A form needs a quadratic layer")
    algebra = make_sl(n)
    one = tower.one()
    r2 = tower.r2()
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            basis.append(LieElement.from_matrix(algebra, tower, {(i, j): one, (j, i): -one}))
    for i in range(n):
        for j in range(i + 1, n):
            basis.append(LieElement.from_matrix(algebra, tower, {(i, j): r2, (j, i): r2}))
    for i in range(n - 1):
        basis.append(
            LieElement.from_matrix(algebra, tower, {(i, i): r2, (i + 1, i + 1): -r2})
        )
    return FixedSubalgebra(algebra, tower, basis, "explicit")


def basis_typeD_form(m: int, tower: TowerSpec) -> FixedSubalgebra:
    """First row/column carrying r2, skew remainder over K: dim m(m-1)/2."""
    if m < 8 or m % 2:
        raise IneligibleParameterError("type D form needs even m >= 8")
    if not tower.has_quadratic:
        raise IneligibleParameterError("type D form needs a quadratic layer")
    algebra = make_so(m)
    one = tower.one()
    r2 = tower.r2()
    basis = []
    for j in range(1, m):
        basis.append(LieElement.from_matrix(algebra, tower, {(0, j): r2, (j, 0): -r2}))
    for i in range(1, m):
        for j in range(i + 1, m):
            basis.append(LieElement.from_matrix(algebra, tower, {(i, j): one, (j, i): -one}))
    return FixedSubalgebra(algebra, tower, basis, "explicit")


# -- D4 ----------------------------------------------------------------------


def _const_vec_to_tower(tower: TowerSpec, vec, scale=None):
    out = []
    for c in vec:
        el = tower.from_base(c)
        if scale is not None:
            el = el * scale
        out.append(el)
    return out


def xi_subspace(tower: TowerSpec) -> list:
    """Four generators over L of the sigma-fixed 4-space:
    v1_1, v1_2, r3*v_w2, r3^2*v_w."""
    if not tower.has_cubic:
        raise IneligibleParameterError("the cubic layer is missing")
    r3 = tower.r3()
    return [
        _const_vec_to_tower(tower, EIGENVECTOR_1A),
        _const_vec_to_tower(tower, EIGENVECTOR_1B),
        _const_vec_to_tower(tower, EIGENVECTOR_W2, r3),
        _const_vec_to_tower(tower, EIGENVECTOR_W, r3 * r3),
    ]


def cbrt_beta_conj(tower: TowerSpec):
    """The partner cube root gamma / r3 (a cube root of conj(beta))."""
    if tower.gamma is None:
        raise IneligibleParameterError("the S3 tower data (gamma) is missing")
    return tower.from_base(tower.gamma) / tower.r3()


def theta_subspace(tower: TowerSpec) -> list:
    """Four generators over L of the (sigma, tau)-fixed 4-space:
    v1_1, v1_2, r3*v_w2 + (gamma/r3)*v_w, r2*(r3*v_w2 - (gamma/r3)*v_w)."""
    if tower.gamma is None:
        raise IneligibleParameterError("the S3 tower data (gamma) is missing")
    r3 = tower.r3()
    r2 = tower.r2()
    r3bar = cbrt_beta_conj(tower)
    plus = [
        a + b
        for a, b in zip(
            _const_vec_to_tower(tower, EIGENVECTOR_W2, r3),
            _const_vec_to_tower(tower, EIGENVECTOR_W, r3bar),
        )
    ]
    minus = [
        (a - b) * r2
        for a, b in zip(
            _const_vec_to_tower(tower, EIGENVECTOR_W2, r3),
            _const_vec_to_tower(tower, EIGENVECTOR_W, r3bar),
        )
    ]
    return [
        _const_vec_to_tower(tower, EIGENVECTOR_1A),
        _const_vec_to_tower(tower, EIGENVECTOR_1B),
        plus,
        minus,
    ]


def basis_D4_form(group: str, tower: TowerSpec) -> FixedSubalgebra:
    """28 basis vectors: each of the seven 4-vector slots filled with each
    generator of the fixed 4-space (Xi for Z3, Theta for S3)."""
    if group == "Z3":
        gens = xi_subspace(tower)
    elif group == "S3":
        gens = theta_subspace(tower)
    else:
        raise ValueError("group must be 'Z3' or 'S3'")
    algebra = make_so(8)
    zero_vec = [tower.zero()] * 4
    basis = []
    for i in range(7):
        for g in gens:
            vectors = [list(zero_vec) for _ in range(7)]
            vectors[i] = list(g)
            basis.append(seven_join(algebra, tower, vectors))
    return FixedSubalgebra(algebra, tower, basis, "explicit")


def vector_in_subspace(vec, gens, tower: TowerSpec) -> bool:
    """Membership of a 4-vector over L in the K-span of 4-vector generators."""
    def expand(v):
        out = []
        for c in v:
            out.extend(c.coordinates())
        return out

    width = 4 * tower.degree
    from .linalg import KSpan

    span = KSpan([expand(g) for g in gens], width)
    return span.contains(expand(vec))


def subspace_equal(f1: FixedSubalgebra, f2: FixedSubalgebra) -> bool:
    """Double inclusion of K-spans, decided by exact rank computations."""
    if f1.algebra != f2.algebra or f1.spec != f2.spec:
        raise MismatchError("forms live in different ambient algebras")
    ncols = f1.algebra.dim * f1.spec.degree
    return spans_equal(f1.k_vectors(), f2.k_vectors(), ncols)
