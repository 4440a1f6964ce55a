"""Simple Lie algebras by structure constants, with a differential operator.

Matrix models: sl_n with basis {E_ij (i != j)} followed by the diagonal
differences {E_ii - E_(i+1)(i+1)}, and so_m (skew-symmetric m x m) with
basis {E_ij - E_ji : i < j}.  Structure constants are computed once from
matrix commutators and stored sparsely; brackets of elements with
coordinates in any tower go through those tables.

The derivation is the entry-wise d/dt on coordinates, optionally twisted by
an inner part: X -> dX + [D, X], which is again a derivation for the
bracket (checkable via leibniz_check).
"""

from __future__ import annotations

from .errors import MismatchError
from .field_tower.ratfunc import RatFunc
from .field_tower.scalars import ONE, ZERO
from .field_tower.tower import TRIVIAL, TowerElement, TowerSpec
from .linalg import mat_inverse, rank


def _mat_mult(a: dict, b: dict) -> dict:
    out: dict = {}
    for (r, c), v in a.items():
        for (c2, c3), w in b.items():
            if c == c2:
                key = (r, c3)
                s = out.get(key, ZERO) + v * w
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
    return out


def _mat_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, v in b.items():
        s = out.get(key, ZERO) - v
        if s:
            out[key] = s
        elif key in out:
            del out[key]
    return out


class DLieAlgebra:
    """A simple Lie algebra fixed by a matrix model and its basis."""

    __slots__ = ("label", "family", "size", "dim", "basis_matrices", "basis_labels", "_table")

    def __init__(self, label, family, size, matrices, labels):
        self.label = label
        self.family = family
        self.size = size
        self.dim = len(matrices)
        self.basis_matrices = tuple(matrices)
        self.basis_labels = tuple(labels)
        table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                comm = _mat_sub(
                    _mat_mult(self.basis_matrices[i], self.basis_matrices[j]),
                    _mat_mult(self.basis_matrices[j], self.basis_matrices[i]),
                )
                coords = self.matrix_to_coords(comm, zero=ZERO)
                entries = tuple((k, c) for k, c in enumerate(coords) if c)
                if entries:
                    table[(i, j)] = entries
        self._table = table

    # -- coordinates vs matrices ------------------------------------------

    def matrix_to_coords(self, mat: dict, zero) -> list:
        n = self.size
        if self.family == "sl":
            coords = []
            for i in range(n):
                for j in range(n):
                    if i != j:
                        coords.append(mat.get((i, j), zero))
            trace = zero
            partial = zero
            diag_coords = []
            for i in range(n - 1):
                partial = partial + mat.get((i, i), zero)
                diag_coords.append(partial)
                trace = trace + mat.get((i, i), zero)
            trace = trace + mat.get((n - 1, n - 1), zero)
            if trace:
                raise ValueError("matrix is not traceless")
            return coords + diag_coords
        coords = []
        for i in range(n):
            for j in range(i + 1, n):
                v = mat.get((i, j), zero)
                w = mat.get((j, i), zero)
                if v + w:
                    raise ValueError("matrix is not skew-symmetric")
                coords.append(v)
        for i in range(n):
            if mat.get((i, i), zero):
                raise ValueError("matrix is not skew-symmetric")
        return coords

    def coords_to_matrix(self, coords) -> dict:
        n = self.size
        out: dict = {}
        if self.family == "sl":
            k = 0
            for i in range(n):
                for j in range(n):
                    if i != j:
                        if coords[k]:
                            out[(i, j)] = coords[k]
                        k += 1
            prev = None
            for i in range(n - 1):
                x = coords[k + i]
                d = x if prev is None else x - prev
                if d:
                    out[(i, i)] = d
                prev = x
            if prev is not None and prev:
                out[(n - 1, n - 1)] = -prev
            return out
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                if coords[k]:
                    out[(i, j)] = coords[k]
                    out[(j, i)] = -coords[k]
                k += 1
        return out

    # -- brackets ---------------------------------------------------------

    def basis_bracket(self, i: int, j: int) -> dict:
        """[e_i, e_j] as a sparse {index: ConstScalar} map."""
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), ()))
        return {k: -c for k, c in self._table.get((j, i), ())}

    def bracket_coords(self, xc, yc, zero):
        """Bracket on coordinate vectors over any exact coefficient field."""
        out = [zero] * self.dim
        for i, xi in enumerate(xc):
            if not xi:
                continue
            for j, yj in enumerate(yc):
                if not yj or i == j:
                    continue
                if i < j:
                    entries = self._table.get((i, j))
                    if not entries:
                        continue
                    p = xi * yj
                else:
                    entries = self._table.get((j, i))
                    if not entries:
                        continue
                    p = -(xi * yj)
                for k, c in entries:
                    out[k] = out[k] + p * c
        return out

    def __eq__(self, other):
        if not isinstance(other, DLieAlgebra):
            return NotImplemented
        return self.label == other.label

    def __hash__(self):
        return hash(self.label)

    def __repr__(self):
        return f"DLieAlgebra({self.label}, dim={self.dim})"


def make_sl(n: int) -> DLieAlgebra:
    """sl_n: traceless n x n matrices, dim n^2 - 1."""
    if n < 2:
        raise ValueError("sl_n needs n >= 2")
    matrices = []
    labels = []
    for i in range(n):
        for j in range(n):
            if i != j:
                matrices.append({(i, j): ONE})
                labels.append(f"E{i + 1},{j + 1}")
    for i in range(n - 1):
        matrices.append({(i, i): ONE, (i + 1, i + 1): -ONE})
        labels.append(f"H{i + 1}")
    return DLieAlgebra(f"sl{n}", "sl", n, matrices, labels)


def make_so(m: int) -> DLieAlgebra:
    """so_m: skew-symmetric m x m matrices, dim m(m-1)/2.  Rows and columns
    are indexed 0..m-1."""
    if m < 3:
        raise ValueError("so_m needs m >= 3")
    matrices = []
    labels = []
    for i in range(m):
        for j in range(i + 1, m):
            matrices.append({(i, j): ONE, (j, i): -ONE})
            labels.append(f"A{i},{j}")
    return DLieAlgebra(f"so{m}", "so", m, matrices, labels)


class LieElement:
    """An element of g0(L): coordinates in a shared tower, one per basis vector."""

    __slots__ = ("algebra", "spec", "coords")

    def __init__(self, algebra: DLieAlgebra, spec: TowerSpec, coords):
        self.algebra = algebra
        self.spec = spec
        coords = tuple(c if isinstance(c, TowerElement) else spec.from_base(RatFunc.coerce(c))
                       for c in coords)
        if len(coords) != algebra.dim:
            raise MismatchError("coordinate count does not match the algebra dimension")
        for c in coords:
            if c.spec != spec:
                raise MismatchError("all coordinates must share one tower")
        self.coords = coords

    @staticmethod
    def zero(algebra: DLieAlgebra, spec: TowerSpec = TRIVIAL) -> "LieElement":
        return LieElement(algebra, spec, [spec.zero()] * algebra.dim)

    @staticmethod
    def basis(algebra: DLieAlgebra, k: int, spec: TowerSpec = TRIVIAL) -> "LieElement":
        coords = [spec.zero()] * algebra.dim
        coords[k] = spec.one()
        return LieElement(algebra, spec, coords)

    @staticmethod
    def from_matrix(algebra: DLieAlgebra, spec: TowerSpec, mat: dict) -> "LieElement":
        mat = {k: (v if isinstance(v, TowerElement) else spec.from_base(RatFunc.coerce(v)))
               for k, v in mat.items()}
        coords = algebra.matrix_to_coords(mat, zero=spec.zero())
        return LieElement(algebra, spec, coords)

    def to_matrix(self) -> dict:
        return self.algebra.coords_to_matrix(self.coords)

    def _check(self, other: "LieElement"):
        if self.algebra != other.algebra:
            raise MismatchError("elements of different algebras")
        if self.spec != other.spec:
            raise MismatchError("elements over different towers")

    def __add__(self, other):
        self._check(other)
        return LieElement(self.algebra, self.spec,
                          [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return LieElement(self.algebra, self.spec,
                          [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return LieElement(self.algebra, self.spec, [-a for a in self.coords])

    def scaled(self, c) -> "LieElement":
        if isinstance(c, TowerElement):
            if c.spec != self.spec:
                raise MismatchError("scalar from a different tower")
        else:
            c = self.spec.from_base(RatFunc.coerce(c))
        return LieElement(self.algebra, self.spec, [a * c for a in self.coords])

    def __mul__(self, c):
        return self.scaled(c)

    __rmul__ = __mul__

    def bracket(self, other: "LieElement") -> "LieElement":
        self._check(other)
        out = self.algebra.bracket_coords(self.coords, other.coords, self.spec.zero())
        return LieElement(self.algebra, self.spec, out)

    def derivative(self) -> "LieElement":
        return LieElement(self.algebra, self.spec, [c.derivative() for c in self.coords])

    def extend(self, spec: TowerSpec) -> "LieElement":
        """Base extension along an inclusion of towers."""
        return LieElement(self.algebra, spec, [spec.embed(c) for c in self.coords])

    def k_vector(self) -> list:
        """Expansion over K: basis-major, tower monomials in canonical order."""
        out = []
        for c in self.coords:
            out.extend(c.coordinates())
        return out

    @staticmethod
    def from_k_vector(algebra: DLieAlgebra, spec: TowerSpec, vec) -> "LieElement":
        t = spec.degree
        coords = [spec.from_coordinates(vec[a * t:(a + 1) * t]) for a in range(algebra.dim)]
        return LieElement(algebra, spec, coords)

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return (self.algebra == other.algebra and self.spec == other.spec
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.algebra.label, self.coords))

    def to_coeff_map(self) -> dict:
        return {label: str(c) for label, c in zip(self.algebra.basis_labels, self.coords) if c}

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in self.to_coeff_map().items())
        return f"LieElement<{inner or '0'}>"


class DerivationOp:
    """X -> dX + [twist, X]; twist None means the plain entry-wise operator."""

    __slots__ = ("twist",)

    def __init__(self, twist: LieElement | None = None):
        self.twist = twist

    def apply(self, x: LieElement) -> LieElement:
        out = x.derivative()
        if self.twist is not None:
            if self.twist.spec != x.spec or self.twist.algebra != x.algebra:
                raise MismatchError("twist and argument live in different spaces")
            out = out + self.twist.bracket(x)
        return out

    def twisted_by(self, extra: LieElement | None) -> "DerivationOp":
        if extra is None:
            return self
        if self.twist is None:
            return DerivationOp(extra)
        return DerivationOp(self.twist + extra)


def jacobi_check(algebra: DLieAlgebra) -> bool:
    """[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0 for all
    ordered basis triples, over the structure-constant tables."""
    dim = algebra.dim
    bb = algebra.basis_bracket
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                acc: dict = {}
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    for mid, s in bb(b, c).items():
                        for out, s2 in bb(a, mid).items():
                            v = acc.get(out, ZERO) + s * s2
                            if v:
                                acc[out] = v
                            elif out in acc:
                                del acc[out]
                if acc:
                    return False
    return True


def leibniz_check(op: DerivationOp, algebra: DLieAlgebra, spec: TowerSpec = TRIVIAL) -> bool:
    """d[x, y] = [dx, y] + [x, dy] for all basis pairs, with the left factor
    scaled by 1, t, and r2 when present."""
    scalars = [spec.one(), spec.t()]
    if spec.has_quadratic:
        scalars.append(spec.r2())
    basis = [LieElement.basis(algebra, k, spec) for k in range(algebra.dim)]
    for s in scalars:
        for x in basis:
            sx = x.scaled(s)
            dsx = op.apply(sx)
            for y in basis:
                lhs = op.apply(sx.bracket(y))
                rhs = dsx.bracket(y) + sx.bracket(op.apply(y))
                if lhs != rhs:
                    return False
    return True


def quasi_iso_verify(g: DLieAlgebra, op1: DerivationOp, g2: DLieAlgebra, op2: DerivationOp,
                     twist: LieElement | None, phi: list, spec: TowerSpec = TRIVIAL) -> bool:
    """Check a witness for (g, op1 + ad(twist)) ~ (g2, op2): phi must be an
    invertible K-linear map that preserves brackets and intertwines the
    operators.  Checking on basis vectors suffices: both sides obey the same
    scalar Leibniz expansion."""
    if g.dim != g2.dim:
        return False
    dim = g.dim
    rows = [[RatFunc.coerce(v) for v in row] for row in phi]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise MismatchError("phi must be a square matrix of size dim")
    if rank(rows, dim) != dim:
        return False

    def apply_phi(x: LieElement) -> LieElement:
        out = []
        for jrow in range(dim):
            acc = spec.zero()
            for i, c in enumerate(x.coords):
                if c and rows[jrow][i]:
                    acc = acc + c * rows[jrow][i]
            out.append(acc)
        return LieElement(g2, spec, out)

    eff = op1.twisted_by(twist)
    basis = [LieElement.basis(g, k, spec) for k in range(dim)]
    images = [apply_phi(b) for b in basis]
    for i in range(dim):
        if apply_phi(eff.apply(basis[i])) != op2.apply(images[i]):
            return False
        for j in range(i + 1, dim):
            lhs = apply_phi(basis[i].bracket(basis[j]))
            if lhs != images[i].bracket(images[j]):
                return False
    return True


def reverse_witness(phi: list, twist: LieElement | None, g2: DLieAlgebra,
                    spec: TowerSpec = TRIVIAL) -> tuple:
    """From a witness (phi, D) for g -> g2, produce (phi^-1, -phi(D)) for
    the opposite direction."""
    inv = mat_inverse(phi)
    if inv is None:
        raise ValueError("phi is singular")
    if twist is None:
        return inv, None
    dim = g2.dim
    rows = [[RatFunc.coerce(v) for v in row] for row in phi]
    out = []
    for jrow in range(dim):
        acc = spec.zero()
        for i, c in enumerate(twist.coords):
            if c and rows[jrow][i]:
                acc = acc + c * rows[jrow][i]
        out.append(-acc)
    return inv, LieElement(g2, spec, out)
