"""Semilinear Galois actions on g0(L) and exact fixed-point computation.

A group generator acts diagonally: a field automorphism of L/K applied to
coordinates, composed with a constant-coefficient outer automorphism of the
Lie algebra.  Both pieces are K-linear, so the fixed points form the joint
kernel of (action - id) on g0(L) viewed as a K-space of dimension
dim(g0) * [L:K]; that kernel is computed exactly by the fraction-free
elimination in `linalg`.

Outer automorphisms implemented: X -> -X^T (type A), X -> DXD with
D = diag(-1, 1, ..., 1) (type D and the order-2 triality generator), and
the order-3 triality generator acting on the seven 4-vector slices of an
8x8 skew matrix through the matrix S below.
"""

from __future__ import annotations

from fractions import Fraction

from .dlie_core import DLieAlgebra, LieElement, make_sl, make_so
from .errors import IneligibleParameterError, MismatchError
from .field_tower.ratfunc import RF_ONE, RF_ZERO
from .field_tower.scalars import ConstScalar
from .field_tower.tower import FieldAutomorphism, TowerSpec
from .linalg import KSpan, is_nonsingular_over_field, kernel_basis, rank, spans_equal
from .report import VerificationReport, timed_report

#: order-3 triality action on each of the seven 4-vectors
TRIALITY_S = tuple(
    tuple(ConstScalar(Fraction(v, 2)) for v in row)
    for row in ((-1, -1, -1, -1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))
)


def _wrap(i: int) -> int:
    return i if i <= 7 else i - 7


#: (row, col) index pairs of the seven 4-vector slices of an 8x8 skew matrix
SEVEN_PAIRS = tuple(
    (
        (0, i),
        (_wrap(i + 1), _wrap(i + 5)),
        (_wrap(i + 4), _wrap(i + 6)),
        (_wrap(i + 2), _wrap(i + 3)),
    )
    for i in range(1, 8)
)


def seven_split(x: LieElement) -> list:
    """The seven 4-vectors determining a skew 8x8 matrix (indices 0..7)."""
    if x.algebra.family != "so" or x.algebra.size != 8:
        raise MismatchError("seven_split expects an element of so8")
    mat = x.to_matrix()
    zero = x.spec.zero()
    return [[mat.get(pair, zero) for pair in pairs] for pairs in SEVEN_PAIRS]


def seven_join(algebra: DLieAlgebra, spec: TowerSpec, vectors) -> LieElement:
    """Inverse of seven_split."""
    if algebra.family != "so" or algebra.size != 8:
        raise MismatchError("seven_join expects so8")
    mat = {}
    for pairs, vec in zip(SEVEN_PAIRS, vectors):
        for (r, c), v in zip(pairs, vec):
            if v:
                mat[(r, c)] = v
                mat[(c, r)] = -v
    return LieElement.from_matrix(algebra, spec, mat)


class NegTransposeMap:
    """X -> -X^T on sl_n."""

    def apply_coords(self, algebra: DLieAlgebra, coords, zero):
        mat = algebra.coords_to_matrix(coords)
        out = {}
        for (r, c), v in mat.items():
            out[(c, r)] = -v
        return algebra.matrix_to_coords(out, zero)

    label = "neg-transpose"


class DiagConjugationMap:
    """X -> DXD with D a diagonal sign matrix."""

    def __init__(self, signs):
        self.signs = tuple(signs)

    def apply_coords(self, algebra: DLieAlgebra, coords, zero):
        mat = algebra.coords_to_matrix(coords)
        out = {}
        for (r, c), v in mat.items():
            out[(r, c)] = v if self.signs[r] == self.signs[c] else -v
        return algebra.matrix_to_coords(out, zero)

    label = "diag-conjugation"


class SevenVectorMap:
    """Linear substitution on each of the seven 4-vector slices of so8."""

    def __init__(self, matrix=TRIALITY_S):
        self.matrix = matrix

    def apply_coords(self, algebra: DLieAlgebra, coords, zero):
        mat = algebra.coords_to_matrix(coords)
        out = {}
        for pairs in SEVEN_PAIRS:
            vec = [mat.get(pair, zero) for pair in pairs]
            for row, (r, c) in zip(self.matrix, pairs):
                acc = zero
                for s, v in zip(row, vec):
                    if v and s:
                        acc = acc + v * s
                if acc:
                    out[(r, c)] = acc
                    out[(c, r)] = -acc
        return algebra.matrix_to_coords(out, zero)

    label = "seven-vector"


class Generator:
    """One group generator: outer automorphism paired with a field automorphism."""

    __slots__ = ("name", "outer", "field_aut")

    def __init__(self, name: str, outer, field_aut: FieldAutomorphism):
        self.name = name
        self.outer = outer
        self.field_aut = field_aut

    def apply(self, x: LieElement) -> LieElement:
        phi = self.field_aut
        coords = [phi(c) for c in x.coords]
        out = self.outer.apply_coords(x.algebra, coords, x.spec.zero())
        return LieElement(x.algebra, x.spec, out)

    def __repr__(self):
        return f"Generator({self.name}: {self.outer.label} x {self.field_aut.name})"


class SemilinearAction:
    """A finite group acting semilinearly on g0(L)."""

    def __init__(self, algebra: DLieAlgebra, spec: TowerSpec, group: str, generators):
        self.algebra = algebra
        self.spec = spec
        self.group = group
        self.generators = tuple(generators)

    def generator(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def relations(self) -> list:
        """Defining relations as (word, word) pairs of generator names;
        words act left-to-right innermost, i.e. (a, b) means a(b(x))."""
        if self.group == "1":
            return []
        if self.group in ("Z2", "Z3"):
            g = self.generators[0].name
            n = 2 if self.group == "Z2" else 3
            return [((g,) * n, ())]
        s, t = self.generators[0].name, self.generators[1].name
        return [((s, s, s), ()), ((t, t), ()), ((s, t), (t, s, s))]

    def apply_word(self, word, x: LieElement) -> LieElement:
        for name in reversed(word):
            x = self.generator(name).apply(x)
        return x

    def relations_hold_on(self, elements) -> bool:
        for lhs, rhs in self.relations():
            for x in elements:
                if self.apply_word(lhs, x) != self.apply_word(rhs, x):
                    return False
        return True

    def fixes(self, x: LieElement) -> bool:
        return all(g.apply(x) == x for g in self.generators)

    def fixes_all(self, elements) -> bool:
        return all(self.fixes(x) for x in elements)


def action_typeA_Z2(n: int, tower: TowerSpec) -> SemilinearAction:
    """Z2 on sl_n(L), L quadratic: X -> -conj(X)^T."""
    if n < 3:
        raise IneligibleParameterError("type A needs n >= 3 (A1 has no outer symmetry)")
    if not tower.has_quadratic:
        raise IneligibleParameterError("type A action needs a quadratic layer")
    gen = Generator("g", NegTransposeMap(), tower.automorphism("bar"))
    return SemilinearAction(make_sl(n), tower, "Z2", (gen,))


def action_typeD_Z2(m: int, tower: TowerSpec) -> SemilinearAction:
    """Z2 on so_m(L), L quadratic: X -> D conj(X) D, D = diag(-1, 1, ..., 1)."""
    if m < 8 or m % 2:
        raise IneligibleParameterError("type D action needs even m >= 8")
    if not tower.has_quadratic:
        raise IneligibleParameterError("type D action needs a quadratic layer")
    signs = (-1,) + (1,) * (m - 1)
    gen = Generator("g", DiagConjugationMap(signs), tower.automorphism("bar"))
    return SemilinearAction(make_so(m), tower, "Z2", (gen,))


def action_D4(generators, tower: TowerSpec) -> SemilinearAction:
    """Triality actions on so8(L): sigma via the seven-vector matrix S,
    tau via diag(-1,1,...,1) conjugation; named subset of {sigma, tau}."""
    wanted = tuple(generators)
    if not wanted or any(g not in ("sigma", "tau") for g in wanted):
        raise ValueError("generators must be a nonempty subset of {sigma, tau}")
    algebra = make_so(8)
    gens = []
    if "sigma" in wanted:
        gens.append(Generator("sigma", SevenVectorMap(), tower.automorphism("sigma")))
    if "tau" in wanted:
        signs = (-1,) + (1,) * 7
        gens.append(Generator("tau", DiagConjugationMap(signs), tower.automorphism("tau")))
    if len(gens) == 2:
        group = "S3"
    else:
        group = "Z3" if "sigma" in wanted else "Z2"
    return SemilinearAction(algebra, tower, group, tuple(gens))


# -- fixed points -----------------------------------------------------------


class FixedSubalgebra:
    """A K-basis of the fixed points, kept with its ambient data."""

    def __init__(self, algebra: DLieAlgebra, spec: TowerSpec, basis, construction: str):
        self.algebra = algebra
        self.spec = spec
        self.basis = tuple(basis)
        self.construction = construction
        self._span = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def k_vectors(self) -> list:
        return [b.k_vector() for b in self.basis]

    def span(self) -> KSpan:
        if self._span is None:
            self._span = KSpan(self.k_vectors(), self.algebra.dim * self.spec.degree)
        return self._span

    def contains(self, x: LieElement) -> bool:
        return self.span().contains(x.k_vector())

    def to_dict(self, verification: dict | None = None) -> dict:
        out = {
            "algebra": self.algebra.label,
            "tower": self.spec.to_dict(),
            "construction": self.construction,
            "dimension": self.dim,
            "basis": [b.to_coeff_map() for b in self.basis],
        }
        if verification is not None:
            out["verification"] = verification
        return out


def fixed_points(action: SemilinearAction) -> FixedSubalgebra:
    """Joint kernel of (generator - id) over all generators, over K."""
    algebra, spec = action.algebra, action.spec
    t = spec.degree
    ncols = algebra.dim * t
    rows_by_out: list = []
    for gen in action.generators:
        block: dict = {}
        for a in range(algebra.dim):
            for l in range(t):
                col = a * t + l
                el = LieElement(
                    algebra,
                    spec,
                    [
                        spec.monomial(*spec.monomials[l]) if b == a else spec.zero()
                        for b in range(algebra.dim)
                    ],
                )
                img = gen.apply(el).k_vector()
                img[col] = img[col] - RF_ONE
                for k, v in enumerate(img):
                    if v:
                        block.setdefault(k, {})[col] = v
        rows_by_out.extend(block.values())
    kern = kernel_basis(rows_by_out, ncols)
    basis = [LieElement.from_k_vector(algebra, spec, v) for v in kern]
    return FixedSubalgebra(algebra, spec, basis, "descent")


def fixed_points_naive(action: SemilinearAction) -> FixedSubalgebra:
    """Same kernel through the plain dense elimination; the oracle route."""
    from .linalg import kernel_basis_naive

    algebra, spec = action.algebra, action.spec
    t = spec.degree
    ncols = algebra.dim * t
    rows = [[RF_ZERO] * ncols for _ in range(ncols * len(action.generators))]
    for gi, gen in enumerate(action.generators):
        for a in range(algebra.dim):
            for l in range(t):
                col = a * t + l
                el = LieElement(
                    algebra,
                    spec,
                    [
                        spec.monomial(*spec.monomials[l]) if b == a else spec.zero()
                        for b in range(algebra.dim)
                    ],
                )
                img = gen.apply(el).k_vector()
                img[col] = img[col] - RF_ONE
                for k, v in enumerate(img):
                    if v:
                        rows[gi * ncols + k][col] = v
    kern = kernel_basis_naive([r for r in rows if any(r)], ncols)
    basis = [LieElement.from_k_vector(algebra, spec, v) for v in kern]
    return FixedSubalgebra(algebra, spec, basis, "descent-naive")


def verify_descent(form: FixedSubalgebra) -> VerificationReport:
    """The four exact checks that the basis spans a split differential Lie
    algebra over K of the right dimension: count/independence, bracket
    closure over K, closure under the entry-wise derivation, and
    invertibility over L of the basis matrix (so F tensor L = g0(L))."""
    algebra, spec = form.algebra, form.spec
    ncols = algebra.dim * spec.degree
    report = VerificationReport(
        configuration={
            "algebra": algebra.label,
            "tower": spec.to_dict(),
            "construction": form.construction,
        }
    )
    with timed_report(report):
        kvecs = form.k_vectors()
        independent = rank(kvecs, ncols) == form.dim
        report.add(
            "dimension",
            form.dim == algebra.dim and independent,
            {"expected": algebra.dim, "found": form.dim, "independent": independent},
        )
        span = form.span()
        closed = True
        for i in range(form.dim):
            for j in range(i + 1, form.dim):
                if not span.contains(form.basis[i].bracket(form.basis[j]).k_vector()):
                    closed = False
                    break
            if not closed:
                break
        report.add("bracket_closure", closed)
        dclosed = all(span.contains(b.derivative().k_vector()) for b in form.basis)
        report.add("derivation_closure", dclosed)
        if form.dim == algebra.dim:
            split = is_nonsingular_over_field([list(b.coords) for b in form.basis])
        else:
            split = False
        report.add("split", split)
    return report


# -- descent sanity: trivial torsor and induced algebras ---------------------


def _group_elements(name: str):
    """Elements and generators of the small groups, with multiplication."""
    if name == "1":
        return [0], [], lambda a, b: 0
    if name == "Z2":
        return [0, 1], [("g", 1)], lambda a, b: (a + b) % 2
    if name == "Z3":
        return [0, 1, 2], [("g", 1)], lambda a, b: (a + b) % 3
    if name == "S3":
        # permutations of (0, 1, 2) as tuples; s cyclic, t a transposition
        elements = [
            (0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0),
        ]
        mult = lambda p, q: tuple(p[q[i]] for i in range(3))
        return elements, [("s", (1, 2, 0)), ("t", (1, 0, 2))], mult
    raise ValueError(f"unknown group {name!r}")


def trivial_torsor_iso(algebra: DLieAlgebra, group: str) -> VerificationReport:
    """Maps(Gamma, g0(K)) with (gamma f)(x) = f(x gamma): invariants are the
    constant maps and evaluation at 1 identifies them with g0(K), compatibly
    with bracket and derivation."""
    elements, gens, mult = _group_elements(group)
    order = len(elements)
    index = {g: i for i, g in enumerate(elements)}
    dim0 = algebra.dim
    ncols = order * dim0

    report = VerificationReport(configuration={"algebra": algebra.label, "group": group})
    with timed_report(report):
        rows_by_out: list = []
        for _, gamma in gens:
            # basis delta_h * e_a maps to delta_{h gamma^(-1)} * e_a; build
            # (action - id) columns and transpose into rows
            block: dict = {}
            ginv_of = {h: None for h in elements}
            for h in elements:
                ginv_of[mult(h, gamma)] = h  # h*gamma -> h means image block
            for h in elements:
                target = ginv_of[h]
                for a in range(dim0):
                    col = index[h] * dim0 + a
                    out_row = index[target] * dim0 + a
                    if out_row != col:
                        block.setdefault(out_row, {})[col] = RF_ONE
                        block.setdefault(col, {})[col] = -RF_ONE
            rows_by_out.extend(block.values())
        kern = kernel_basis(rows_by_out, ncols)
        report.add("invariant_dimension", len(kern) == dim0,
                   {"expected": dim0, "found": len(kern)})
        constant = all(
            v[index[h] * dim0 + a] == v[a]
            for v in kern
            for h in elements
            for a in range(dim0)
        )
        report.add("invariants_are_constant_maps", constant)
        ident = elements[0]  # identity comes first in every listing above
        values = [v[index[ident] * dim0:index[ident] * dim0 + dim0] for v in kern]
        report.add("evaluation_is_isomorphism", rank(values, dim0) == dim0)
        zero = RF_ZERO
        # brackets and derivatives act per component, so they must send
        # constant maps to constant maps and match the evaluated values
        lie_ok = True
        der_ok = True
        for i in range(len(kern)):
            vi = kern[i]
            ev_der = [c.derivative() for c in values[i]]
            for h in elements:
                sl = slice(index[h] * dim0, (index[h] + 1) * dim0)
                if [c.derivative() for c in vi[sl]] != ev_der:
                    der_ok = False
            for j in range(len(kern)):
                vj = kern[j]
                br_ident = algebra.bracket_coords(values[i], values[j], zero)
                for h in elements:
                    sl = slice(index[h] * dim0, (index[h] + 1) * dim0)
                    if algebra.bracket_coords(vi[sl], vj[sl], zero) != br_ident:
                        lie_ok = False
        report.add("bracket_compatible", lie_ok)
        report.add("derivation_compatible", der_ok)
    return report


class InducedAlgebra:
    """Maps from a coset space into g0(L), with the twisted S3-action.

    case "a": the subgroup Z2 acts on the values over a quadratic L and the
    cosets are indexed by Z3 (the 3-cycle rotates blocks, the involution
    inverts the index and acts on values); case "b": Z3 acts on the values
    over a cubic L, cosets indexed by Z2 (the involution swaps blocks, the
    3-cycle acts on block 0 directly and on block 1 by the inverse)."""

    def __init__(self, case: str, value_action: SemilinearAction):
        if case == "a":
            if value_action.group != "Z2" or len(value_action.generators) != 1:
                raise MismatchError("case (a) needs a Z2 value action")
            self.blocks = 3
        elif case == "b":
            if value_action.group != "Z3" or len(value_action.generators) != 1:
                raise MismatchError("case (b) needs a Z3 value action")
            self.blocks = 2
        else:
            raise ValueError("case must be 'a' or 'b'")
        gen = value_action.generators[0]
        if gen.field_aut.name == "id":
            raise MismatchError("the subgroup must act non-trivially on L")
        self.case = case
        self.value_action = value_action
        self.algebra = value_action.algebra
        self.spec = value_action.spec
        self.width = self.algebra.dim * self.spec.degree
        self.dim = self.blocks * self.width

    def apply(self, which: str, parts: tuple) -> tuple:
        """The action of the S3 generator `which` in ("s", "t") on a map,
        given as a tuple of one LieElement per coset."""
        gen = self.value_action.generators[0]
        if self.case == "a":
            if which == "s":
                return (parts[1], parts[2], parts[0])
            return (gen.apply(parts[0]), gen.apply(parts[2]), gen.apply(parts[1]))
        if which == "s":
            return (gen.apply(parts[0]), gen.apply(gen.apply(parts[1])))
        return (parts[1], parts[0])

    def is_invariant(self, parts: tuple) -> bool:
        return self.apply("s", parts) == parts and self.apply("t", parts) == parts

    def _basis_map(self, b: int, a: int, l: int) -> tuple:
        algebra, spec = self.algebra, self.spec
        parts = []
        for blk in range(self.blocks):
            if blk == b:
                coords = [
                    spec.monomial(*spec.monomials[l]) if c == a else spec.zero()
                    for c in range(algebra.dim)
                ]
                parts.append(LieElement(algebra, spec, coords))
            else:
                parts.append(LieElement.zero(algebra, spec))
        return tuple(parts)

    def invariants(self) -> list:
        """K-basis of the joint fixed maps, via the same kernel machinery."""
        algebra, spec = self.algebra, self.spec
        t = spec.degree
        rows_by_out: list = []
        for which in ("s", "t"):
            block: dict = {}
            for b in range(self.blocks):
                for a in range(algebra.dim):
                    for l in range(t):
                        col = b * self.width + a * t + l
                        img = self.apply(which, self._basis_map(b, a, l))
                        vec = []
                        for part in img:
                            vec.extend(part.k_vector())
                        vec[col] = vec[col] - RF_ONE
                        for k, v in enumerate(vec):
                            if v:
                                block.setdefault(k, {})[col] = v
            rows_by_out.extend(block.values())
        return kernel_basis(rows_by_out, self.dim)


def induced_fixed_check(case: str, value_action: SemilinearAction) -> VerificationReport:
    """Invariants of Map(cosets, g0(L)) under the twisted S3-action coincide
    with g0(L)^(Gamma') computed directly; see InducedAlgebra for the two
    case shapes."""
    induced = InducedAlgebra(case, value_action)
    algebra, spec, width = induced.algebra, induced.spec, induced.width
    report = VerificationReport(
        configuration={
            "case": case,
            "algebra": algebra.label,
            "tower": spec.to_dict(),
        }
    )
    with timed_report(report):
        kern = induced.invariants()
        direct = fixed_points(value_action)
        report.add("dimension_agrees", len(kern) == direct.dim,
                   {"induced": len(kern), "direct": direct.dim})
        blockwise_equal = all(
            v[b * width:(b + 1) * width] == v[:width]
            for v in kern
            for b in range(induced.blocks)
        )
        report.add("invariants_are_constant_maps", blockwise_equal)
        values = [v[:width] for v in kern]
        report.add(
            "values_span_direct_fixed_points",
            spans_equal(values, direct.k_vectors(), width),
        )
        inv_elements = [
            tuple(
                LieElement.from_k_vector(algebra, spec, v[b * width:(b + 1) * width])
                for b in range(induced.blocks)
            )
            for v in kern
        ]
        lie_ok = all(
            induced.is_invariant(tuple(x.bracket(y) for x, y in zip(fi, fj)))
            for fi in inv_elements
            for fj in inv_elements
        )
        der_ok = all(
            induced.is_invariant(tuple(x.derivative() for x in fi))
            for fi in inv_elements
        )
        report.add("bracket_and_derivation_stay_invariant", lie_ok and der_ok)
    return report
