"""Exact linear algebra over K = Q(w)(t) and over tower fields.

The workhorse is a fraction-free row echelon over the polynomial ring k[t]:
rows are sparse {column: Poly} dicts, scaled to polynomials by clearing
denominators, updated by cross-multiplication (pivot*row - entry*pivot_row)
so entries stay polynomial, and stripped of their polynomial content after
every update.  Pivots are chosen by minimal entry degree.  Kernels come out
of back-substitution over K and are normalized to a reproducible form:
scale the first nonzero coordinate to 1, clear denominators, remove content
(the first nonzero entry is then the monic lcm/content quotient).

A deliberately plain dense elimination over rational functions
(`kernel_basis_naive`) serves as an independent oracle for the
fraction-free path.
"""

from __future__ import annotations

from fractions import Fraction

from .field_tower.poly import P_ONE, gcd as poly_gcd, lcm as poly_lcm
from .field_tower.ratfunc import RF_ONE, RF_ZERO, RatFunc

Row = dict


def row_from_ratfuncs(vec) -> Row:
    """Sparse polynomial row proportional to the given RatFunc vector."""
    den = P_ONE
    for v in vec:
        if v:
            den = poly_lcm(den, v.den)
    row: Row = {}
    for k, v in enumerate(vec):
        if v:
            row[k] = v.num * den.exact_div(v.den)
    return _content_strip(row)


def _content_strip(row: Row) -> Row:
    if not row:
        return row
    vals = sorted(row.values(), key=lambda p: p.degree)
    g = vals[0]
    for v in vals[1:]:
        if g.degree == 0:
            break
        g = poly_gcd(g, v)
    if g.degree > 0:
        row = {k: v.exact_div(g) for k, v in row.items()}
    return _rational_rescale(row)


def _rational_rescale(row: Row) -> Row:
    """Scale a polynomial row so coefficients are integers with gcd 1;
    keeps Fraction sizes from compounding across elimination steps."""
    num_gcd = 0
    den_lcm = 1
    for v in row.values():
        for c in v.coeffs:
            for q in (c.a, c.b):
                if q:
                    num_gcd = _int_gcd(num_gcd, q.numerator)
                    den_lcm = den_lcm * q.denominator // _int_gcd(den_lcm, q.denominator)
    factor = Fraction(den_lcm, num_gcd if num_gcd else 1)
    if factor == 1:
        return row
    return {k: v * factor for k, v in row.items()}


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _cross_eliminate(row: Row, col: int, pivot_row: Row) -> Row:
    """pivot*row - row[col]*pivot_row, content-stripped."""
    q = row.pop(col)
    p = pivot_row[col]
    new: Row = {k: v * p for k, v in row.items()}
    for k, v in pivot_row.items():
        if k == col:
            continue
        w = q * v
        if k in new:
            s = new[k] - w
            if s:
                new[k] = s
            else:
                del new[k]
        else:
            new[k] = -w
    return _content_strip(new)


def poly_echelon(rows: list, ncols: int) -> tuple[dict, list]:
    """Fraction-free echelon; returns ({pivot_col: row}, pivot_cols).

    Every surviving pivot row has support only at columns >= its pivot
    column, because non-pivot rows are reduced at every step."""
    work = [_content_strip(dict(r)) for r in rows if r]
    pivot_at: dict = {}
    pivot_cols: list = []
    for col in range(ncols):
        cands = [i for i, r in enumerate(work) if r is not None and col in r]
        if not cands:
            continue
        best = min(cands, key=lambda i: work[i][col].degree)
        pivot_row = work[best]
        work[best] = None
        for i in cands:
            if i == best:
                continue
            reduced = _cross_eliminate(work[i], col, pivot_row)
            work[i] = reduced if reduced else None
        pivot_at[col] = pivot_row
        pivot_cols.append(col)
    return pivot_at, pivot_cols


def normalize_kvector(vec: list) -> list:
    """Canonical representative of a K-line: denominators cleared, polynomial
    content removed, and the first nonzero coordinate made monic.  This is
    the vector with first nonzero coordinate 1, rescaled into k[t]."""
    nz = next((i for i, v in enumerate(vec) if v), None)
    if nz is None:
        return [RF_ZERO] * len(vec)
    den = P_ONE
    for v in vec:
        if v:
            den = poly_lcm(den, v.den)
    polys = {k: v.num * den.exact_div(v.den) for k, v in enumerate(vec) if v}
    vals = sorted(polys.values(), key=lambda p: p.degree)
    g = vals[0]
    for v in vals[1:]:
        if g.degree == 0:
            break
        g = poly_gcd(g, v)
    if g.degree > 0:
        polys = {k: v.exact_div(g) for k, v in polys.items()}
    lead = polys[nz].leading()
    if lead != 1:
        inv = lead.inverse()
        polys = {k: v * inv for k, v in polys.items()}
    return [RatFunc(polys[k]) if k in polys else RF_ZERO for k in range(len(vec))]


def _kernel_from_echelon(pivot_at: dict, pivot_cols: list, ncols: int) -> list:
    free_cols = [c for c in range(ncols) if c not in pivot_at]
    basis = []
    for f in free_cols:
        # fraction-free back-substitution: instead of dividing by the pivot,
        # scale the whole partial solution by it, then strip content
        x: Row = {f: P_ONE}
        for pc in reversed(pivot_cols):
            row = pivot_at[pc]
            s = None
            for k, v in row.items():
                if k > pc and k in x:
                    term = v * x[k]
                    s = term if s is None else s + term
            if s is None or not s:
                continue
            p = row[pc]
            x = {k: v * p for k, v in x.items()}
            x[pc] = -s
            x = _content_strip(x)
        basis.append(
            normalize_kvector(
                [RatFunc(x[k]) if k in x else RF_ZERO for k in range(ncols)]
            )
        )
    return basis


def kernel_basis(rows: list, ncols: int) -> list:
    """Right kernel of a matrix given as sparse rows of RatFunc (or Poly)
    entries; vectors come back normalized, one per free column."""
    prows = []
    for r in rows:
        if isinstance(r, dict):
            vec = [RF_ZERO] * ncols
            for k, v in r.items():
                vec[k] = RatFunc.coerce(v)
            prows.append(row_from_ratfuncs(vec))
        else:
            prows.append(row_from_ratfuncs([RatFunc.coerce(v) for v in r]))
    pivot_at, pivot_cols = poly_echelon([r for r in prows if r], ncols)
    return _kernel_from_echelon(pivot_at, pivot_cols, ncols)


def kernel_basis_naive(rows: list, ncols: int) -> list:
    """Dense Gaussian elimination over K with no fraction-free machinery and
    first-nonzero pivoting; the independent oracle for kernel_basis."""
    mat = []
    for r in rows:
        if isinstance(r, dict):
            vec = [RF_ZERO] * ncols
            for k, v in r.items():
                vec[k] = RatFunc.coerce(v)
        else:
            vec = [RatFunc.coerce(v) for v in r]
        mat.append(vec)
    pivot_cols = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][col].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivot_cols.append(col)
        r += 1
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        vec = [RF_ZERO] * ncols
        vec[f] = RF_ONE
        for i, pc in enumerate(pivot_cols):
            if mat[i][f]:
                vec[pc] = -mat[i][f]
        basis.append(normalize_kvector(vec))
    return basis


class KSpan:
    """Echelonized span of K-vectors with exact membership tests."""

    def __init__(self, vectors: list, ncols: int):
        self.ncols = ncols
        rows = [row_from_ratfuncs(v) for v in vectors]
        self.pivot_at, self.pivot_cols = poly_echelon([r for r in rows if r], ncols)

    @property
    def dim(self) -> int:
        return len(self.pivot_cols)

    def _reduce(self, row: Row) -> Row:
        while row:
            col = min(row)
            pivot = self.pivot_at.get(col)
            if pivot is None:
                return row
            row = _cross_eliminate(row, col, pivot)
        return row

    def contains(self, vec: list) -> bool:
        return not self._reduce(row_from_ratfuncs(vec))

    def contains_all(self, vectors: list) -> bool:
        return all(self.contains(v) for v in vectors)


def rank(vectors: list, ncols: int) -> int:
    rows = [row_from_ratfuncs(v) for v in vectors]
    _, pivot_cols = poly_echelon([r for r in rows if r], ncols)
    return len(pivot_cols)


def spans_equal(vectors_a: list, vectors_b: list, ncols: int) -> bool:
    """Double inclusion via exact rank/membership computations."""
    span_a = KSpan(vectors_a, ncols)
    span_b = KSpan(vectors_b, ncols)
    if span_a.dim != span_b.dim:
        return False
    return span_a.contains_all(vectors_b) and span_b.contains_all(vectors_a)


def mat_inverse(rows: list) -> list | None:
    """Exact inverse of a square RatFunc matrix, or None if singular."""
    n = len(rows)
    mat = [[RatFunc.coerce(v) for v in r] for r in rows]
    if any(len(r) != n for r in mat):
        raise ValueError("square matrix expected")
    aug = [row + [RF_ONE if i == j else RF_ZERO for j in range(n)] for i, row in enumerate(mat)]
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if aug[i][col]), None)
        if piv is None:
            return None
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][col].inverse()
        aug[r] = [v * inv for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        r += 1
    return [row[n:] for row in aug]


def is_nonsingular_over_field(rows: list) -> bool:
    """Rank test for a square matrix over any exact field elements
    (duck-typed: truthiness, -, *, /)."""
    n = len(rows)
    mat = [list(r) for r in rows]
    for col in range(n):
        piv = next((i for i in range(col, n) if mat[i][col]), None)
        if piv is None:
            return False
        mat[col], mat[piv] = mat[piv], mat[col]
        pe = mat[col][col]
        for i in range(col + 1, n):
            v = mat[i][col]
            if v:
                f = v / pe
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    return True
