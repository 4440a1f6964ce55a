import pytest

from dlie import (
    IneligibleParameterError,
    LieElement,
    MismatchError,
    TowerSpec,
    action_D4,
    basis_D4_form,
    basis_typeA_form,
    basis_typeD_form,
    eigen_check,
    fixed_points,
    make_so,
    subspace_equal,
    theta_subspace,
    vector_in_subspace,
    verify_descent,
    xi_subspace,
)
from dlie.explicit_forms import cbrt_beta_conj


def test_typeA_counts(quad_t):
    assert basis_typeA_form(3, quad_t).dim == 8
    assert basis_typeA_form(4, quad_t).dim == 15
    with pytest.raises(IneligibleParameterError):
        basis_typeA_form(2, quad_t)


def test_typeA_contains_sym_r2(quad_t):
    form = basis_typeA_form(3, quad_t)
    g = form.algebra
    sym = LieElement.from_matrix(g, quad_t, {(0, 1): quad_t.r2(), (1, 0): quad_t.r2()})
    assert form.contains(sym)
    assert not form.contains(LieElement.from_matrix(
        g, quad_t, {(0, 1): quad_t.one(), (1, 0): quad_t.one()}))


def test_typeD_counts(quad_t):
    assert basis_typeD_form(8, quad_t).dim == 28
    assert basis_typeD_form(10, quad_t).dim == 45
    with pytest.raises(IneligibleParameterError):
        basis_typeD_form(9, quad_t)


def test_typeD_block_shape(quad_t):
    form = basis_typeD_form(8, quad_t)
    for b in form.basis:
        mat = b.to_matrix()
        for (r, c), v in mat.items():
            if r == 0 or c == 0:
                # first row/column entries live in K * r2
                assert not v.coeff(0, 0)
            else:
                assert not v.coeff(1, 0)


def test_eigen_check_report():
    rep = eigen_check()
    assert rep.overall
    names = [c.name for c in rep.checks]
    assert "S_cubed_is_identity" in names
    assert "eigenvectors_independent" in names


def test_xi_generators_fixed_by_sigma(cubic_t):
    g = make_so(8)
    act = action_D4(["sigma"], cubic_t)
    zero = [cubic_t.zero()] * 4
    for i in range(7):
        for gen in xi_subspace(cubic_t):
            vectors = [list(zero) for _ in range(7)]
            vectors[i] = list(gen)
            from dlie import seven_join
            x = seven_join(g, cubic_t, vectors)
            assert act.fixes(x)


def test_theta_generators_fixed_by_sigma_and_tau(s3_tower):
    g = make_so(8)
    act = action_D4(["sigma", "tau"], s3_tower)
    zero = [s3_tower.zero()] * 4
    for i in (0, 3, 6):
        for gen in theta_subspace(s3_tower):
            vectors = [list(zero) for _ in range(7)]
            vectors[i] = list(gen)
            from dlie import seven_join
            x = seven_join(g, s3_tower, vectors)
            assert act.fixes(x)


def test_cbrt_beta_conj_cubes_to_conjugate(s3_tower):
    r3bar = cbrt_beta_conj(s3_tower)
    beta_bar = s3_tower.one() - s3_tower.r2()  # conj(1 + r2)
    assert r3bar**3 == beta_bar
    tau = s3_tower.automorphism("tau")
    assert tau(s3_tower.r3()) == r3bar
    assert tau(r3bar) == s3_tower.r3()


def test_D4_form_counts(cubic_t, s3_tower):
    assert basis_D4_form("Z3", cubic_t).dim == 28
    assert basis_D4_form("S3", s3_tower).dim == 28
    with pytest.raises(ValueError):
        basis_D4_form("Z2", cubic_t)
    with pytest.raises(IneligibleParameterError):
        basis_D4_form("S3", cubic_t)  # no gamma on a cubic-only tower


def test_D4_z3_form_equals_fixed_points(cubic_t):
    form = basis_D4_form("Z3", cubic_t)
    computed = fixed_points(action_D4(["sigma"], cubic_t))
    assert subspace_equal(form, computed)
    assert verify_descent(form).overall


def test_membership_predicate(cubic_t):
    gens = xi_subspace(cubic_t)
    t = cubic_t.t()
    member = [a * t + b for a, b in zip(gens[0], gens[2])]
    assert vector_in_subspace(member, gens, cubic_t)
    # K-spans are not L-spans: r3 times a generator leaves the subspace
    r3 = cubic_t.r3()
    assert not vector_in_subspace([v * r3 for v in gens[2]], gens, cubic_t)
    outsider = [cubic_t.one(), cubic_t.zero(), cubic_t.zero(), cubic_t.zero()]
    assert not vector_in_subspace(outsider, gens, cubic_t)


def test_subspace_equal_reflexive_and_checks_ambient(quad_t):
    a3 = basis_typeA_form(3, quad_t)
    assert subspace_equal(a3, a3)
    d8 = basis_typeD_form(8, quad_t)
    with pytest.raises(MismatchError):
        subspace_equal(a3, d8)
    other_tower = TowerSpec(alpha="t+1")
    with pytest.raises(MismatchError):
        subspace_equal(a3, basis_typeA_form(3, other_tower))


def test_explicit_forms_verify_descent(quad_t, cubic_t):
    for form in (basis_typeA_form(3, quad_t), basis_typeD_form(8, quad_t),
                 basis_D4_form("Z3", cubic_t)):
        rep = verify_descent(form)
        assert rep.overall, form.algebra.label
