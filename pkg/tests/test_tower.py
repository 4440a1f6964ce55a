import random

import pytest

from dlie import (
    IneligibleParameterError,
    MismatchError,
    OMEGA,
    RatFunc,
    TowerSpec,
    parse_element,
    parse_ratfunc,
)
from conftest import random_nonzero, random_tower_element

ALL_SPECS = [
    TowerSpec(),
    TowerSpec(alpha="t"),
    TowerSpec(alpha="1-t^3"),
    TowerSpec(beta="t"),
    TowerSpec(alpha="1-t^3", beta="1+r2", gamma="t"),
]


def test_defining_relations():
    quad = TowerSpec(alpha="1-t^3")
    assert quad.r2() * quad.r2() == quad.from_base(parse_ratfunc("1-t^3"))
    cub = TowerSpec(beta="t")
    assert cub.r3() ** 3 == cub.t()
    full = TowerSpec(alpha="1-t^3", beta="1+r2", gamma="t")
    assert full.r3() ** 3 == full.one() + full.r2()


def test_product_of_conjugate_binomials():
    # (1 + r2)(1 - r2) = 1 - alpha = t^3 for alpha = 1 - t^3
    spec = TowerSpec(alpha="1-t^3")
    x = spec.one() + spec.r2()
    y = spec.one() - spec.r2()
    assert x * y == spec.from_base(parse_ratfunc("t^3"))


def test_inverse_of_r2():
    spec = TowerSpec(alpha="t")
    assert spec.r2().inverse() == spec.monomial(1, 0, parse_ratfunc("1/t"))


def test_field_axioms_randomized():
    rnd = random.Random(10)
    for spec in ALL_SPECS:
        for _ in range(6):
            x = random_tower_element(spec, rnd, max_deg=1)
            y = random_tower_element(spec, rnd, max_deg=1)
            z = random_tower_element(spec, rnd, max_deg=1)
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
        for _ in range(4):
            x = random_nonzero(spec, rnd, max_deg=1)
            assert x * x.inverse() == spec.one()


def test_leibniz_randomized():
    rnd = random.Random(11)
    for spec in ALL_SPECS:
        for _ in range(6):
            x = random_tower_element(spec, rnd, max_deg=1)
            y = random_tower_element(spec, rnd, max_deg=1)
            assert (x * y).derivative() == x.derivative() * y + x * y.derivative()


def test_derivative_examples():
    spec = TowerSpec(alpha="1-t^3")
    # implicit differentiation of u^2 = alpha
    assert spec.r2().derivative() == spec.monomial(
        1, 0, parse_ratfunc("(-3*t^2)/(2*(1-t^3))"))
    assert (spec.from_base(RatFunc.const(OMEGA)) * spec.t()).derivative() == \
        spec.from_base(RatFunc.const(OMEGA))
    cub = TowerSpec(beta="t")
    assert cub.r3().derivative() == cub.monomial(0, 1, parse_ratfunc("1/(3*t)"))


def test_automorphism_examples(s3_tower):
    quad = TowerSpec(alpha="t")
    bar = quad.automorphism("bar")
    assert bar(quad.one() + quad.r2()) == quad.one() - quad.r2()

    cub = TowerSpec(beta="t")
    sig = cub.automorphism("sigma")
    assert sig(cub.r3()) == cub.r3() * RatFunc.const(OMEGA)

    tau = s3_tower.automorphism("tau")
    r3 = s3_tower.r3()
    beta = s3_tower.one() + s3_tower.r2()
    gamma = s3_tower.t()
    # tau(r3) = (gamma / beta) * r3^2 on the monomial basis
    assert tau(r3) == (gamma / beta) * (r3 * r3)


def test_automorphisms_are_field_maps_and_commute_with_derivation(s3_tower):
    rnd = random.Random(12)
    for spec in ALL_SPECS:
        for name in spec.automorphism_names:
            phi = spec.automorphism(name)
            for _ in range(5):
                x = random_tower_element(spec, rnd, max_deg=1)
                y = random_tower_element(spec, rnd, max_deg=1)
                assert phi(x * y) == phi(x) * phi(y)
                assert phi(x + y) == phi(x) + phi(y)
                assert phi(x.derivative()) == phi(x).derivative()
            k_elem = spec.from_base(parse_ratfunc("(t^2-3)/(t+5)"))
            assert phi(k_elem) == k_elem


def test_group_laws_on_20_random_elements(s3_tower):
    rnd = random.Random(13)
    quad = TowerSpec(alpha="t")
    bar = quad.automorphism("bar")
    for _ in range(20):
        x = random_tower_element(quad, rnd)
        assert bar(bar(x)) == x
    cub = TowerSpec(beta="t")
    sig = cub.automorphism("sigma")
    for _ in range(20):
        x = random_tower_element(cub, rnd)
        assert sig(sig(sig(x))) == x
    sigma = s3_tower.automorphism("sigma")
    tau = s3_tower.automorphism("tau")
    for _ in range(20):
        x = random_tower_element(s3_tower, rnd, max_deg=1)
        assert tau(tau(x)) == x
        assert sigma(sigma(sigma(x))) == x
        assert sigma(tau(x)) == tau(sigma(sigma(x)))


def test_norm_consistency_quadratic():
    rnd = random.Random(14)
    quad = TowerSpec(alpha="1-t^3")
    bar = quad.automorphism("bar")
    for _ in range(20):
        x = random_tower_element(quad, rnd)
        n = x * bar(x)
        assert not n.coeff(1, 0)


def test_spec_validation():
    with pytest.raises(IneligibleParameterError):
        TowerSpec(alpha="t^2")
    with pytest.raises(IneligibleParameterError):
        TowerSpec(alpha="9*(t+1)^2")  # constants count as squares
    TowerSpec(alpha="(1-t^3)*(t-1)^2")  # square factor times a non-square is fine
    TowerSpec(alpha="4*t")
    with pytest.raises(IneligibleParameterError):
        TowerSpec(beta="t^3")
    with pytest.raises(IneligibleParameterError):
        TowerSpec(beta="8*t^3")  # geometric cube
    with pytest.raises(IneligibleParameterError):
        TowerSpec(alpha="1-t^3", beta="1+r2", gamma="2*t")
    with pytest.raises(IneligibleParameterError):
        TowerSpec(gamma="t")


def test_automorphism_availability(s3_tower):
    assert TowerSpec().automorphism_names == ("id",)
    assert TowerSpec(alpha="t").automorphism_names == ("id", "bar")
    assert TowerSpec(beta="t").automorphism_names == ("id", "sigma")
    # beta outside K kills bar; gamma brings tau
    assert s3_tower.automorphism_names == ("id", "sigma", "tau")
    with pytest.raises(MismatchError):
        s3_tower.automorphism("bar")
    # both layers with beta in K: bar survives, no tau without gamma
    both = TowerSpec(alpha="t^2-2", beta="t")
    assert both.automorphism_names == ("id", "bar", "sigma")


def test_mismatched_spec_rejected():
    a = TowerSpec(alpha="t")
    b = TowerSpec(alpha="t+1")
    with pytest.raises(MismatchError):
        a.r2() + b.r2()


def test_zero_division():
    spec = TowerSpec(alpha="t")
    with pytest.raises(ZeroDivisionError):
        spec.zero().inverse()


def test_parse_element_and_str_roundtrip(s3_tower):
    x = parse_element("(1 + r2) * r3^2 - t * r3 + 2/(t+1)", s3_tower)
    y = parse_element(str(x), s3_tower)
    assert x == y


def test_coordinates_roundtrip(s3_tower):
    rnd = random.Random(15)
    x = random_tower_element(s3_tower, rnd)
    assert s3_tower.from_coordinates(x.coordinates()) == x
    assert s3_tower.monomial_labels == ("1", "r2", "r3", "r3^2", "r2*r3", "r2*r3^2")
