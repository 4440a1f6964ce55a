import random
from fractions import Fraction

import pytest

from dlie import (
    MismatchError,
    TowerSpec,
    check_s3_extension,
    is_cube_geometric,
    is_square_geometric,
    noncube_certify,
    parse_element,
    parse_ratfunc,
)
from dlie.field_tower.predicates import cube_root_in_base, icbrt, squarefree_part
from conftest import random_tower_element


def test_is_square_geometric_examples():
    assert is_square_geometric(parse_ratfunc("(t-1)^2*(t+2)^4*5"))
    assert not is_square_geometric(parse_ratfunc("t"))
    assert not is_square_geometric(parse_ratfunc("1-t^3"))
    assert is_square_geometric(parse_ratfunc("7"))
    assert is_square_geometric(parse_ratfunc("t^2/(t+1)^4"))
    assert not is_square_geometric(parse_ratfunc("t^2/(t+1)^3"))
    with pytest.raises(ZeroDivisionError):
        is_square_geometric(parse_ratfunc("0"))


def test_is_cube_geometric_examples():
    assert is_cube_geometric(parse_ratfunc("8*t^3"))
    assert is_cube_geometric(parse_ratfunc("(t-1)^3/(t+1)^6"))
    assert not is_cube_geometric(parse_ratfunc("t"))
    assert not is_cube_geometric(parse_ratfunc("t^3*(t-1)"))


def test_integer_helpers():
    assert icbrt(0) == 0
    assert icbrt(27) == 3
    assert icbrt(26) is None
    assert icbrt(10**18) == 10**6
    assert squarefree_part(-28) == (2, -7)
    assert squarefree_part(360) == (6, 10)


def test_cube_root_in_base():
    assert cube_root_in_base(parse_ratfunc("t^3")) == parse_ratfunc("t")
    assert cube_root_in_base(parse_ratfunc("-27*t^3/(t+1)^3")) == parse_ratfunc("-3*t/(t+1)")
    assert cube_root_in_base(parse_ratfunc("t")) is None
    assert cube_root_in_base(parse_ratfunc("2*t^3")) is None  # 2 is not a cube in Q(w)
    # (1+2w)^3 = -3 - 6w, a cube with an irrational root
    root = cube_root_in_base(parse_ratfunc("(-3 - 6*w)*t^3"))
    assert root is not None and root**3 == parse_ratfunc("(-3 - 6*w)*t^3")


def test_hand_enumeration_in_q_sqrt_minus7():
    # Independent oracle for the certificate at t0 = 2, alpha = 1 - t^3:
    # integral elements of Q(sqrt(-7)) of norm 2 are (u + v*sqrt(-7))/2 with
    # u^2 + 7 v^2 = 8; brute force over a safe box.
    sols = sorted(
        (u, v)
        for u in range(-10, 11)
        for v in range(-10, 11)
        if u * u + 7 * v * v == 8 and (u - v) % 2 == 0
    )
    assert sols == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    cubes = set()
    for u, v in sols:
        cubes.add((Fraction(u**3 + 3 * u * v * v * -7, 8),
                   Fraction(3 * u * u * v + v**3 * -7, 8)))
    assert cubes == {
        (Fraction(-5, 2), Fraction(-1, 2)),
        (Fraction(-5, 2), Fraction(1, 2)),
        (Fraction(5, 2), Fraction(-1, 2)),
        (Fraction(5, 2), Fraction(1, 2)),
    }
    # the specialized beta, 1 + sqrt(-7), is none of these cubes
    assert (Fraction(1), Fraction(1)) not in cubes


def test_example_beta_certified_at_t0_2():
    quad = TowerSpec(alpha="1-t^3")
    beta = parse_element("1+r2", quad)
    res = noncube_certify(beta)
    assert res.status == "certified"
    cert = res.certificate
    assert cert.kind == "specialization"
    assert cert.t0 == 2
    assert cert.disc == -7
    assert cert.norm == 8
    assert cert.norm_root == 2
    assert cert.candidates == 4


def test_degenerate_cube_in_base_field_reports_witness():
    quad = TowerSpec(alpha="1-t^3")
    res = noncube_certify(parse_element("t^3", quad))
    assert res.status == "cube"
    assert res.cube_root == parse_ratfunc("t")


def test_base_field_noncube_certified_without_specialization():
    quad = TowerSpec(alpha="1-t^3")
    res = noncube_certify(parse_element("t", quad))
    assert res.status == "certified"
    assert res.certificate.kind == "base-field"


def test_never_certifies_a_cube():
    rnd = random.Random(42)
    quads = [TowerSpec(alpha="1-t^3"), TowerSpec(alpha="-1-t^2")]
    produced = 0
    for k in range(20):
        quad = quads[k % 2]
        while True:
            m = random_tower_element(quad, rnd, max_deg=1, denominators=False)
            if m:
                break
        res = noncube_certify(m**3)
        assert res.status != "certified", f"false certificate for ({m})^3"
        produced += 1
    assert produced == 20


def test_no_usable_points_returns_unknown():
    # alpha = t is positive at every prime, so no specialization applies
    quad = TowerSpec(alpha="t")
    res = noncube_certify(parse_element("1+r2", quad))
    assert res.status == "unknown"
    assert res.points_tried == ()


def test_point_limit_respected():
    quad = TowerSpec(alpha="1-t^3")
    beta = parse_element("1+r2", quad) ** 3  # a cube: every point inconclusive
    res = noncube_certify(beta, limit=3)
    assert res.status == "unknown"
    assert len(res.points_tried) <= 3


def test_noncube_requires_quadratic_layer():
    with pytest.raises(MismatchError):
        noncube_certify(parse_ratfunc("t"))


def test_check_s3_extension_witness_data():
    rep = check_s3_extension("1-t^3", "1+r2", "t")
    assert rep.alpha_nonsquare
    assert rep.beta_noncube.certified
    assert rep.gamma_identity
    assert rep.tau_identity
    assert rep.overall


def test_check_s3_extension_failures():
    rep = check_s3_extension("t^2", "1+r2", "t")
    assert not rep.alpha_nonsquare
    assert not rep.overall

    # 8 t^3 != t^3: condition (c) fails exactly
    rep = check_s3_extension("1-t^3", "1+r2", "2*t")
    assert rep.alpha_nonsquare
    assert rep.gamma_identity is False
    assert not rep.overall


def test_s3_report_roundtrip():
    rep = check_s3_extension("1-t^3", "1+r2", "t")
    d = rep.to_dict()
    assert d["overall"] is True
    assert d["beta_noncube"]["certificate"]["t0"] == 2
