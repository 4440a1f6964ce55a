from fractions import Fraction

from dlie import OMEGA, SQRT_MINUS_3, ConstScalar


def test_omega_is_primitive_cube_root():
    assert OMEGA**3 == ConstScalar(1)
    assert OMEGA != ConstScalar(1)
    assert OMEGA * OMEGA == -(ConstScalar(1)) - OMEGA


def test_sqrt_minus_three():
    assert SQRT_MINUS_3 == ConstScalar(1, 2)
    assert SQRT_MINUS_3 * SQRT_MINUS_3 == ConstScalar(-3)


def test_field_axioms_sample():
    xs = [ConstScalar(Fraction(a, b), Fraction(c, 2))
          for a in (-2, 1, 3) for b in (1, 2) for c in (-1, 0, 2)]
    for x in xs:
        for y in xs:
            assert x + y == y + x
            assert x * y == y * x
            for z in xs:
                assert (x + y) * z == x * z + y * z
        if x:
            assert x * x.inverse() == ConstScalar(1)


def test_norm_and_conj():
    x = ConstScalar(Fraction(3, 2), Fraction(-5, 7))
    assert x.norm() == x.a * x.a - x.a * x.b + x.b * x.b
    assert x * x.conj() == ConstScalar(x.norm())


def test_rational_interop():
    assert ConstScalar(2) + 3 == ConstScalar(5)
    assert 2 * OMEGA == ConstScalar(0, 2)
    assert (ConstScalar(1) / ConstScalar(2)).as_rational() == Fraction(1, 2)


def test_str_forms():
    assert str(ConstScalar(1, 2)) == "1+2*w"
    assert str(OMEGA) == "w"
    assert str(-OMEGA) == "-w"
    assert str(ConstScalar(Fraction(1, 2))) == "1/2"
