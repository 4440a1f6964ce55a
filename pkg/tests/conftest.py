import random

import pytest

from dlie import RatFunc, TowerSpec
from dlie.field_tower.poly import Poly


@pytest.fixture(scope="session")
def quad_t():
    return TowerSpec(alpha="t")

@pytest.fixture(scope="session")
def quad_cubic_alpha():
    return TowerSpec(alpha="1-t^3")

@pytest.fixture(scope="session")
def cubic_t():
    return TowerSpec(beta="t")

@pytest.fixture(scope="session")
def s3_tower():
    return TowerSpec(alpha="1-t^3", beta="1+r2", gamma="t", beta_certified=True)


def random_ratfunc(rnd: random.Random, max_deg=2, denominators=True) -> RatFunc:
    num = Poly([rnd.randint(-4, 4) for _ in range(rnd.randint(1, max_deg + 1))])
    if denominators and rnd.random() < 0.4:
        den = Poly([rnd.randint(1, 3), 1])
    else:
        den = Poly([1])
    return RatFunc(num, den)


def random_tower_element(spec: TowerSpec, rnd: random.Random, max_deg=2, denominators=True):
    coords = {}
    for mono in spec.monomials:
        coords[mono] = random_ratfunc(rnd, max_deg, denominators)
    return spec.element(coords)


def random_nonzero(spec, rnd, **kw):
    while True:
        x = random_tower_element(spec, rnd, **kw)
        if x:
            return x
