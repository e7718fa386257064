import random

import pytest

from kleinfour.ascurve import DegenerateCover
from kleinfour.klein4 import InvalidCover, KleinFourCover
from kleinfour.poly import Poly
from kleinfour.ratfun import RatFun


def rand_poly(rng, field, max_deg):
    n = rng.randrange(max_deg + 1) + 1
    return Poly.make(field, [rng.randrange(field.order) for _ in range(n)])


def rand_ratfun(rng, field, max_deg=8):
    num = rand_poly(rng, field, max_deg)
    den = rand_poly(rng, field, max_deg)
    if not den.coeffs:
        den = Poly.one(field)
    return RatFun(num, den)


def rand_cover(rng, field, max_deg=5):
    while True:
        try:
            return KleinFourCover(rand_ratfun(rng, field, max_deg),
                                  rand_ratfun(rng, field, max_deg))
        except (InvalidCover, DegenerateCover):
            continue


@pytest.fixture
def rng():
    return random.Random(0)
