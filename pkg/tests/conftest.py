import random

import pytest

from monobasis import GF, MultiPoly, PolySystem, monomials_of_degree

F101 = GF(101)


@pytest.fixture
def rng():
    return random.Random(20260826)


def random_poly(rng, field, nvars, degree, homogeneous=False, monic_pure_power=None):
    """Random dense polynomial of the given (exact) degree.

    With monic_pure_power=i the coefficient of x_{i+1}^degree is forced to 1,
    which keeps the leading forms a regular sequence almost surely over F_p.
    """
    terms = {}
    degs = [degree] if homogeneous else range(degree + 1)
    for d in degs:
        for m in monomials_of_degree(nvars, d):
            terms[m] = field.of(rng.randrange(field.p))
    if monic_pure_power is not None:
        pure = tuple(degree if j == monic_pure_power else 0 for j in range(nvars))
        terms[pure] = field.one
    return MultiPoly(field, nvars, terms)


def random_system(rng, field, degrees, homogeneous=False):
    n = len(degrees)
    polys = [
        random_poly(rng, field, n, d, homogeneous=homogeneous, monic_pure_power=i)
        for i, d in enumerate(degrees)
    ]
    return PolySystem(polys, tuple(degrees))
