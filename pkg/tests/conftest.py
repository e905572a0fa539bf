import random
from fractions import Fraction

import pytest

from gmhodge import MultiPoly, WeightedVars, make_context
from gmhodge.parser import parse_poly


def poly(text, names=("x", "y")):
    return parse_poly(text, names)


@pytest.fixture(scope="session")
def ex1():
    """f = x^5 - 5x, one variable."""
    w = WeightedVars(("x",), (1,))
    return make_context(poly("x^5 - 5*x", ("x",)), w)


@pytest.fixture(scope="session")
def ex2():
    """f = xy(x+y-1)."""
    w = WeightedVars(("x", "y"), (1, 1))
    return make_context(poly("x^2*y + x*y^2 - x*y"), w)


@pytest.fixture(scope="session")
def ex3():
    """f = 2(x^3+y^3) - 3(x^2+y^2)."""
    w = WeightedVars(("x", "y"), (1, 1))
    return make_context(poly("2*x^3 + 2*y^3 - 3*x^2 - 3*y^2"), w)


@pytest.fixture(scope="session")
def ex4():
    """f = x^4 + y^4 - x."""
    w = WeightedVars(("x", "y"), (1, 1))
    return make_context(poly("x^4 + y^4 - x"), w)


@pytest.fixture(scope="session")
def all_contexts(ex1, ex2, ex3, ex4):
    return [ex1, ex2, ex3, ex4]


def random_poly(rng, nvars, max_wdeg, alpha=None, nterms=6):
    """Random nonzero polynomial of weighted degree <= max_wdeg."""
    alpha = alpha or (1,) * nvars
    terms = {}
    for _ in range(nterms):
        while True:
            e = tuple(rng.randint(0, max_wdeg) for _ in range(nvars))
            if sum(a * b for a, b in zip(e, alpha)) <= max_wdeg:
                break
        terms[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    p = MultiPoly(nvars, terms)
    if p.is_zero():
        p = MultiPoly.constant(nvars, 1)
    return p


def seeded(seed=20260809):
    return random.Random(seed)
