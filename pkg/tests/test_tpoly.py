from fractions import Fraction

import pytest

from gmhodge import TFrac, TPoly

from conftest import seeded


def rand_tpoly(rng, maxdeg=5):
    return TPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                  for _ in range(rng.randint(0, maxdeg + 1))])


def test_basic_arithmetic():
    t = TPoly.t()
    p = t * t + 2 * t + 1
    assert p == TPoly([1, 2, 1])
    assert p - p == TPoly.zero()
    assert (t + 1) * (t - 1) == TPoly([-1, 0, 1])
    assert p.deriv() == TPoly([2, 2])
    assert p.eval(Fraction(3)) == 16


def test_divmod_and_gcd():
    p = TPoly([-1, 0, 1])          # t^2 - 1
    q, r = p.divmod(TPoly([1, 1]))  # t + 1
    assert q == TPoly([-1, 1]) and r.is_zero()
    assert p.gcd(TPoly([1, 1])) == TPoly([1, 1])
    with pytest.raises(ArithmeticError):
        TPoly([1, 1, 1]).exact_div(TPoly([1, 1]))


def test_squarefree_part():
    # (t^3 + 27/256)^3, from the quartic example's characteristic polynomial
    S = TPoly([Fraction(27, 256), 0, 0, 1]) ** 3
    assert S.squarefree_part() == TPoly([Fraction(27, 256), 0, 0, 1])
    # t^4 + t^3/27 -> t^2 + t/27
    S = TPoly([0, 0, 0, Fraction(1, 27), 1])
    assert S.squarefree_part() == TPoly([0, Fraction(1, 27), 1])
    S = TPoly([-256, 0, 0, 0, 1])
    assert S.squarefree_part() == S


def test_ring_axioms_random():
    rng = seeded(11)
    for _ in range(80):
        a, b, c = (rand_tpoly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if b:
            q, r = a.divmod(b)
            assert q * b + r == a
            assert r.is_zero() or r.degree() < b.degree()


def test_tfrac_normalization():
    x = TFrac(TPoly([0, 2]), TPoly([0, 0, 2]))  # 2t / 2t^2 = 1/t
    assert x.num == TPoly.one() and x.den == TPoly.t()
    assert TFrac(TPoly([2, 2]), TPoly([1, 1])) == TFrac(2)
    with pytest.raises(ZeroDivisionError):
        TFrac(TPoly.one(), TPoly.zero())


def test_tfrac_field_axioms_random():
    rng = seeded(12)
    for _ in range(60):
        a = TFrac(rand_tpoly(rng), rand_tpoly(rng) + TPoly([0, 0, 0, 1]))
        b = TFrac(rand_tpoly(rng), rand_tpoly(rng) + TPoly([0, 0, 0, 1]))
        c = TFrac(rand_tpoly(rng), rand_tpoly(rng) + TPoly([0, 0, 0, 1]))
        assert (a + b) * c == a * c + b * c
        assert a - a == TFrac.zero()
        if not b.is_zero():
            assert (a / b) * b == a


def test_tfrac_derivative():
    x = TFrac(TPoly.one(), TPoly.t())        # 1/t
    assert x.deriv() == TFrac(TPoly([-1]), TPoly([0, 0, 1]))
    y = TFrac(TPoly.t())
    assert y.deriv() == TFrac.one()


def test_content_and_primitive():
    p = TPoly([Fraction(2, 3), Fraction(4, 3)])
    c, prim = p.primitive()
    assert c == Fraction(2, 3) and prim == TPoly([1, 2])
    assert TPoly([-3, -6]).primitive() == (3, TPoly([-1, -2]))
