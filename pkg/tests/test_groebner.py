from fractions import Fraction

import pytest

from gmhodge import (
    MonomialOrder,
    MultiPoly,
    WeightedVars,
    groebner,
    is_tame,
    mult_matrix,
    normal_form,
    okbase,
)
from gmhodge.groebner import jacob, remainder
from gmhodge.gaussmanin import tpoly_det
from gmhodge.tpoly import TPoly

from conftest import poly, random_poly, seeded

ORDER = MonomialOrder((1, 1))


def GB(f_text):
    return groebner(jacob(poly(f_text)), ORDER)


def mono_names(B):
    from gmhodge.poly import monomial_string
    return [monomial_string(m, ("x", "y")) for m in B.monomials]


def test_okbase_reference_listings():
    assert mono_names(okbase(GB("x^2*y + x*y^2"))) == ["y^2", "y", "x", "1"]
    assert mono_names(okbase(GB("2*x^3 + 2*y^3"))) == ["x*y", "y", "x", "1"]
    assert mono_names(okbase(GB("x^4 + y^4"))) == [
        "x^2*y^2", "x*y^2", "x^2*y", "y^2", "x*y", "x^2", "y", "x", "1",
    ]


def test_monomial_ideal_with_cofactors():
    G = groebner(
        [MultiPoly(2, {(1, 0): 2}), MultiPoly(2, {(0, 1): 2})], ORDER
    )
    basis = {frozenset(b.terms.items()) for b in G.basis}
    assert basis == {
        frozenset({((1, 0), Fraction(1))}),
        frozenset({((0, 1), Fraction(1))}),
    }
    for b, row in zip(G.basis, G.cofactors):
        acc = MultiPoly.zero(2)
        for c, g in zip(row, G.gens):
            acc = acc + c * g
        assert acc == b


def test_standard_monomial_counts():
    assert okbase(GB("x^2*y + x*y^2")).mu == 4
    assert okbase(GB("x^4 + y^4")).mu == 9


def test_division_identity_random():
    rng = seeded(31)
    G = GB("x^2*y + x*y^2 - x*y")
    for _ in range(60):
        p = random_poly(rng, 2, 8)
        rem, cofs = normal_form(p, G)
        recon = rem
        for c, g in zip(cofs, G.gens):
            recon = recon + c * g
        assert recon == p
        # remainder lives on standard monomials and is a fixed point
        rem2, cofs2 = normal_form(rem, G)
        assert rem2 == rem
        assert all(c.is_zero() for c in cofs2)


def test_reduce_paper_remark():
    # 9x^2y - 16 f^2 y reduces to zero modulo jacob(f) for f = x^4+y^4-x
    f = poly("x^4 + y^4 - x")
    G = groebner(jacob(f), ORDER)
    p = poly("9*x^2*y") - f * f * poly("16*y")
    assert remainder(p, G).is_zero()


def test_milnor_basis_agrees_with_top_piece():
    for f_text in ("x^2*y + x*y^2 - x*y", "2*x^3 + 2*y^3 - 3*x^2 - 3*y^2",
                   "x^4 + y^4 - x"):
        f = poly(f_text)
        g = f.lasthomo(WeightedVars(("x", "y"), (1, 1)))
        Bf = okbase(groebner(jacob(f), ORDER))
        Bg = okbase(groebner(jacob(g), ORDER))
        assert Bf.monomials == Bg.monomials


def test_is_tame():
    w = WeightedVars(("x", "y"), (1, 1))
    assert is_tame(poly("x^2*y + x*y^2 - x*y"), w)
    assert not is_tame(poly("x^2*y"), w)
    w1 = WeightedVars(("x",), (1,))
    assert is_tame(poly("x^5 - 5*x", ("x",)), w1)


def test_mult_matrix_identity_and_homogeneous_zero():
    G = GB("x^2*y + x*y^2 - x*y")
    B = okbase(G)
    one = MultiPoly.constant(2, 1)
    M = mult_matrix(one, B, G)
    assert M == [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    # multiplication by a homogeneous g is zero on its own Milnor algebra
    g = poly("x^2*y + x*y^2")
    Gg = groebner(jacob(g), ORDER)
    Bg = okbase(Gg)
    Mg = mult_matrix(g, Bg, Gg)
    assert all(all(c == 0 for c in row) for row in Mg)


def test_mult_matrix_multiplicative():
    rng = seeded(32)
    G = GB("x^2*y + x*y^2 - x*y")
    B = okbase(G)
    for _ in range(15):
        h1 = random_poly(rng, 2, 3)
        h2 = random_poly(rng, 2, 3)
        M1 = mult_matrix(h1, B, G)
        M2 = mult_matrix(h2, B, G)
        M12 = mult_matrix(h1 * h2, B, G)
        prod = [
            [sum(M1[i][k] * M2[k][j] for k in range(4)) for j in range(4)]
            for i in range(4)
        ]
        assert M12 == prod


def test_char_poly_of_one_variable_multiplication():
    # multiplication by x^5-5x on C[x]/(x^4-1) has characteristic polynomial t^4-256
    w1 = WeightedVars(("x",), (1,))
    f = poly("x^5 - 5*x", ("x",))
    G = groebner(jacob(f), MonomialOrder((1,)))
    B = okbase(G)
    M = mult_matrix(f, B, G)
    mat = [
        [TPoly([-M[i][j], 1]) if i == j else TPoly([-M[i][j]]) for j in range(4)]
        for i in range(4)
    ]
    assert tpoly_det(mat) == TPoly([-256, 0, 0, 0, 1])
