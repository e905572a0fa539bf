from fractions import Fraction

import pytest

from gmhodge import (
    FormN,
    MultiPoly,
    NotTame,
    TPoly,
    WeightedVars,
    make_context,
    n0_reduce_prime,
    n0_reduce_second,
    reduce_n,
    reduce_n_homog,
    reduce_top,
    reduce_top_homog,
)

from conftest import poly, random_poly, seeded

W11 = WeightedVars(("x", "y"), (1, 1))


def test_context_examples(ex1, ex2):
    assert ex2.d == 3 and ex2.mu == 4
    assert ex2.A == [Fraction(4, 3), Fraction(1), Fraction(1), Fraction(2, 3)]
    assert ex1.A == [Fraction(4, 5), Fraction(3, 5), Fraction(2, 5), Fraction(1, 5)]
    # A_beta = wdeg(x^{beta+1}) / d
    for i, m in enumerate(ex2.basis.monomials):
        shifted = tuple(e + 1 for e in m)
        assert ex2.A[i] == Fraction(ex2.w.wdeg_exps(shifted), ex2.d)
    for a in ex2.A:
        assert 0 < a < ex2.n + 1


def test_context_rejects_nontame():
    with pytest.raises(NotTame):
        make_context(poly("x^2*y"), W11)
    with pytest.raises(NotTame):
        make_context(poly("3"), W11)


def test_top_homog_unit_vectors(ex2):
    gctx = make_context(ex2.g, W11)
    for i, m in enumerate(gctx.basis.monomials):
        r = reduce_top_homog(MultiPoly.monomial(m), gctx)
        assert r.coeffs[i] == TPoly.one()
        assert all(r.coeffs[j].is_zero() for j in range(gctx.mu) if j != i)
        assert r.xi.is_zero()


def test_top_homog_circle():
    # g = x^2 + y^2, P = x^2: coefficient of [dx dy] is t/2
    ctx = make_context(poly("x^2 + y^2"), W11)
    r = reduce_top_homog(poly("x^2"), ctx)
    assert r.coeffs == [TPoly([0, Fraction(1, 2)])]
    assert r.verify(ctx, poly("x^2"))


def test_top_homog_g_itself(ex2):
    gctx = make_context(ex2.g, W11)
    r = reduce_top_homog(gctx.g, gctx)
    assert [p.coeffs for p in r.coeffs] == [(), (), (), (0, 1)]
    assert r.verify(gctx, gctx.g)


def test_n_homog_basis_and_multiplication(ex2):
    gctx = make_context(ex2.g, W11)
    for i in range(gctx.mu):
        eta_i = gctx.eta_beta(i)
        r = reduce_n_homog(eta_i, gctx)
        assert r.coeffs[i] == TPoly.one()
        assert all(r.coeffs[j].is_zero() for j in range(gctx.mu) if j != i)
        # g * eta_beta is t . eta_beta by the module structure
        r2 = reduce_n_homog(eta_i.scale_poly(gctx.g), gctx)
        assert r2.coeffs[i] == TPoly.t()
        assert r2.verify(gctx, eta_i.scale_poly(gctx.g))


def test_n_homog_exact_forms_die(ex2):
    from gmhodge.forms import FormNm1, dform
    gctx = make_context(ex2.g, W11)
    rng = seeded(41)
    for _ in range(10):
        xi = FormNm1(2)
        xi.add_term(0, 1, random_poly(rng, 2, 5))
        omega = dform(xi)
        r = reduce_n_homog(omega, gctx)
        assert all(p.is_zero() for p in r.coeffs)


def test_reduce_top_expand_identity(ex2, ex3, ex4):
    rng = seeded(42)
    for ctx in (ex2, ex3, ex4):
        for _ in range(20):
            P = random_poly(rng, 2, 3 * ctx.d)
            r = reduce_top(P, ctx)
            assert r.verify(ctx, P)
            bound = Fraction(P.wdeg(ctx.w) + sum(ctx.w.alpha), ctx.d)
            for i, p in enumerate(r.coeffs):
                if p:
                    assert p.degree() <= bound - ctx.A[i]


def test_reduce_top_paper_row(ex4):
    # the class 9[x^2 y] - 16 t^2 [y] from the quartic example
    r1 = reduce_top(poly("9*x^2*y"), ex4)
    r2 = reduce_top(poly("y"), ex4)
    t2 = TPoly([0, 0, 16])
    combined = [a - t2 * b for a, b in zip(r1.coeffs, r2.coeffs)]
    expected = [TPoly.zero()] * 9
    expected[2] = TPoly([9])        # position of x^2 y
    expected[6] = TPoly([0, 0, -16])  # position of y
    assert combined == expected


def test_reduce_top_linearity_in_f(ex2):
    rng = seeded(43)
    for _ in range(10):
        P = random_poly(rng, 2, 6)
        r1 = reduce_top(ex2.f * P, ex2)
        r2 = reduce_top(P, ex2)
        assert r1.coeffs == [p.shift(1) for p in r2.coeffs]


def test_reduce_n_expand_identity(ex2, ex3, ex4):
    rng = seeded(44)
    for ctx in (ex2, ex3, ex4):
        for _ in range(12):
            omega = FormN([random_poly(rng, 2, 2 * ctx.d),
                           random_poly(rng, 2, 2 * ctx.d)])
            r = reduce_n(omega, ctx)
            assert r.verify(ctx, omega)
            degw = omega.wdeg(ctx.w)
            if degw is not None:
                bound = Fraction(degw, ctx.d)
                for i, p in enumerate(r.coeffs):
                    if p:
                        assert p.degree() <= bound - ctx.A[i]


def test_reduce_n_unit_vectors(ex2):
    for i in range(ex2.mu):
        r = reduce_n(ex2.eta_beta(i), ex2)
        assert r.coeffs[i] == TPoly.one()
        assert all(r.coeffs[j].is_zero() for j in range(ex2.mu) if j != i)


def test_d_eta_beta_reduces_to_A_beta(ex2, ex3, ex4):
    from gmhodge.forms import dform_n
    for ctx in (ex2, ex3, ex4):
        for i in range(ctx.mu):
            r = reduce_top(dform_n(ctx.eta_beta(i)).coeff, ctx)
            assert r.coeffs[i] == TPoly([ctx.A[i]])
            assert all(r.coeffs[j].is_zero() for j in range(ctx.mu) if j != i)


def test_n0_reduce_prime_examples(ex1):
    r = n0_reduce_prime(poly("x", ("x",)), ex1)
    assert r.coeffs == [TPoly.zero(), TPoly.zero(), TPoly.one(), TPoly.zero()]
    assert r.p0.is_zero()
    # x^5 = f + 5x
    r = n0_reduce_prime(poly("x^5", ("x",)), ex1)
    assert r.p0 == TPoly.t()
    assert r.coeffs == [TPoly.zero(), TPoly.zero(), TPoly([5]), TPoly.zero()]
    # f^2 is purely a polynomial in f
    r = n0_reduce_prime(ex1.f * ex1.f, ex1)
    assert r.p0 == TPoly([0, 0, 1])
    assert all(p.is_zero() for p in r.coeffs)


def test_n0_reduce_second_examples(ex1):
    r = n0_reduce_second(MultiPoly.constant(1, 1), ex1)
    assert r.coeffs == [TPoly.zero(), TPoly.zero(), TPoly.zero(), TPoly.one()]
    r = n0_reduce_second(ex1.f.diff(0), ex1)
    assert all(p.is_zero() for p in r.coeffs)
    assert r.verify(ex1, ex1.f.diff(0))


def test_n0_random_identities(ex1):
    rng = seeded(45)
    for _ in range(40):
        P = MultiPoly(1, {(rng.randint(0, 14),): Fraction(rng.randint(-9, 9))
                          for _ in range(4)})
        if P.is_zero():
            continue
        assert n0_reduce_prime(P, ex1).verify(ex1, P)
        assert n0_reduce_second(P, ex1).verify(ex1, P)


def test_n0_degree_relation(ex1):
    # d <= d_beta + beta + 1 < 2d once the multiplicities are computed
    from gmhodge import dbeta
    D = dbeta(ex1, generic=True)
    d = ex1.d
    for i, m in enumerate(ex1.basis.monomials):
        assert d <= D.dbeta[i] + m[0] + 1 < 2 * d
