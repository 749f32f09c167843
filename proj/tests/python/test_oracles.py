# SPDX-License-Identifier: Apache-2.0
import itertools
import random

import catsl2 as c
import pytest
import sympy as sp

q = sp.Symbol("q")


def to_sympy(p):
    return sum(sp.Integer(v) * q**e for e, v in p.coeffs().items())


def ratfun_to_sympy(r):
    return to_sympy(r.num) / to_sympy(r.den)


@pytest.mark.parametrize("m", range(0, 7))
def test_qbin_product_formula(m):
    def qi(a):
        return (q**a - q**-a) / (q - 1 / q)

    for j in range(m + 1):
        num = sp.prod([qi(m - i) for i in range(j)])
        den = sp.prod([qi(i + 1) for i in range(j)])
        assert sp.simplify(num / den - to_sympy(c.qbin(m, j))) == 0


@pytest.mark.parametrize("a", range(0, 5))
def test_g_is_a_product_of_geometric_series(a):
    want = sp.prod([1 / (1 - q ** (2 * j)) for j in range(1, a + 1)])
    assert sp.simplify(ratfun_to_sympy(c.g(a)) - want) == 0


def test_forms_against_closed_forms():
    U = c.UdotElement.parse
    got = ratfun_to_sympy(c.form(U("E(1)F(1)1_{0}"), U("E(1)F(1)1_{0}")))
    assert sp.simplify(got - (q**2 + 1) / (1 - 2 * q**2 + q**4)) == 0


def grassmannian_ideal(k, N):
    xs = sp.symbols(f"x1:{k + 1}")
    ys = sp.symbols(f"y1:{N - k + 1}")
    t = sp.Symbol("t")
    prod = sp.expand((1 + sum(x * t ** (i + 1) for i, x in enumerate(xs))) *
                     (1 + sum(y * t ** (i + 1) for i, y in enumerate(ys))))
    gens = [prod.coeff(t, d) for d in range(1, N + 1)]
    gens = [g for g in gens if g != 0]
    G = sp.groebner(gens, *ys, *xs, order="grevlex")
    return xs, ys, G


def schur_in_x(xs, lam):
    """Dual Jacobi-Trudi in the elementary classes x_j."""
    k = len(xs)
    conj = [sum(1 for p in lam if p > i) for i in range(lam[0])] if lam else []
    if not conj:
        return sp.Integer(1)

    def e(j):
        if j == 0:
            return sp.Integer(1)
        if j < 0 or j > k:
            return sp.Integer(0)
        return xs[j - 1]

    n = len(conj)
    return sp.Matrix(n, n, lambda i, j: e(conj[i] - i + j)).det()


@pytest.mark.parametrize("k,N", [(1, 3), (2, 4), (2, 5), (3, 5)])
def test_gr_from_poly_against_groebner(k, N):
    xs, ys, G = grassmannian_ideal(k, N)
    rng = random.Random(7 * N + k)
    gens = list(xs) + list(ys)
    for _ in range(6):
        poly = sum(rng.randint(-3, 3) * sp.prod([rng.choice(gens) for _ in range(rng.randint(0, 4))])
                   for _ in range(3))
        text = str(sp.expand(poly)).replace("**", "^")
        if text == "0":
            continue
        terms = c.gr_from_poly(k, N, text).terms()
        back = sum(sp.Rational(v.numerator, v.denominator) * schur_in_x(xs, list(p)) for p, v in terms.items())
        assert G.reduce(sp.expand(poly - back))[1] == 0


@pytest.mark.parametrize("k,N", [(2, 4), (2, 5)])
def test_pieri_products_against_groebner(k, N):
    xs, ys, G = grassmannian_ideal(k, N)
    parts = [p for p in itertools.product(range(N - k + 1), repeat=k) if list(p) == sorted(p, reverse=True)]
    for lam in parts:
        lam = [v for v in lam if v]
        for j in range(1, k + 1):
            prod = c.GrElement.schur(k, N, lam) * c.GrElement.x(k, N, j)
            back = sum(sp.Rational(v.numerator, v.denominator) * schur_in_x(xs, list(p))
                       for p, v in prod.terms().items())
            want = schur_in_x(xs, lam) * xs[j - 1]
            assert G.reduce(sp.expand(want - back))[1] == 0
