import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import circle, polytope, presentation_hilbert, random_circle_input, random_polytope_input
from inertia import (
    WeightMonomial,
    nary_star_exponents,
    nh_presentation,
    res_monomial,
    smile_structure_constant,
    star_exponents,
    star_structure_constant,
    structure_constants,
)
from inertia.inertial_ring import reduce_relations, smile_factors, smile_sets
from inertia.poly import Poly
from inertia.sectors import multiply

NAMES = ["1", "alpha", "beta", "gamma", "delta", "eta"]

# (row, column) -> (coefficient in u, target generator)
PRODUCTS_123 = {
    ("alpha", "alpha"): ("3*u", "beta"),
    ("alpha", "beta"): ("2*u", "gamma"),
    ("alpha", "gamma"): ("3*u", "delta"),
    ("alpha", "delta"): ("1", "eta"),
    ("alpha", "eta"): ("6*u^3", "1"),
    ("beta", "beta"): ("2*u", "delta"),
    ("beta", "gamma"): ("1", "eta"),
    ("beta", "delta"): ("2*u^2", "1"),
    ("beta", "eta"): ("2*u^2", "alpha"),
    ("gamma", "gamma"): ("3*u^2", "1"),
    ("gamma", "delta"): ("u", "alpha"),
    ("gamma", "eta"): ("3*u^2", "beta"),
    ("delta", "delta"): ("u", "beta"),
    ("delta", "eta"): ("2*u^2", "gamma"),
    ("eta", "eta"): ("6*u^3", "delta"),
}


@pytest.fixture(scope="module")
def p123():
    return circle([1, 2, 3])


@pytest.mark.parametrize("pair", sorted(PRODUCTS_123))
def test_weights_123_products(p123, pair):
    D, P, G = p123
    g, h = (G.gamma[NAMES.index(x)].g for x in pair)
    gh, c = star_structure_constant(D, g, h)
    coeff, target = PRODUCTS_123[pair]
    assert c.render(["u"]) == coeff
    assert NAMES[G.index(gh)] == target


def test_eta_squared_exponents(p123):
    D, P, G = p123
    eta = G.gamma[5].g
    assert star_exponents(D, eta, eta) == (1, 1, 1)
    eps, f = smile_factors(D, eta, eta)
    assert eps.render(["u"]) == "2*u^2" and f.render(["u"]) == "3*u"


def test_smile_sets_split_the_exponent(p123):
    D, P, G = p123
    alpha, eta = G.gamma[1].g, G.gamma[5].g
    ob, nb = smile_sets(D, alpha, eta)
    assert ob == frozenset() and nb == frozenset({0, 1, 2})


def test_res_of_113():
    D, P, G = circle([1, 1, 3])
    assert [res_monomial(D, s.g).render(["u"]) for s in G.gamma] == ["1", "u^(2/3)", "u^(4/3)"]
    assert [res_monomial(D, s.g).degree for s in G.gamma] == [0, F(4, 3), F(8, 3)]


def test_weight_monomial_rendering():
    m = WeightMonomial.make([((1,), F(1, 6)), ((2,), F(1, 3)), ((1,), F(1, 6))], scalar=5)
    assert m.terms == (((1,), F(1, 3)), ((2,), F(1, 3)))
    assert m.render(["u"]) == "5*u^(1/3)*(2*u)^(1/3)"
    assert not m.is_integral
    with pytest.raises(ValueError):
        m.to_poly(1)
    with pytest.raises(ValueError):
        WeightMonomial.make([((1,), F(-1))])
    two = WeightMonomial.make([((1, 1), 1)])
    assert two.render(["u1", "u2"]) == "u1 + u2"
    assert (two * two).to_poly(2) == Poly.linear([1, 1]) ** 2


def test_nh_presentation_113():
    D, P, G = circle([1, 1, 3])
    R = nh_presentation(D, G)
    assert R.names == ["u", "y1"]
    assert R.degrees == [2, F(4, 3)]
    assert R.describe() == "Z[u, y1]/<y1^3 - u^2>"
    # y_{2/3} is eliminated as y1^2
    assert R.render(R.sector_images[G.gamma[2].g]) == "y1^2"


def test_nh_presentation_123_keeps_all_generators(p123):
    D, P, G = p123
    R = nh_presentation(D, G)
    assert R.names == ["u", "y1", "y2", "y3", "y4", "y5"]
    assert len(R.relations) == 15
    unreduced = nh_presentation(D, G, reduce=False)
    assert len(unreduced.relations) == 15


def test_weights_121_elimination():
    D, P, G = circle([1, 2, 1])
    R = nh_presentation(D, G)
    assert R.describe() == "Z[u, y1]/<y1^2 - u^2>"


def test_reduce_relations():
    x, y = Poly.var(2, 0), Poly.var(2, 1)
    rels = [x * y - y, Poly(2), -(x * y - y), x * (x * y - y), 2 * x, x * x, x * x * y, 4 * x * y]
    out = reduce_relations(rels, [F(1), F(1)])
    # only monomial multiples are dropped; 4xy = 2y * 2x stays
    assert out == [x * y - y, 2 * x, x * x, 4 * x * y]


def _module_hilbert(D, G, cutoff):
    out = {}
    for s in G.gamma:
        d = s.degree_shift
        while d <= cutoff:
            out[d] = out.get(d, 0) + 1
            d += 2
    return dict(sorted(out.items()))


@pytest.mark.parametrize("weights", [[1, 2, 3], [1, 1, 3], [1, 2, 1], [1, 3, 4], [1, 1, 2, 2]])
def test_nh_presentation_has_the_free_module_hilbert_function(weights):
    D, P, G = circle(weights)
    R = nh_presentation(D, G)
    assert presentation_hilbert(R.degrees, R.relations, 10) == _module_hilbert(D, G, 10)


def test_nh_presentation_of_rectangle():
    D, P, G = polytope([(1, 0), (0, 1), (-1, 0), (0, -1)], [0, 0, -1, -1], [1, 2, 1, 3])
    R = nh_presentation(D, G)
    assert R.k == 2
    # each sector contributes the monomials of Z[u1, u2]
    expected = {}
    for s in G.gamma:
        d, n = s.degree_shift, 1
        while d <= 6:
            expected[d] = expected.get(d, 0) + n
            d, n = d + 2, n + 1
    assert presentation_hilbert(R.degrees, R.relations, 6) == dict(sorted(expected.items()))


def _ring_identities(D, G):
    els = G.elements
    consts = structure_constants(D, G)
    for g in els:
        for h in els:
            gh, c = consts[(g, h)]
            eps = star_exponents(D, g, h)
            assert set(eps) <= {0, 1}
            assert consts[(h, g)] == (gh, c)
            assert smile_structure_constant(D, g, h) == (gh, c)
            assert G.sector(g).age + G.sector(h).age == G.sector(gh).age + sum(eps)
            assert res_monomial(D, g) * res_monomial(D, h) == res_monomial(D, gh) * c
    for g in els:
        for h in els:
            gh = multiply(D, g, h)
            for k in els:
                hk = multiply(D, h, k)
                left = consts[(g, h)][1] * consts[(gh, k)][1]
                right = consts[(h, k)][1] * consts[(g, hk)][1]
                assert left == right
                assert multiply(D, gh, k) == multiply(D, g, hk)
    for s in G.box:
        for g in els[:6]:
            sums = [x + y + z for x, y, z in zip(g.a, g.a, s.g.a)]
            assert nary_star_exponents(D, g, g, s.g) == tuple(F(int(x)) for x in sums)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_random_circle_identities(seed):
    _, (D, P, G) = random_circle_input(random.Random(seed), max_gamma=18)
    _ring_identities(D, G)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_random_polygon_identities(seed):
    _, (D, P, G) = random_polytope_input(random.Random(seed), max_gamma=18)
    _ring_identities(D, G)
