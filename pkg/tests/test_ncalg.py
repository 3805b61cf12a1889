import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mcat.checks import end_state, permutation_count
from mcat.coefficients import RationalFunction
from mcat.linearize import end_algebra
from mcat.ncalg import (
    DegreeOverflowWarning,
    GroebnerState,
    MonomialOrder,
    NCPolynomial,
    ReferenceAlgebra,
    check_homomorphism,
    complete,
    quotient_dim,
    quotient_mul,
    reduce,
    symmetric_group_algebra,
    wreath_product_algebra,
)
from mcat.presentation import builtin, group_algebra

O1 = MonomialOrder.deglex(1)
O2 = MonomialOrder.deglex(2)


def poly(order, *terms):
    return NCPolynomial([(Fraction(c), tuple(w)) for c, w in terms], order)


def x_squared():
    return complete([poly(O1, (1, (0, 0)), (-1, ()))], O1, 5)


def test_reduce_examples():
    G = x_squared()
    assert reduce(poly(O1, (1, (0, 0))), G) == 1
    assert reduce(NCPolynomial({}, O1), G).is_zero()
    assert reduce(poly(O1, (1, (0, 0, 0))), G) == poly(O1, (1, (0,)))


def test_reduce_braid_word():
    A, G = end_state("symmetric", 3)
    s0, s1 = G.word_of("s[0]"), G.word_of("s[1]")
    assert G.reduce(s1 * s0 * s1) == s0 * s1 * s0


def test_single_involution():
    G = x_squared()
    assert [str(p) for p in G.basis] == [str(poly(O1, (1, (0, 0)), (-1, ())))]
    q = G.quotient_dim()
    assert q.counts == (1, 1, 0, 0, 0, 0)
    assert q.finite and q.dimension == 2
    assert G.normal_words() == [(), (0,)]


def test_free_algebra_counts():
    G = complete([], O2, 4)
    q = quotient_dim(G)
    assert list(q.counts) == [1, 2, 4, 8, 16]
    assert not q.finite


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_symmetric_dimension(d):
    _, G = end_state("symmetric", d, max_degree=3 * d)
    q = G.quotient_dim()
    assert q.finite and q.dimension == permutation_count(d)


def test_symmetric_three_strands_at_six():
    _, G = end_state("symmetric", 3, max_degree=6)
    assert G.quotient_dim().dimension == 6


def test_braid_laurent_counts():
    _, G = end_state("braid", 2, max_degree=6)
    q = G.quotient_dim()
    assert not q.finite
    assert q.cumulative()[-1] == 13


def test_quotient_mul_examples():
    _, G = end_state("symmetric", 2)
    s = G.word_of("s[0]")
    assert quotient_mul(s, s, G) == 1
    _, H = end_state("hecke", 2)
    assert quotient_mul(H.word_of("sigma[0]"), H.word_of("sigma_inv[0]"), H) == H.poly([(H.field.one, ())])
    p = H.word_of("sigma[0]") * H.word_of("sigma[0]")
    assert quotient_mul(H.poly([(H.field.one, ())]), p, H) == H.reduce(p)


def test_quotient_mul_warns_past_verified_degree():
    G = complete([], O2, 2)
    x = poly(O2, (1, (0, 0)))
    with pytest.warns(DegreeOverflowWarning):
        quotient_mul(x, x, G)


def test_hecke_skein_reduction():
    _, H = end_state("hecke", 2)
    sigma = H.word_of("sigma[0]")
    z = RationalFunction.q() - RationalFunction.q().inverse()
    one = H.poly([(H.field.one, ())])
    assert H.reduce(sigma * sigma) == sigma.scale(z) + one
    assert H.quotient_dim().dimension == 2


def test_relations_reduce_to_zero():
    for name, d in [("symmetric", 3), ("hecke", 3), ("wreath", 2), ("daha", 2), ("braid", 2)]:
        A, G = end_state(name, d)
        for p in A.polynomials(G.order):
            assert G.is_member(p), (name, p)


def test_finiteness_is_stable():
    for name, d in [("symmetric", 3), ("hecke", 2), ("wreath", 2)]:
        A, G = end_state(name, d)
        q = G.quotient_dim()
        assert q.finite
        G2 = complete(A.polynomials(), A.default_order(), G.verified_degree + 2, A.names, A.field)
        assert G2.quotient_dim().dimension == q.dimension


def test_json_round_trip():
    _, H = end_state("hecke", 2)
    again = GroebnerState.from_json(H.to_json())
    assert again.dumps() == H.dumps()
    assert [str(p) for p in again.basis] == [str(p) for p in H.basis]


SYM3 = end_state("symmetric", 3)
WREATH2 = end_state("wreath", 2)


def random_poly(rng, G, degree=3):
    n = G.order.ngens
    terms = []
    for _ in range(rng.randint(0, 4)):
        w = tuple(rng.randrange(n) for _ in range(rng.randint(0, degree)))
        terms.append((G.field.one * rng.randint(-3, 3), w))
    return G.poly(terms)


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=100, deadline=None)
@given(seeds, st.sampled_from([SYM3, WREATH2]))
def test_reduce_is_a_projection(seed, state):
    _, G = state
    p = random_poly(random.Random(seed), G)
    r = G.reduce(p)
    assert G.reduce(r) == r
    assert G.reduce(p - r).is_zero()
    assert all(G.is_normal(w) for _, w in r.terms)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_membership_matches_normal_forms(seed):
    _, G = SYM3
    rng = random.Random(seed)
    p = random_poly(rng, G)
    # q differs from p by an ideal element half of the time
    q = p
    if rng.random() < 0.5:
        A = SYM3[0]
        rel = rng.choice(A.polynomials(G.order))
        q = p + random_poly(rng, G, 1) * rel * random_poly(rng, G, 1)
    else:
        q = random_poly(rng, G)
    assert G.is_member(p - q) == (G.reduce(p) == G.reduce(q))


@settings(max_examples=100, deadline=None)
@given(seeds, st.sampled_from([SYM3, WREATH2]))
def test_quotient_mul_is_associative(seed, state):
    _, G = state
    rng = random.Random(seed)
    p, q, r = (random_poly(rng, G, 2) for _ in range(3))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegreeOverflowWarning)
        left = quotient_mul(quotient_mul(p, q, G), r, G)
        right = quotient_mul(p, quotient_mul(q, r, G), G)
    assert left == right


words = st.lists(st.integers(0, 2), max_size=5).map(tuple)


@given(words, words, words, words)
def test_deglex_is_multiplicative(u, v, a, b):
    order = MonomialOrder.deglex(3, [2, 0, 1])
    if order.less(u, v):
        assert order.less(a + u + b, a + v + b)
    assert not order.less(u, u)


def test_symmetric_isomorphism():
    for d in (3, 4):
        A, G = end_state("symmetric", d)
        T = symmetric_group_algebra(d)
        T.validate()
        v = check_homomorphism(A, T, G)
        assert v.well_defined and v.surjective
        assert v.isomorphism and v.quotient.dimension == permutation_count(d)


def test_wreath_isomorphism():
    A, G = WREATH2
    T = wreath_product_algebra(group_algebra(2), 2)
    T.validate()
    v = check_homomorphism(A, T, G)
    assert v.isomorphism and v.target_dim == 8


def test_wrong_image_names_the_violated_relation():
    A, G = SYM3
    T = symmetric_group_algebra(3)
    T.images = dict(T.images)
    T.images["s[0]"] = {k: 2 * c for k, c in T.unit.items()}
    v = check_homomorphism(A, T, G)
    assert not v.well_defined and not v.isomorphism
    assert "involution(- | a)" in [name for name, _ in v.violations]


def test_reference_algebra_validation():
    bad = ReferenceAlgebra(["e", "f"], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {0: 1}, (1, 1): {1: 1}}, {0: 1})
    with pytest.raises(ValueError):
        bad.validate()


def test_order_precedence():
    order = MonomialOrder.deglex(2, [1, 0])
    assert order.less((1,), (0,))
    assert order.less((0,), (0, 0))
    with pytest.raises(ValueError):
        MonomialOrder.deglex(2, [0, 0])


def test_generators_reach_end_algebra_names():
    A = end_algebra(builtin("wreath", algebra="Z2"), ("a",) * 2)
    T = wreath_product_algebra(group_algebra(2), 2)
    assert set(A.names) <= set(T.images)
