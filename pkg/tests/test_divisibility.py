import random

import pytest

from pcg import oracle
from pcg.divisibility import (abelian_gcd_lm, chain_decomposition, chains_by_abelian_divisors, divides_left,
                              divides_right, gcd_lm_of_divisors, gcd_lm_of_right_divisors, gcd_pair,
                              gcd_pair_right, left_quotient, max_abelian_divisor, parabolic_gd,
                              parabolic_gd_right, relative_divisor)
from pcg.presentation import free_abelian, free_group, random_presentation
from pcg.rewrite import normal_form
from pcg.word import OpCounter, PreconditionError, inverse, is_abelian

from conftest import W, random_instances

EXAMPLE = "x2 x5 x1 x3^-1 x1 x5 x4"


def key(p, w):
    return oracle.trace_key(p, w)


def test_chain_example(p5):
    cd = chain_decomposition(p5, W(p5, EXAMPLE))
    assert cd.chains == (W(p5, "x2 x5 x5"), W(p5, "x1 x3^-1 x1"), W(p5, "x4"))
    assert cd.numbers == (1, 1, 2, 2, 2, 1, 3)


def test_chain_trivia(ab3, free2):
    w = W(ab3, "x3 x1 x2^-1 x1")
    assert chain_decomposition(ab3, w).chains == (w,)
    assert chain_decomposition(free2, W(free2, "a b a")).chains == ((1,), (2,), (1,))
    assert chain_decomposition(free2, ()).chains == ()


def test_chain_cost(p5):
    c = OpCounter()
    chain_decomposition(p5, W(p5, EXAMPLE), c)
    assert c.elementary <= 3 * 5 * 7


def test_divides_examples(p5, free2):
    w = W(p5, EXAMPLE)
    d = divides_left(p5, (), w)
    assert d.quotient == w
    d = divides_left(p5, W(p5, "x5"), w)
    assert d is not None and d.positions == (1,)
    assert normal_form(p5, d.reassemble()) == normal_form(p5, w)
    assert divides_left(free2, W(free2, "b"), W(free2, "a b")) is None
    assert divides_right(free2, W(free2, "b"), W(free2, "a b")).quotient == W(free2, "a")


def test_left_quotient_raises(free2):
    with pytest.raises(PreconditionError):
        left_quotient(free2, W(free2, "b"), W(free2, "a"))


def test_ad_examples(p5, ab3, free2):
    ad, q = max_abelian_divisor(p5, W(p5, EXAMPLE))
    assert ad == W(p5, "x2 x5 x5")
    assert q == W(p5, "x1 x3^-1 x1 x4")
    w = W(ab3, "x3 x1^-1 x2")
    assert max_abelian_divisor(ab3, w)[0] == normal_form(ab3, w)
    assert max_abelian_divisor(free2, W(free2, "a b"))[0] == W(free2, "a")


def test_gcd_examples(free2):
    p = free_abelian(2)
    assert gcd_pair(free2, W(free2, "a"), W(free2, "b")) == ()
    w = W(free2, "a b a")
    assert gcd_pair(free2, w, w) == w
    g = gcd_pair(p, W(p, "x1^2 x2^-1"), W(p, "x1 x2^-3"))
    assert normal_form(p, g) == W(p, "x1 x2^-1")


def test_gcd_lm_example():
    p = free_abelian(2)
    u, v, w = W(p, "x1^2 x2^-1"), W(p, "x1 x2^-3"), W(p, "x1^3 x2^-3")
    g, l = gcd_lm_of_divisors(p, u, v, w)
    assert g == W(p, "x1 x2^-1")
    assert l == W(p, "x1^2 x2^-3")
    assert gcd_lm_of_divisors(p, u, u, w) == (u, u)


def test_gcd_lm_requires_divisors(free2):
    with pytest.raises(PreconditionError):
        gcd_lm_of_divisors(free2, W(free2, "b"), (), W(free2, "a b"))


def test_abelian_gcd_lm_signs():
    with pytest.raises(PreconditionError):
        abelian_gcd_lm((1,), (-1,))
    assert abelian_gcd_lm((1, 1, -2), (1, 3)) == ((1,), (1, 1, -2, 3))


def test_parabolic_examples(p5):
    w = W(p5, "x2 x5 x1 x4")
    assert parabolic_gd(p5, w, p5.symbols) == w
    assert parabolic_gd(p5, w, set()) == ()
    assert parabolic_gd(p5, w, {5}) == (5,)
    assert relative_divisor(p5, W(p5, "x3 x2"), W(p5, "x1")) == (3,)
    assert relative_divisor(p5, W(p5, "x1 x3"), W(p5, "x5")) == W(p5, "x1 x3")
    assert relative_divisor(free_group(2), (1, 2), (1, 2)) == ()


def test_parabolic_cost(p5):
    c = OpCounter()
    parabolic_gd(p5, W(p5, EXAMPLE), {1, 2}, c)
    assert c.elementary <= (3 * 5 + 1) * 7


def test_against_oracle():
    for p, w, rng in random_instances(31, 500):
        divs = oracle.bruteforce_divisors(p, w)
        # divisibility
        u = w[: rng.randint(0, len(w))] if rng.random() < 0.5 else tuple(
            rng.choice((1, -1)) * rng.randint(1, p.rank) for _ in range(rng.randint(0, 3)))
        u = oracle.reduce_to_geodesic(p, u)
        wit = divides_left(p, u, w)
        assert (wit is not None) == (key(p, u) in divs)
        if wit is not None:
            assert len(u) + len(wit.quotient) == len(w)
            assert normal_form(p, wit.reassemble()) == normal_form(p, w)
        # right divisibility through the oracle's right divisor set
        rdivs = oracle.bruteforce_right_divisors(p, w)
        assert (divides_right(p, u, w) is not None) == (key(p, u) in rdivs)
        # abelian divisor and chains
        ad, q = max_abelian_divisor(p, w)
        assert key(p, ad) in divs and is_abelian(p, ad)
        assert len(ad) == max(len(d) for d in divs if is_abelian(p, d))
        cd = chain_decomposition(p, w)
        assert [normal_form(p, c) for c in cd.chains] == [normal_form(p, c) for c in chains_by_abelian_divisors(p, w)]
        assert normal_form(p, cd.word()) == normal_form(p, w) and len(cd.word()) == len(w)
        # gcd of two arbitrary elements
        v = oracle.reduce_to_geodesic(p, tuple(rng.choice((1, -1)) * rng.randint(1, p.rank)
                                               for _ in range(rng.randint(0, 8))))
        common = divs & oracle.bruteforce_divisors(p, v)
        g = gcd_pair(p, w, v)
        assert key(p, g) in common
        assert all(key(p, d) in oracle.bruteforce_divisors(p, g) for d in common)
        gr = gcd_pair_right(p, w, v)
        rcommon = rdivs & oracle.bruteforce_right_divisors(p, v)
        assert key(p, gr) in rcommon and len(gr) == max(len(d) for d in rcommon)
        # parabolic divisors
        ys = frozenset(s for s in p.symbols if rng.random() < 0.5)
        pg = parabolic_gd(p, w, ys)
        cands = [d for d in divs if all(abs(x) in ys for x in d)]
        assert key(p, pg) in cands and len(pg) == max(len(d) for d in cands)
        pr = parabolic_gd_right(p, w, ys)
        cands = [d for d in rdivs if all(abs(x) in ys for x in d)]
        assert key(p, pr) in cands and len(pr) == max(len(d) for d in cands)


def test_lattice_laws():
    for p, w, rng in random_instances(32, 300):
        divs = sorted(oracle.bruteforce_divisors(p, w))
        if len(divs) < 2:
            continue
        below = {d: oracle.bruteforce_divisors(p, d) for d in divs}
        a, b, c = (rng.choice(divs) for _ in range(3))
        g, l = gcd_lm_of_divisors(p, a, b, w)
        meet = [d for d in divs if d in below[a] and d in below[b]]
        join = [d for d in divs if a in below[d] and b in below[d]]
        assert key(p, g) in meet and all(d in below[key(p, g)] for d in meet)
        assert key(p, l) in join and all(key(p, l) in below[d] for d in join)
        assert gcd_lm_of_divisors(p, b, a, w) == (g, l)
        # absorption and associativity
        assert gcd_lm_of_divisors(p, a, l, w)[0] == normal_form(p, a)
        assert gcd_lm_of_divisors(p, a, g, w)[1] == normal_form(p, a)
        bc = gcd_lm_of_divisors(p, b, c, w)
        ab = (g, l)
        assert gcd_lm_of_divisors(p, a, bc[0], w)[0] == gcd_lm_of_divisors(p, ab[0], c, w)[0]
        assert gcd_lm_of_divisors(p, a, bc[1], w)[1] == gcd_lm_of_divisors(p, ab[1], c, w)[1]
        # disjoint support when the gcd is trivial
        if not g:
            assert not ({abs(x) for x in a} & {abs(x) for x in b})
            assert l == normal_form(p, a + b)
        # right-hand version mirrors the left one
        ri = [inverse(d) for d in (a, b)]
        gr, lr = gcd_lm_of_right_divisors(p, ri[0], ri[1], inverse(w))
        assert gr == normal_form(p, inverse(g)) and lr == normal_form(p, inverse(l))


def test_partial_order_and_cancellation():
    for p, w, rng in random_instances(33, 300):
        divs = sorted(oracle.bruteforce_divisors(p, w))
        u = rng.choice(divs)
        v = rng.choice(sorted(oracle.bruteforce_divisors(p, u)))
        assert divides_left(p, v, u) is not None and divides_left(p, u, w) is not None
        assert divides_left(p, v, w) is not None  # transitivity
        assert divides_left(p, w, w) is not None
        # cancellation: u = v u2 and w = v w2 imply u2 | w2
        u2 = left_quotient(p, v, u)
        w2 = left_quotient(p, v, w)
        assert divides_left(p, u2, w2) is not None
        # chains of a divisor divide the chains of the multiple, chain by chain
        cu = chain_decomposition(p, u).chains
        cw = chain_decomposition(p, w).chains
        assert len(cu) <= len(cw)
        for a, b in zip(cu, cw):
            assert key(p, a) in oracle.bruteforce_divisors(p, b)
