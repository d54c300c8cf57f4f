import random

import pytest
from hypothesis import given, settings, strategies as st

from pcg import oracle
from pcg.presentation import far_commuting, free_abelian, random_presentation
from pcg.word import (NULL, OpCounter, WordError, alpha, commuting_complement, format_word, geodesic_length,
                      inverse, is_abelian, is_geodesic, letter_key, parse_word, reduce_to_geodesic,
                      reduce_tracked, restrict, word_from_json, word_to_json)

from conftest import W, random_word


def test_parse_example(p5):
    w = W(p5, "x2 x5 x1 x3^-1 x1 x5 x4")
    assert w == (2, 5, 1, -3, 1, 5, 4)
    assert format_word(p5, w) == "x2 x5 x1 x3^-1 x1 x5 x4"


def test_parse_trivia(free2):
    assert W(free2, "") == ()
    assert W(free2, "1") == ()
    assert W(free2, "a^-1 a^-1") == (-1, -1)
    assert W(free2, "a^3 b^-2 a^0") == (1, 1, 1, -2, -2)
    assert format_word(free2, ()) == "1"


@pytest.mark.parametrize("text", ["c", "a^x", "a^"])
def test_parse_errors(free2, text):
    with pytest.raises(WordError):
        W(free2, text)


def test_json_roundtrip(p5):
    w = W(p5, "x2 x5 x1 x3^-1")
    data = word_to_json(p5, w)
    assert data[3] == {"s": "x3", "e": -1}
    assert word_from_json(p5, data) == w
    with pytest.raises(WordError):
        word_from_json(p5, [{"s": "x1", "e": 2}])


def test_letter_order():
    assert sorted([-2, 2, -1, 1], key=letter_key) == [1, -1, 2, -2]


def test_reduce_examples(free2, p5):
    assert reduce_to_geodesic(free2, W(free2, "a a^-1")) == ()
    assert reduce_to_geodesic(p5, W(p5, "x1 x3 x1^-1")) == (3,)
    c = OpCounter()
    w = W(p5, "x2 x5 x1 x3^-1 x1 x5 x4")
    assert reduce_to_geodesic(p5, w, c) == w
    assert c.cancellations == 0


def test_is_geodesic(free2, p5):
    assert is_geodesic(free2, W(free2, "a b a^-1"))
    assert not is_geodesic(p5, W(p5, "x1 x3 x1^-1"))
    assert is_geodesic(p5, ())


def test_alpha_and_complement(p5, free2):
    assert alpha(p5, W(p5, "x2 x5 x1 x3^-1 x1 x5 x4")) == {1, 2, 3, 4, 5}
    assert alpha(p5, ()) == frozenset()
    assert alpha(free2, W(free2, "a a a")) == {1}
    assert commuting_complement(p5, W(p5, "x1")) == {3, 4, 5}
    assert commuting_complement(p5, W(p5, "x1 x2 x3 x4 x5")) == frozenset()
    assert commuting_complement(free_abelian(3), (1,)) == {2, 3}


def test_is_abelian_and_restrict(p5):
    assert is_abelian(p5, W(p5, "x1 x3 x5 x1"))
    assert not is_abelian(p5, W(p5, "x1 x2"))
    assert restrict(W(p5, "x1 x2 x3^-1"), {1, 3}) == (1, -3)


def test_null_counter_absorbs():
    NULL.queries += 5
    assert NULL.queries == 0


def test_reduce_matches_exhaustive_search():
    rng = random.Random(11)
    for _ in range(400):
        p = random_presentation(rng.randint(1, 4), rng)
        w = random_word(p, rng.randint(0, 8), rng)
        g = reduce_to_geodesic(p, w)
        reach = oracle.reachable_geodesics(p, w)
        assert g in reach
        assert reduce_to_geodesic(p, g) == g
        assert (len(w) - len(g)) % 2 == 0


def test_geodesic_representatives_share_letters():
    rng = random.Random(12)
    for _ in range(200):
        p = random_presentation(rng.randint(1, 4), rng)
        g = reduce_to_geodesic(p, random_word(p, rng.randint(0, 8), rng))
        cls = oracle.enumerate_geodesics(p, g).words
        assert all(sorted(u) == sorted(g) for u in cls)
        assert all(alpha(p, u) == alpha(p, g) for u in cls)


def test_non_commuting_letters_keep_order():
    # tag each letter with its position and swap tagged words
    rng = random.Random(13)
    for _ in range(100):
        p = random_presentation(rng.randint(2, 4), rng)
        g = reduce_to_geodesic(p, random_word(p, rng.randint(2, 7), rng))
        tagged = {tuple(range(len(g)))}
        frontier = list(tagged)
        while frontier:
            t = frontier.pop()
            for i in range(len(t) - 1):
                a, b = abs(g[t[i]]), abs(g[t[i + 1]])
                if a != b and p.commutes(a, b):
                    u = t[:i] + (t[i + 1], t[i]) + t[i + 2:]
                    if u not in tagged:
                        tagged.add(u)
                        frontier.append(u)
        for t in tagged:
            pos = {k: i for i, k in enumerate(t)}
            for i in range(len(g)):
                for j in range(i + 1, len(g)):
                    if not p.commutes(abs(g[i]), abs(g[j])) or abs(g[i]) == abs(g[j]):
                        assert pos[i] < pos[j]


def test_cancellation_only_across_factors():
    rng = random.Random(14)
    for _ in range(300):
        p = random_presentation(rng.randint(1, 5), rng)
        u = reduce_to_geodesic(p, random_word(p, rng.randint(0, 10), rng))
        v = reduce_to_geodesic(p, random_word(p, rng.randint(0, 10), rng))
        _, _, pairs = reduce_tracked(p, u + v)
        assert all(a < len(u) <= b for a, b in pairs)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3, 4, -4]), max_size=24))
def test_reduce_idempotent_and_inverse(w):
    p = far_commuting(4)
    g = reduce_to_geodesic(p, w)
    assert reduce_to_geodesic(p, g) == g
    assert len(g) <= len(w)
    assert reduce_to_geodesic(p, tuple(w) + inverse(w)) == ()
    assert geodesic_length(p, inverse(w)) == len(g)
