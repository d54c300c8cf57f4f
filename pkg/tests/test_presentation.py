import random

import pytest

from pcg.presentation import (PresentationError, Presentation, far_commuting, free_abelian, free_group,
                              load_presentation, parse_presentation, random_presentation)


def test_parse_free():
    p = parse_presentation("symbols: a b\n")
    assert p.names == ("a", "b")
    assert not p.pairs


def test_parse_far_commuting_matches_family():
    lines = ["symbols: x1 x2 x3 x4 x5"]
    lines += [f"commute: x{i} x{j}" for i in range(1, 6) for j in range(i + 2, 6)]
    assert parse_presentation("\n".join(lines)) == far_commuting(5)


def test_duplicate_commute_is_idempotent():
    a = parse_presentation("symbols: a b\ncommute: a b\ncommute: a b\n")
    b = parse_presentation("symbols: a b\ncommute: b a\n")
    assert a == b


def test_comments_and_blank_lines():
    p = parse_presentation("# group\n\nsymbols: a b c  # three\ncommute: a c\n")
    assert p.commutes(1, 3) and not p.commutes(1, 2)


@pytest.mark.parametrize("text, fragment", [
    ("commute: a b\n", "missing 'symbols'"),
    ("symbols: a a\n", "duplicate"),
    ("symbols: a b\ncommute: a c\n", "line 2"),
    ("symbols: a b\ncommute: a a\n", "self-pair"),
    ("symbols: a b\ncommute: a\n", "exactly two"),
    ("symbols: a^b\n", "invalid symbol"),
    ("symbols: a\nsymbols: b\n", "twice"),
    ("symbols: a\nfoo: a\n", "unknown key"),
    ("symbols a b\n", "expected"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(PresentationError, match=fragment):
        parse_presentation(text)


def test_commutes_examples(p5):
    assert p5.commutes(1, 3)
    assert not p5.commutes(1, 2)
    for s in p5.symbols:
        assert p5.commutes(s, s)


def test_components(p5):
    assert p5.non_commutation_components({1, 2, 4, 5}) == [frozenset({1, 2}), frozenset({4, 5})]
    assert free_abelian(3).non_commutation_components({1, 2, 3}) == [frozenset({1}), frozenset({2}), frozenset({3})]
    assert free_group(3).non_commutation_components({1, 2, 3}) == [frozenset({1, 2, 3})]


def test_component_invariants():
    rng = random.Random(3)
    for _ in range(200):
        p = random_presentation(rng.randint(1, 7), rng)
        s = {x for x in p.symbols if rng.random() < 0.7}
        comps = p.non_commutation_components(s)
        assert set().union(*comps) == s if comps else not s
        assert sum(len(c) for c in comps) == len(s)
        for i, a in enumerate(comps):
            for b in comps[i + 1:]:
                assert all(p.commutes(x, y) for x in a for y in b)
        for i in p.symbols:
            for j in p.symbols:
                assert p.commutes(i, j) == p.commutes(j, i)


def test_roundtrip_text(tmp_path):
    p = far_commuting(4)
    f = tmp_path / "g.txt"
    f.write_text(p.to_text())
    assert load_presentation(f) == p


def test_from_names_unknown():
    with pytest.raises(PresentationError):
        Presentation.from_names(["a"], [("a", "z")])


def test_centralizer(p5):
    assert p5.centralizer_symbols({1}) == frozenset({1, 3, 4, 5})
    assert p5.centralizer_symbols(set()) == p5.symbols


def test_random_connected():
    rng = random.Random(0)
    for _ in range(20):
        p = random_presentation(6, rng, density=0.7, connected=True)
        assert p.is_connected(p.symbols)
