import random

import pytest

from pcg.presentation import abelian_free_product, far_commuting, free_abelian, free_group, random_presentation
from pcg.word import parse_word, reduce_to_geodesic


@pytest.fixture
def p5():
    return far_commuting(5)


@pytest.fixture
def free2():
    return free_group(2, ["a", "b"])


@pytest.fixture
def ab3():
    return free_abelian(3)


def W(p, text):
    return parse_word(p, text)


def random_word(p, n, rng, syms=None):
    syms = sorted(syms) if syms is not None else list(range(1, p.rank + 1))
    if not syms:
        return ()
    return tuple(rng.choice((1, -1)) * rng.choice(syms) for _ in range(n))


def random_geodesic(p, n, rng, syms=None):
    return reduce_to_geodesic(p, random_word(p, n, rng, syms))


def random_instances(seed, count, max_rank=4, max_len=8, min_rank=1):
    """(presentation, geodesic word, rng) triples for oracle comparisons."""
    rng = random.Random(seed)
    for _ in range(count):
        p = random_presentation(rng.randint(min_rank, max_rank), rng)
        yield p, random_geodesic(p, rng.randint(0, max_len), rng), rng


__all__ = ["W", "abelian_free_product", "random_geodesic", "random_instances", "random_word"]
