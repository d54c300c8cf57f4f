"""Left/right divisibility, chains, gcd/lm and parabolic divisors.

All inputs are geodesic words.  Right-hand variants go through inversion:
u is a right divisor of w iff u^-1 is a left divisor of w^-1.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .presentation import Presentation
from .rewrite import normal_form
from .word import (NULL, OpCounter, PreconditionError, Word, inverse, letter_key,
                   reduce_to_geodesic, reduce_tracked, sym)


@dataclass(frozen=True)
class DivisorWitness:
    divisor: Word
    quotient: Word
    positions: tuple[int, ...]  # letters of w that make up the divisor

    def reassemble(self) -> Word:
        return self.divisor + self.quotient


@dataclass(frozen=True)
class ChainDecomposition:
    chains: tuple[Word, ...]
    numbers: tuple[int, ...]  # chain number of each letter of the source word
    source_length: int

    def word(self) -> Word:
        return tuple(x for c in self.chains for x in c)


def _geodesic(p: Presentation, w: Sequence[int]) -> Word:
    w = tuple(w)
    if len(reduce_to_geodesic(p, w)) != len(w):
        raise PreconditionError("expected a geodesic word")
    return w


def divides_left(p: Presentation, u: Sequence[int], w: Sequence[int]) -> DivisorWitness | None:
    """Witness for ``u | w`` or None; decided by lg(u^-1 w) = lg(w) - lg(u)."""
    u, w = tuple(u), tuple(w)
    n = len(u)
    word = inverse(u) + w
    res, kept, pairs = reduce_tracked(p, word)
    if len(res) != len(w) - len(u):
        return None
    positions = tuple(sorted(b - n for a, b in pairs))
    return DivisorWitness(u, res, positions)


def divides_right(p: Presentation, u: Sequence[int], w: Sequence[int]) -> DivisorWitness | None:
    wit = divides_left(p, inverse(u), inverse(w))
    if wit is None:
        return None
    m = len(w)
    return DivisorWitness(tuple(u), inverse(wit.quotient),
                          tuple(sorted(m - 1 - i for i in wit.positions)))


def _front_letters(p: Presentation, w: Sequence[int], allowed=None) -> list[bool]:
    """Mark letters that can be moved to the front using only allowed letters before them.

    A letter is taken iff its symbol is allowed and every earlier letter not
    commuting with it was taken as well.
    """
    comm = p.comm
    blocked: set[int] = set()  # symbols of letters left behind
    taken = []
    for x in w:
        s = sym(x)
        ok = (allowed is None or s in allowed) and (s not in blocked) \
            and all(b in comm[s] for b in blocked)
        if not ok:
            blocked.add(s)
        taken.append(ok)
    return taken


def _split(w: Sequence[int], taken: Sequence[bool]) -> tuple[Word, Word]:
    return (tuple(x for x, t in zip(w, taken) if t),
            tuple(x for x, t in zip(w, taken) if not t))


def _sorted_abelian(w: Iterable[int]) -> Word:
    return tuple(sorted(w, key=letter_key))


def max_abelian_divisor(p: Presentation, w: Sequence[int], counter: OpCounter = NULL) -> tuple[Word, Word]:
    """The greatest abelian left divisor ad(w) and the quotient.

    Greedy procedure: take the first letter z, cut the greatest left divisor
    commuting with z, pull the z-letters to the front, and repeat on the
    remainder with its first letter.  Each round costs three elementary
    operations and there are at most r rounds.
    """
    w = _geodesic(p, w)
    ad: list[int] = []
    rest = w
    cand = w
    while cand:
        z = sym(cand[0])
        counter.other += 3
        zs = p.comm[z]
        pz, _ = _split(cand, _front_letters(p, cand, zs))
        ad.extend(x for x in pz if sym(x) == z)
        cand = tuple(x for x in pz if sym(x) != z)
    ad_sorted = _sorted_abelian(ad)
    wit = divides_left(p, ad_sorted, rest)
    assert wit is not None
    return ad_sorted, wit.quotient


def chain_decomposition(p: Presentation, w: Sequence[int], counter: OpCounter = NULL) -> ChainDecomposition:
    """Chain decomposition via per-symbol chain counters.

    A letter with symbol x lands in chain 1 + max m[y] over the symbols y not
    commuting with x.  Per letter: one query for the blocking symbols and one
    transposition appending the letter to its chain.
    """
    return _chains(p, _geodesic(p, w), counter)


def _chains(p: Presentation, w: Word, counter: OpCounter) -> ChainDecomposition:
    r = p.rank
    blockers = [()] + [tuple(y for y in range(1, r + 1) if y not in p.comm[s]) for s in range(1, r + 1)]
    m = [0] * (r + 1)
    numbers = []
    chains: list[list[int]] = []
    for x in w:
        s = sym(x)
        counter.queries += 1
        k = 1 + max([m[y] for y in blockers[s]], default=0)
        m[s] = k
        numbers.append(k)
        while len(chains) < k:
            chains.append([])
        counter.transpositions += 1
        chains[k - 1].append(x)
    return ChainDecomposition(tuple(tuple(c) for c in chains), tuple(numbers), len(w))


def chains_by_abelian_divisors(p: Presentation, w: Sequence[int]) -> list[Word]:
    """Chains as iterated greatest abelian divisors (reference route)."""
    out = []
    rest = _geodesic(p, w)
    while rest:
        c, rest = max_abelian_divisor(p, rest)
        out.append(c)
    return out


def gcd_pair(p: Presentation, u: Sequence[int], v: Sequence[int]) -> Word:
    """Greatest common left divisor: the letters of v cancelled in u^-1 v."""
    u, v = _geodesic(p, u), _geodesic(p, v)
    n = len(u)
    _, _, pairs = reduce_tracked(p, inverse(u) + v)
    cancelled = sorted(b - n for a, b in pairs)
    return tuple(v[i] for i in cancelled)


def gcd_pair_right(p: Presentation, u: Sequence[int], v: Sequence[int]) -> Word:
    return inverse(gcd_pair(p, inverse(u), inverse(v)))


def _exponents(c: Sequence[int]) -> Counter:
    e: Counter = Counter()
    for x in c:
        e[sym(x)] += 1 if x > 0 else -1
    return e


def _abelian_word(e: dict) -> Word:
    out: list[int] = []
    for s in sorted(e):
        out.extend([s if e[s] > 0 else -s] * abs(e[s]))
    return tuple(out)


def abelian_gcd_lm(u: Sequence[int], v: Sequence[int]) -> tuple[Word, Word]:
    """gcd and lm of two abelian words: componentwise min/max magnitudes."""
    eu, ev = _exponents(u), _exponents(v)
    g, l = {}, {}
    for s in set(eu) | set(ev):
        a, b = eu.get(s, 0), ev.get(s, 0)
        if a and b and (a > 0) != (b > 0):
            raise PreconditionError("abelian words with opposite exponents have no common multiple")
        sign = 1 if (a or b) > 0 else -1
        if a and b:
            g[s] = sign * min(abs(a), abs(b))
        l[s] = sign * max(abs(a), abs(b))
    return _abelian_word(g), _abelian_word(l)


def gcd_lm_of_divisors(p: Presentation, u: Sequence[int], v: Sequence[int], w: Sequence[int],
                       counter: OpCounter = NULL) -> tuple[Word, Word]:
    """gcd and lm of two left divisors of w, computed chain by chain.

    Each chain step costs four elementary operations: the next chain of u,
    the next chain of v, the common symbol set, and the abelian gcd/lm.
    """
    u, v, w = _geodesic(p, u), _geodesic(p, v), _geodesic(p, w)
    if divides_left(p, u, w) is None:
        raise PreconditionError("first argument does not left-divide the multiple")
    if divides_left(p, v, w) is None:
        raise PreconditionError("second argument does not left-divide the multiple")
    cu = chain_decomposition(p, u).chains
    cv = chain_decomposition(p, v).chains
    t = max(len(cu), len(cv))
    cu = cu + ((),) * (t - len(cu))
    cv = cv + ((),) * (t - len(cv))
    g: list[int] = []
    l: list[int] = []
    for a, b in zip(cu, cv):
        counter.other += 4
        gi, li = abelian_gcd_lm(a, b)
        g.extend(gi)
        l.extend(li)
    return normal_form(p, g), normal_form(p, l)


def gcd_lm_of_right_divisors(p: Presentation, u, v, w, counter: OpCounter = NULL) -> tuple[Word, Word]:
    g, l = gcd_lm_of_divisors(p, inverse(u), inverse(v), inverse(w), counter)
    return normal_form(p, inverse(g)), normal_form(p, inverse(l))


def parabolic_gd(p: Presentation, w: Sequence[int], subset: Iterable[int],
                 counter: OpCounter = NULL) -> Word:
    """Greatest left divisor of w lying in the parabolic subgroup on ``subset``.

    Works chain by chain: after the chain decomposition each letter is kept
    iff its symbol is in the subset and nothing it depends on was dropped.
    """
    return _parabolic_gd(p, _geodesic(p, w), frozenset(subset), counter)


def _parabolic_gd(p: Presentation, w: Word, ys: frozenset, counter: OpCounter) -> Word:
    _chains(p, w, counter)
    counter.other += len(w)
    taken = _front_letters(p, w, ys)
    return _split(w, taken)[0]


def parabolic_gd_right(p: Presentation, w: Sequence[int], subset: Iterable[int],
                       counter: OpCounter = NULL) -> Word:
    return inverse(parabolic_gd(p, inverse(w), subset, counter))


def relative_divisor(p: Presentation, u: Sequence[int], v: Sequence[int],
                     counter: OpCounter = NULL) -> Word:
    """p_v(u): greatest left divisor of u whose symbols commute with all of alpha(v)."""
    z = p.centralizer_symbols({sym(x) for x in v})
    return parabolic_gd(p, u, z, counter)


def relative_divisor_right(p: Presentation, u: Sequence[int], v: Sequence[int],
                           counter: OpCounter = NULL) -> Word:
    return inverse(relative_divisor(p, inverse(u), v, counter))


def left_quotient(p: Presentation, u: Sequence[int], w: Sequence[int]) -> Word:
    """q with w = u ∘ q; raises if u does not divide w."""
    wit = divides_left(p, u, w)
    if wit is None:
        raise PreconditionError("not a left divisor")
    return wit.quotient
