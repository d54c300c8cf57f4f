"""Cyclic reduction, blocks, exhausted forms and the conjugacy decision.

Conjugator convention throughout: a witness z for (u, v) satisfies
z^-1 u z = v as group elements.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .divisibility import _parabolic_gd, parabolic_gd, parabolic_gd_right
from .presentation import Presentation
from .rewrite import associated_symbols, normal_form, shortlex_key, syllable_decompose
from .word import (NULL, OpCounter, PreconditionError, Word, inverse, reduce_to_geodesic,
                   restrict, sym)


@dataclass(frozen=True)
class ConjugacyWitness:
    conjugator: Word
    trace: tuple = field(default=(), compare=False)  # (step name, word) pairs

    def verify(self, p: Presentation, u: Sequence[int], v: Sequence[int]) -> bool:
        z = self.conjugator
        return normal_form(p, inverse(z) + tuple(u) + z) == normal_form(p, v)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Word, ...]
    components: tuple[frozenset, ...]

    def word(self) -> Word:
        return tuple(x for b in self.blocks for x in b)


def _geodesic(p: Presentation, w: Sequence[int]) -> Word:
    w = tuple(w)
    if len(reduce_to_geodesic(p, w)) != len(w):
        raise PreconditionError("expected a geodesic word")
    return w


def _first_chain(p: Presentation, w: Word, counter: OpCounter) -> list[int]:
    """Positions of the letters that are left divisors of w."""
    free = set(p.symbols)  # symbols still able to reach the front
    out = []
    for i, x in enumerate(w):
        counter.queries += 1
        s = sym(x)
        if s in free:
            out.append(i)
        free &= p.comm[s]
        free.discard(s)
        if not free:
            break
    return out


def _last_chain(p: Presentation, w: Word, counter: OpCounter) -> list[int]:
    n = len(w)
    return [n - 1 - i for i in _first_chain(p, inverse(w), counter)]


def _reducible_pairs(p: Presentation, w: Word, allowed, counter: OpCounter) -> list[tuple[int, int]]:
    left = _first_chain(p, w, counter)
    right = {w[j]: j for j in _last_chain(p, w, counter)}
    out = []
    for i in left:
        x = w[i]
        if (allowed is None or sym(x) in allowed) and -x in right:
            out.append((i, right[-x]))
    return out


def is_cyclically_reduced(p: Presentation, w: Sequence[int]) -> bool:
    """No letter y with y a left divisor and y^-1 a right divisor of w."""
    w = _geodesic(p, w)
    return not _reducible_pairs(p, w, None, NULL)


def cyclically_reduce(p: Presentation, w: Sequence[int], counter: OpCounter = NULL,
                      allowed: Iterable[int] | None = None) -> tuple[Word, ConjugacyWitness]:
    """Cyclically reduced conjugate of w and a conjugator.

    Each round strips every letter y of the first chain whose inverse lies in
    the last chain.  ``allowed`` restricts the conjugating letters to a
    symbol subset.
    """
    w = _geodesic(p, w)
    allowed = None if allowed is None else frozenset(allowed)
    z: list[int] = []
    trace = []
    while True:
        pairs = _reducible_pairs(p, w, allowed, counter)
        if not pairs:
            break
        drop = {i for pr in pairs for i in pr}
        counter.cancellations += len(pairs)
        z.extend(w[i] for i, _ in pairs)
        w = tuple(x for k, x in enumerate(w) if k not in drop)
        trace.append(("cycred", w))
    return w, ConjugacyWitness(tuple(z), tuple(trace))


def block_decomposition(p: Presentation, w: Sequence[int], counter: OpCounter = NULL) -> BlockDecomposition:
    w = _geodesic(p, w)
    counter.other += p.rank * p.rank + len(w)
    comps = p.non_commutation_components({sym(x) for x in w})
    owner = {s: k for k, c in enumerate(comps) for s in c}
    blocks: list[list[int]] = [[] for _ in comps]
    for x in w:
        blocks[owner[sym(x)]].append(x)
    return BlockDecomposition(tuple(tuple(b) for b in blocks), tuple(comps))


def _check_exhaust_input(p: Presentation, w: Word, alphabet) -> frozenset:
    alphabet = frozenset(p.symbols if alphabet is None else alphabet)
    if frozenset(sym(x) for x in w) != alphabet:
        raise PreconditionError("the symbols of w must be exactly the alphabet")
    if not p.is_connected(alphabet):
        raise PreconditionError("w is not a block")
    if not is_cyclically_reduced(p, w):
        raise PreconditionError("w is not cyclically reduced")
    return alphabet


def exhausted_form(p: Presentation, w: Sequence[int], subset: Iterable[int],
                   counter: OpCounter = NULL, alphabet=None) -> tuple[Word, ConjugacyWitness]:
    """e_Y(w): the cyclically reduced G(Y)-conjugate of w with no left Y-divisor.

    Repeatedly moves the greatest left Y-divisor to the right end.  The
    witness lies in G(Y).  Requires w to be a cyclically reduced block whose
    symbols are exactly ``alphabet`` (default: all symbols).
    """
    w = _geodesic(p, w)
    ys = frozenset(subset)
    alphabet = _check_exhaust_input(p, w, alphabet)
    if alphabet <= ys:
        raise PreconditionError("Y must be a proper subset of the alphabet")
    return _exhaust(p, w, ys, counter)


def _exhaust(p: Presentation, w: Word, ys: frozenset, counter: OpCounter) -> tuple[Word, ConjugacyWitness]:
    z: list[int] = []
    trace = []
    c = w
    for _ in range(len(ys) + 2):
        d = _parabolic_gd(p, c, ys, counter)
        if not d:
            return normal_form(p, c, counter), ConjugacyWitness(tuple(z), tuple(trace))
        wit = _strip_left(p, d, c)
        c = wit + d
        z.extend(d)
        trace.append(("exhaust", d))
    raise RuntimeError("exhaustion did not terminate")  # pragma: no cover


def _strip_left(p: Presentation, d: Word, c: Word) -> Word:
    """c with its left divisor d removed."""
    res = reduce_to_geodesic(p, inverse(d) + c)
    assert len(res) == len(c) - len(d)
    return res


def in_parabolic_conjugacy_class(p: Presentation, v: Sequence[int], w: Sequence[int],
                                 subset: Iterable[int], counter: OpCounter = NULL,
                                 alphabet=None) -> ConjugacyWitness | None:
    """Witness z in G(Y) with z^-1 w z = v, or None."""
    w = _geodesic(p, w)
    ys = frozenset(subset)
    _check_exhaust_input(p, w, alphabet)
    v1, zv = cyclically_reduce(p, reduce_to_geodesic(p, v), counter, allowed=ys)
    if len(v1) != len(w) or Counter(v1) != Counter(w):
        return None
    if not is_cyclically_reduced(p, v1):
        return None
    ew, zw = exhausted_form(p, w, ys, counter, alphabet)
    ev, ze = exhausted_form(p, v1, ys, counter, alphabet)
    if ew != ev:
        return None
    # zw^-1 w zw = ze^-1 zv^-1 v zv ze
    z = zw.conjugator + inverse(ze.conjugator) + inverse(zv.conjugator)
    return ConjugacyWitness(normal_form(p, z), zw.trace + ze.trace)


def i_cyclic_permutations(p: Presentation, w: Sequence[int], alphabet=None) -> list[Word]:
    """Cyclic permutations of w at the pivot-syllable boundaries.

    w must start with a pivot syllable in its HNN normal form.
    """
    form = syllable_decompose(p, w, alphabet)
    k = form.syllable_length
    if k == 0:
        return [tuple(w)]
    if form.prefixes[0]:
        raise PreconditionError("the syllable form must start with the pivot")
    t = form.pivot
    segs = list(form.prefixes[1:]) + [form.tail]
    syll = [tuple([t if a > 0 else -t] * abs(a)) + s for a, s in zip(form.exponents, segs)]
    return [tuple(x for s in syll[i:] + syll[:i] for x in s) for i in range(k)]


# -- the decision procedure ----------------------------------------------------

def _rotate_at(w: Word, i: int) -> tuple[Word, Word]:
    """(w[i:] w[:i], w[:i]); the second entry conjugates w to the first."""
    return w[i:] + w[:i], w[:i]


def _conj_block(p: Presentation, u: Word, v: Word, alphabet: frozenset,
                counter: OpCounter) -> Word | None:
    """Conjugator for two cyclically reduced blocks with symbol set ``alphabet``."""
    t = min(alphabet)
    a = associated_symbols(p, t, alphabet)
    j = next(k for k, x in enumerate(v) if sym(x) == t)
    v2, rv = _rotate_at(v, j)
    ev, zv = _exhaust_or_keep(p, v2, a, alphabet, counter)
    for i, x in enumerate(u):
        if sym(x) != t:
            continue
        counter.other += 1
        u2, ru = _rotate_at(u, i)
        eu, zu = _exhaust_or_keep(p, u2, a, alphabet, counter)
        if eu == ev:
            # zu^-1 ru^-1 u ru zu = zv^-1 rv^-1 v rv zv
            return ru + zu + inverse(zv) + inverse(rv)
    return None


def _exhaust_or_keep(p, w, a, alphabet, counter) -> tuple[Word, Word]:
    if not a:
        return normal_form(p, w, counter), ()
    e, wit = _exhaust(p, w, a, counter)
    return e, wit.conjugator


def _conj_cr(p: Presentation, u: Word, v: Word, counter: OpCounter) -> Word | None:
    """Conjugator for cyclically reduced u, v with equal letter multisets."""
    if not u:
        return ()
    bu = block_decomposition(p, u, counter)
    bv = block_decomposition(p, v, counter)
    if len(bu.blocks) == 1:
        return _conj_block(p, u, v, bu.components[0], counter)
    z: list[int] = []
    for cu, comp in zip(bu.blocks, bu.components):
        cv = restrict(v, comp)
        zi = _conj_cr(p, cu, cv, counter)
        if zi is None:
            return None
        z.extend(zi)
    return tuple(z)


def are_conjugate(p: Presentation, g: Sequence[int], h: Sequence[int],
                  counter: OpCounter = NULL) -> ConjugacyWitness | None:
    """Decide conjugacy; on success return z with z^-1 g z = h."""
    g0 = reduce_to_geodesic(p, g, counter)
    h0 = reduce_to_geodesic(p, h, counter)
    g1, zg = cyclically_reduce(p, g0, counter)
    h1, zh = cyclically_reduce(p, h0, counter)
    counter.other += 2
    if len(g1) != len(h1) or Counter(g1) != Counter(h1):
        return None
    z1 = _conj_cr(p, g1, h1, counter)
    if z1 is None:
        return None
    z = _shorten_conjugator(p, normal_form(p, zg.conjugator + z1 + inverse(zh.conjugator)), h0)
    return ConjugacyWitness(z, zg.trace + (("core", z1),) + zh.trace)


def _shorten_conjugator(p: Presentation, z: Word, h: Word) -> Word:
    """Trade z for z h^{+-1} (also a conjugator) while that is ShortLex smaller."""
    hi = inverse(h)
    for _ in range(2 * len(z) + 1):
        best = min((normal_form(p, z + h), normal_form(p, z + hi)), key=shortlex_key)
        if shortlex_key(best) >= shortlex_key(z):
            break
        z = best
    return z


def conjugacy_representative(p: Presentation, w: Sequence[int]) -> Word:
    """A canonical word for the conjugacy class of w.

    Per block: the ShortLex-least exhausted form over the rotations at pivot
    letters; blocks are concatenated in component order.
    """
    c, _ = cyclically_reduce(p, reduce_to_geodesic(p, w))
    if not c:
        return ()
    bd = block_decomposition(p, c)
    out: list[int] = []
    for b, comp in zip(bd.blocks, bd.components):
        t = min(comp)
        a = associated_symbols(p, t, comp)
        forms = [_exhaust_or_keep(p, _rotate_at(b, i)[0], a, comp, NULL)[0]
                 for i, x in enumerate(b) if sym(x) == t]
        out.extend(min(forms, key=shortlex_key))
    return normal_form(p, out)


def double_coset_canonical(p: Presentation, g: Sequence[int], left: Iterable[int],
                           right: Iterable[int], counter: OpCounter = NULL) -> tuple[Word, Word, Word]:
    """(g', h1, h2) with g = h1 g' h2, h1 in G(left), h2 in G(right).

    g' has trivial left ``left``-divisor and trivial right ``right``-divisor
    and depends only on the double coset.
    """
    ys, zs = frozenset(left), frozenset(right)
    c = reduce_to_geodesic(p, g, counter)
    h1: list[int] = []
    h2: Word = ()
    while True:
        d = parabolic_gd(p, c, ys, counter)
        if d:
            c = _strip_left(p, d, c)
            h1.extend(d)
        e = parabolic_gd_right(p, c, zs, counter)
        if e:
            c = inverse(_strip_left(p, inverse(e), inverse(c)))
            h2 = e + h2
        if not d and not e:
            break
    return normal_form(p, c), normal_form(p, h1), normal_form(p, h2)
