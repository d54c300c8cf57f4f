"""Normal forms.

Two pre-completed rewriting systems are implemented:

* the ShortLex system: free cancellation plus moves
  ``x_i^e w x_j^f -> x_j^f x_i^e w`` (i > j > every index in w, x_j commutes
  with x_i and with w, x_i does not commute with the first letter of w);
* the HNN system KB_n for the recursive order ``prec``: free cancellation plus
  ``x_i^f w t^e -> w t^e x_i^f`` where t is the least symbol of the current
  level, x_i commutes with t and with w, and neither t nor x_i occurs in w.

``normal_form`` is the fast incremental ShortLex normaliser used as the
canonical key for group elements everywhere else in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .presentation import Presentation
from .word import NULL, OpCounter, PreconditionError, Word, letter_key, reduce_to_geodesic, sym


@dataclass(frozen=True)
class RewriteRuleApplication:
    kind: str  # "cancel" | "bs" | "kb"
    left: int  # first position of the left-hand side
    right: int  # last position of the left-hand side


def _apply(w: Word, rule: RewriteRuleApplication) -> Word:
    l, m = rule.left, rule.right
    if rule.kind == "cancel":
        return w[:l] + w[m + 1:]
    if rule.kind == "bs":
        return w[:l] + (w[m],) + w[l:m] + w[m + 1:]
    return w[:l] + w[l + 1:m + 1] + (w[l],) + w[m + 1:]


# -- ShortLex -----------------------------------------------------------------

def shortlex_key(w: Sequence[int]):
    return (len(w), tuple(letter_key(x) for x in w))


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def shortlex_compare(p: Presentation, u: Sequence[int], v: Sequence[int]) -> int:
    return _cmp(shortlex_key(u), shortlex_key(v))


def _bs_redex_at(p: Presentation, w: Word, m: int):
    x = w[m]
    j = sym(x)
    if m > 0 and w[m - 1] == -x:
        return RewriteRuleApplication("cancel", m - 1, m)
    cj = p.comm[j]
    between: list[int] = []
    for l in range(m - 1, -1, -1):
        s = sym(w[l])
        if s not in cj:
            return None
        if s > j:
            # x_i must not commute with the first letter of w; otherwise
            # x_i w[0] is itself a shorter redex
            if not between or between[-1] not in p.comm[s]:
                return RewriteRuleApplication("bs", l, m)
            return None
        if s == j:
            return None
        between.append(s)
    return None


def bs_redexes(p: Presentation, w: Word) -> list[RewriteRuleApplication]:
    return [r for m in range(len(w)) if (r := _bs_redex_at(p, w, m)) is not None]


def shortlex_normalize(p: Presentation, w: Sequence[int], counter: OpCounter = NULL,
                       rng=None) -> Word:
    """ShortLex-minimal word for ``w`` by exhaustive rewriting.

    The default strategy rewrites the redex with the leftmost right end and
    rescans from the rewritten position.  With ``rng`` a uniformly random
    redex is rewritten at each step.
    """
    w = tuple(w)
    start = 0
    while True:
        if rng is None:
            rule = None
            for m in range(start, len(w)):
                rule = _bs_redex_at(p, w, m)
                if rule is not None:
                    break
        else:
            rules = bs_redexes(p, w)
            rule = rng.choice(rules) if rules else None
        if rule is None:
            return w
        if rule.kind == "cancel":
            counter.cancellations += 1
        else:
            counter.transpositions += 1
        w = _apply(w, rule)
        start = max(rule.left - 1, 0)


def normal_form(p: Presentation, w: Sequence[int], counter: OpCounter = NULL) -> Word:
    """ShortLex normal form built one letter at a time.

    Appending a letter x to a normal word u: one backward scan over the
    letters commuting with x either finds x^-1 (which then cancels) or finds
    the leftmost slot after which every letter exceeds x.  Each appended
    letter therefore costs one query plus at most one transposition or
    cancellation.
    """
    comm = p.comm
    res: list[int] = []
    for x in w:
        counter.queries += 1
        cx = comm[x if x > 0 else -x]
        kx = letter_key(x)
        slot = len(res)
        j = len(res) - 1
        hit = -1
        while j >= 0:
            y = res[j]
            if y == -x:
                hit = j
                break
            if (y if y > 0 else -y) not in cx:
                break
            if letter_key(y) > kx:
                slot = j
            j -= 1
        if hit >= 0:
            if hit != len(res) - 1:
                counter.transpositions += 1
            counter.cancellations += 1
            del res[hit]
        elif slot == len(res):
            res.append(x)
        else:
            counter.transpositions += 1
            res.insert(slot, x)
    return tuple(res)


def equal_elements(p: Presentation, u: Sequence[int], v: Sequence[int]) -> bool:
    return normal_form(p, u) == normal_form(p, v)


# -- the recursive order prec and KB_n ---------------------------------------

def _runs(w: Sequence[int], t: int):
    """Split w at maximal same-sign runs of the pivot t.

    Returns (segments, exponents) with len(segments) == len(exponents) + 1.
    """
    segs: list[list[int]] = [[]]
    exps: list[int] = []
    prev = 0
    for x in w:
        if sym(x) == t:
            if prev == x:
                exps[-1] += 1 if x > 0 else -1
            else:
                if prev != 0:
                    segs.append([])
                exps.append(1 if x > 0 else -1)
            prev = x
        else:
            if prev != 0:
                segs.append([])
                prev = 0
            segs[-1].append(x)
    if prev != 0:
        segs.append([])
    return [tuple(s) for s in segs], exps


def prec_key(w: Sequence[int], symbols: Sequence[int], level: int = 0):
    if level >= len(symbols):
        return (len(w),)
    segs, exps = _runs(w, symbols[level])
    return (len(w), len(exps), tuple(exps),
            tuple(prec_key(s, symbols, level + 1) for s in segs))


def prec_compare(p: Presentation, f: Sequence[int], g: Sequence[int]) -> int:
    syms = tuple(range(1, p.rank + 1))
    return _cmp(prec_key(f, syms), prec_key(g, syms))


def _kb_redexes_at(p: Presentation, w: Word, m: int, strict: bool, first_only: bool):
    x = w[m]
    t = sym(x)
    out = []
    if m > 0 and w[m - 1] == -x:
        out.append(RewriteRuleApplication("cancel", m - 1, m))
        if first_only:
            return out
    ct = p.comm[t]
    between: set[int] = set()
    for l in range(m - 1, -1, -1):
        s = sym(w[l])
        if s <= t:
            break
        if s in ct and s not in between and p.commutes_with_all(s, between):
            if not strict or _kb_irreducible(p, w[l + 1:m]):
                out.append(RewriteRuleApplication("kb", l, m))
                if first_only:
                    return out
            else:
                break
        between.add(s)
    return out


def _kb_irreducible(p: Presentation, w: Word) -> bool:
    return all(not _kb_redexes_at(p, w, m, False, True) for m in range(len(w)))


def kb_redexes(p: Presentation, w: Word) -> list[RewriteRuleApplication]:
    out = []
    for m in range(len(w)):
        out.extend(_kb_redexes_at(p, w, m, True, False))
    return out


def kb_normalize(p: Presentation, w: Sequence[int], counter: OpCounter = NULL, rng=None) -> Word:
    """prec-minimal word for ``w`` by exhaustive application of KB_n.

    With the default leftmost strategy every chosen redex has a reducible-free
    middle part, so the normal-form side condition holds automatically.
    """
    w = tuple(w)
    start = 0
    while True:
        if rng is None:
            rule = None
            for m in range(start, len(w)):
                found = _kb_redexes_at(p, w, m, False, True)
                if found:
                    rule = found[0]
                    break
        else:
            rules = kb_redexes(p, w)
            rule = rng.choice(rules) if rules else None
        if rule is None:
            return w
        if rule.kind == "cancel":
            counter.cancellations += 1
        else:
            counter.transpositions += 1
        w = _apply(w, rule)
        start = max(rule.left - 1, 0)


# -- HNN syllable structure ---------------------------------------------------

@dataclass(frozen=True)
class SyllableForm:
    """w = s_0 t^{a_1} s_1 ... s_{k-1} t^{a_k} v for the pivot t."""

    pivot: int
    prefixes: tuple[Word, ...]
    exponents: tuple[int, ...]
    tail: Word

    @property
    def syllable_length(self) -> int:
        return len(self.exponents)

    def word(self) -> Word:
        out: list[int] = []
        for s, a in zip(self.prefixes, self.exponents):
            out.extend(s)
            out.extend([self.pivot if a > 0 else -self.pivot] * abs(a))
        out.extend(self.tail)
        return tuple(out)


def _level_symbols(p: Presentation, alphabet=None) -> tuple[int, ...]:
    return tuple(sorted(alphabet if alphabet is not None else p.symbols))


def associated_symbols(p: Presentation, pivot: int, alphabet=None) -> frozenset[int]:
    """Generators of the associated subgroup A: symbols above the pivot commuting with it."""
    syms = _level_symbols(p, alphabet)
    return frozenset(s for s in syms if s > pivot and p.commutes(s, pivot))


def syllable_decompose(p: Presentation, w: Sequence[int], alphabet=None) -> SyllableForm:
    """Decompose the HNN normal form of ``w`` along the least symbol of the alphabet."""
    syms = _level_symbols(p, alphabet)
    if any(sym(x) not in syms for x in w):
        raise PreconditionError("word uses symbols outside the alphabet")
    t = syms[0]
    n = kb_normalize(p, w)
    segs, exps = _runs(n, t)
    return SyllableForm(t, tuple(segs[:-1]), tuple(exps), segs[-1])


def _in_subgroup(w: Word, syms) -> bool:
    return all(sym(x) in syms for x in w)


def is_hnn_cyclically_reduced(p: Presentation, w: Sequence[int], alphabet=None) -> bool:
    form = syllable_decompose(p, w, alphabet)
    k = form.syllable_length
    if k == 0:
        return True
    a = associated_symbols(p, form.pivot, alphabet)
    if form.prefixes[0]:
        return False
    if any(_in_subgroup(s, a) for s in form.prefixes[1:]):
        return False
    if not form.tail:
        return (form.exponents[0] > 0) == (form.exponents[-1] > 0)
    return not _in_subgroup(form.tail, a)


def hnn_shape_check(p: Presentation, w: Sequence[int], alphabet=None) -> bool:
    """True iff ``w`` has the shape of an HNN normal form at every level.

    At each level with pivot t, no letter of the associated subgroup inside a
    factor s_i may be movable (by commutations) to the right end of s_i.
    """
    w = tuple(w)
    if len(reduce_to_geodesic(p, w)) != len(w):
        raise PreconditionError("hnn_shape_check needs a geodesic word")
    syms = _level_symbols(p, alphabet)
    if any(sym(x) not in syms for x in w):
        raise PreconditionError("word uses symbols outside the alphabet")
    return _shape_ok(p, w, syms, 0)


def _shape_ok(p: Presentation, w: Word, syms, level: int) -> bool:
    if not w:
        return True
    if level >= len(syms):
        return False
    t = syms[level]
    a = {s for s in syms[level + 1:] if p.commutes(s, t)}
    segs, exps = _runs(w, t)
    for s in segs[:-1]:
        for i, x in enumerate(s):
            if sym(x) in a and p.commutes_with_all(sym(x), (sym(y) for y in s[i + 1:])):
                return False
    return all(_shape_ok(p, s, syms, level + 1) for s in segs)
