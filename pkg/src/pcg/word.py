"""Words over X ∪ X⁻¹, geodesic reduction and operation counting.

A letter is a nonzero int: ``+s`` is the symbol ``x_s`` and ``-s`` its
inverse.  A word is a tuple of letters.  Letter identity (which occurrence
is which) is tracked by parallel id lists where an algorithm needs it.
"""
from __future__ import annotations

from dataclasses import dataclass, asdict
from typing import Iterable, Sequence

from .presentation import Presentation

Word = tuple  # tuple[int, ...]


class WordError(ValueError):
    """Malformed word text or unknown symbol."""


class PreconditionError(ValueError):
    """An operation was called on inputs outside its domain."""


@dataclass
class OpCounter:
    """Tallies of the three basic operations plus other elementary operations.

    ``other`` counts elementary operations that are not basic ones (abelian
    sorting, maximal commuting divisors, occurrence sets, components, ...).
    """

    cancellations: int = 0
    transpositions: int = 0
    queries: int = 0
    other: int = 0

    @property
    def basic(self) -> int:
        return self.cancellations + self.transpositions + self.queries

    @property
    def elementary(self) -> int:
        return self.basic + self.other

    def as_dict(self) -> dict:
        d = asdict(self)
        d["basic"] = self.basic
        d["elementary"] = self.elementary
        return d


class _NullCounter(OpCounter):
    # absorbs increments so call sites need no None checks
    def __setattr__(self, name, value):
        pass


NULL = _NullCounter()


def sym(letter: int) -> int:
    return letter if letter > 0 else -letter


def letter_key(letter: int) -> int:
    """Order x1 < x1^-1 < x2 < x2^-1 < ..."""
    return 2 * letter if letter > 0 else -2 * letter + 1


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def parse_word(p: Presentation, text: str) -> Word:
    out = []
    for tok in text.split():
        if tok == "1":
            continue
        name, caret, exp = tok.partition("^")
        if caret:
            try:
                e = int(exp)
            except ValueError:
                raise WordError(f"malformed token: {tok!r}") from None
            if e == 0:
                continue
        else:
            e = 1
        if name not in p.names:
            raise WordError(f"unknown symbol: {name!r}")
        s = p.names.index(name) + 1
        out.extend([s if e > 0 else -s] * abs(e))
    return tuple(out)


def format_word(p: Presentation, w: Sequence[int]) -> str:
    if not w:
        return "1"
    return " ".join(p.names[x - 1] if x > 0 else p.names[-x - 1] + "^-1" for x in w)


def word_to_json(p: Presentation, w: Sequence[int]) -> list:
    return [{"s": p.name(sym(x)), "e": 1 if x > 0 else -1} for x in w]


def word_from_json(p: Presentation, data: Iterable[dict]) -> Word:
    out = []
    for item in data:
        s = p.index(item["s"])
        if item["e"] not in (1, -1):
            raise WordError(f"exponent must be 1 or -1, got {item['e']!r}")
        out.append(s * item["e"])
    return tuple(out)


def reduce_tracked(p: Presentation, w: Sequence[int], ids: Sequence | None = None,
                   counter: OpCounter = NULL):
    """Reduce ``w`` to a geodesic word, carrying one id per letter.

    Letters are read left to right.  Each new letter looks back over the
    letters it commutes with; meeting its inverse, the pair cancels.
    Returns ``(word, kept_ids, cancelled_pairs)`` where each cancelled pair
    is ``(id_of_earlier_letter, id_of_later_letter)``.
    """
    if ids is None:
        ids = range(len(w))
    comm = p.comm
    res: list[int] = []
    rid: list = []
    pairs = []
    for x, i in zip(w, ids):
        counter.queries += 1
        cx = comm[x if x > 0 else -x]
        j = len(res) - 1
        while j >= 0:
            y = res[j]
            if y == -x:
                break
            if (y if y > 0 else -y) not in cx:
                j = -1
                break
            j -= 1
        if j >= 0:
            if j != len(res) - 1:
                counter.transpositions += 1
            counter.cancellations += 1
            pairs.append((rid[j], i))
            del res[j]
            del rid[j]
        else:
            res.append(x)
            rid.append(i)
    return tuple(res), rid, pairs


def reduce_to_geodesic(p: Presentation, w: Sequence[int], counter: OpCounter = NULL) -> Word:
    """A geodesic word equal to ``w``, obtained by commutations and cancellations only."""
    res, _, _ = reduce_tracked(p, w, counter=counter)
    assert (len(w) - len(res)) % 2 == 0
    return res


def is_geodesic(p: Presentation, w: Sequence[int]) -> bool:
    return len(reduce_to_geodesic(p, w)) == len(w)


def geodesic_length(p: Presentation, w: Sequence[int]) -> int:
    return len(reduce_to_geodesic(p, w))


def alpha(p: Presentation, w: Sequence[int]) -> frozenset[int]:
    """Symbols occurring in the geodesic form of ``w``."""
    return frozenset(sym(x) for x in reduce_to_geodesic(p, w))


def commuting_complement(p: Presentation, w: Sequence[int]) -> frozenset[int]:
    """Generators of the subgroup of symbols outside alpha(w) that commute with w."""
    a = alpha(p, w)
    return frozenset(s for s in p.centralizer_symbols(a) if s not in a)


def is_abelian(p: Presentation, w: Sequence[int]) -> bool:
    a = sorted({sym(x) for x in w})
    return all(p.commutes(s, t) for k, s in enumerate(a) for t in a[k + 1:])


def restrict(w: Sequence[int], syms) -> Word:
    """Image under the retraction onto the parabolic subgroup on ``syms``."""
    return tuple(x for x in w if sym(x) in syms)
