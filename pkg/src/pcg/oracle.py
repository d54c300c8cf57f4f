"""Brute-force reference implementations for small instances.

Nothing here is meant to scale; every entry point enforces hard caps and
raises ``OracleBoundError`` beyond them.  The only shared machinery with the
rest of the package is free reduction to some geodesic word.
"""
from __future__ import annotations

import heapq
import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .presentation import Presentation
from .rewrite import prec_key, shortlex_key
from .word import Word, inverse, letter_key, reduce_to_geodesic, sym

MAX_CLASS = 10 ** 6


class OracleBoundError(RuntimeError):
    pass


def max_length() -> int:
    return int(os.environ.get("PCG_ORACLE_MAX_LEN", "10"))


def _check(p: Presentation, w: Sequence[int], limit: int | None = None) -> None:
    limit = max_length() if limit is None else limit
    if len(w) > limit:
        raise OracleBoundError(f"word length {len(w)} exceeds oracle bound {limit}")


@dataclass(frozen=True)
class GeodesicClass:
    words: frozenset
    shortlex_min: Word
    prec_min: Word


def _swaps(p: Presentation, u: Word):
    for i in range(len(u) - 1):
        a, b = u[i], u[i + 1]
        if sym(a) != sym(b) and p.commutes(sym(a), sym(b)):
            yield u[:i] + (b, a) + u[i + 2:]


@lru_cache(maxsize=65536)
def _closure(p: Presentation, w: Word) -> frozenset:
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for v in _swaps(p, u):
            if v not in seen:
                seen.add(v)
                if len(seen) > MAX_CLASS:
                    raise OracleBoundError("geodesic class too large")
                queue.append(v)
    return frozenset(seen)


def enumerate_geodesics(p: Presentation, w: Sequence[int]) -> GeodesicClass:
    """All geodesic words for the element of the geodesic word ``w``."""
    w = tuple(w)
    _check(p, w)
    if len(reduce_to_geodesic(p, w)) != len(w):
        raise ValueError("enumerate_geodesics needs a geodesic word")
    words = _closure(p, w)
    syms = tuple(range(1, p.rank + 1))
    return GeodesicClass(words, min(words, key=shortlex_key),
                         min(words, key=lambda u: prec_key(u, syms)))


def reachable_geodesics(p: Presentation, w: Sequence[int]) -> frozenset:
    """Shortest words reachable from w by commuting swaps and adjacent cancellations.

    Independent of the package's reduction routine; exponential.
    """
    w = tuple(w)
    _check(p, w)
    seen = {w}
    queue = deque([w])
    best = len(w)
    while queue:
        u = queue.popleft()
        best = min(best, len(u))
        nxt = list(_swaps(p, u))
        nxt += [u[:i] + u[i + 2:] for i in range(len(u) - 1) if u[i] == -u[i + 1]]
        for v in nxt:
            if v not in seen:
                seen.add(v)
                if len(seen) > MAX_CLASS:
                    raise OracleBoundError("reduction search too large")
                queue.append(v)
    return frozenset(u for u in seen if len(u) == best)


def bruteforce_min(p: Presentation, w: Sequence[int], order: str = "shortlex") -> Word:
    cls = enumerate_geodesics(p, reduce_to_geodesic(p, w))
    if order == "shortlex":
        return cls.shortlex_min
    if order == "prec":
        return cls.prec_min
    raise ValueError(f"unknown order {order!r}")


def trace_key(p: Presentation, w: Sequence[int]) -> Word:
    """ShortLex-least linearisation of the geodesic form, by greedy topological sort.

    Used as the canonical set key; agrees with ``bruteforce_min`` but costs
    O(n^2) instead of a class enumeration.
    """
    g = reduce_to_geodesic(p, w)
    n = len(g)
    preds = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    for j in range(n):
        for i in range(j):
            a, b = sym(g[i]), sym(g[j])
            if a == b or not p.commutes(a, b):
                preds[j] += 1
                succ[i].append(j)
    heap = [(letter_key(g[i]), i) for i in range(n) if preds[i] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, i = heapq.heappop(heap)
        out.append(g[i])
        for j in succ[i]:
            preds[j] -= 1
            if preds[j] == 0:
                heapq.heappush(heap, (letter_key(g[j]), j))
    return tuple(out)


def bruteforce_divisors(p: Presentation, w: Sequence[int]) -> set:
    """All left divisors of the geodesic word w, keyed by ShortLex normal form."""
    cls = enumerate_geodesics(p, w)
    out = set()
    for u in cls.words:
        for k in range(len(u) + 1):
            out.add(trace_key(p, u[:k]))
    return out


def bruteforce_right_divisors(p: Presentation, w: Sequence[int]) -> set:
    return {trace_key(p, inverse(d)) for d in bruteforce_divisors(p, inverse(w))}


def _letters(p: Presentation):
    for s in range(1, p.rank + 1):
        yield s
        yield -s


def _conj(p: Presentation, w: Word, y: int) -> Word:
    return reduce_to_geodesic(p, (-y,) + tuple(w) + (y,))


def bruteforce_cyclic_reduction(p: Presentation, w: Sequence[int]) -> Word:
    """Shorten by single-letter conjugations until none helps."""
    w = reduce_to_geodesic(p, w)
    while True:
        for y in _letters(p):
            v = _conj(p, w, y)
            if len(v) < len(w):
                w = v
                break
        else:
            return w


def cr_set(p: Presentation, w: Sequence[int], limit: int = 100000) -> set:
    """All cyclically reduced conjugates of w, closed under length-preserving letter conjugation."""
    _check(p, reduce_to_geodesic(p, w))
    start = bruteforce_cyclic_reduction(p, w)
    seen = {trace_key(p, start)}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for y in _letters(p):
            v = _conj(p, u, y)
            if len(v) == len(u):
                k = trace_key(p, v)
                if k not in seen:
                    seen.add(k)
                    if len(seen) > limit:
                        raise OracleBoundError("CR set too large")
                    queue.append(v)
    return seen


def bruteforce_conjugate(p: Presentation, u: Sequence[int], v: Sequence[int]) -> bool:
    cu = bruteforce_cyclic_reduction(p, u)
    cv = bruteforce_cyclic_reduction(p, v)
    if len(cu) != len(cv):
        return False
    return trace_key(p, cv) in cr_set(p, cu)


def bruteforce_is_cyclically_reduced(p: Presentation, w: Sequence[int]) -> bool:
    w = reduce_to_geodesic(p, w)
    return all(len(_conj(p, w, y)) >= len(w) for y in _letters(p))


def all_words(p: Presentation, n: int):
    """Every word of length exactly n (not necessarily reduced)."""
    if n == 0:
        yield ()
        return
    for w in all_words(p, n - 1):
        for y in _letters(p):
            yield w + (y,)


def parabolic_conjugates(p: Presentation, w: Sequence[int], subset, radius: int) -> dict:
    """Elements g^-1 w g for g in the parabolic subgroup with |g| <= radius, keyed by normal form."""
    letters = [y for y in _letters(p) if sym(y) in subset]
    out = {}
    frontier = [()]
    seen = {()}
    for _ in range(radius + 1):
        nxt = []
        for g in frontier:
            k = trace_key(p, inverse(g) + tuple(w) + g)
            out.setdefault(k, g)
            for y in letters:
                h = reduce_to_geodesic(p, g + (y,))
                if h not in seen and len(h) == len(g) + 1:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return out
