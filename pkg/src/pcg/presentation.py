"""Presentations of partially commutative groups.

A presentation is an ordered alphabet ``x1 < x2 < ... < xr`` together with
the set of commuting pairs.  Symbols are the integers ``1..r``; names only
appear at the I/O boundary.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

SymbolSet = frozenset  # frozenset[int] of 1-based symbol indices


class PresentationError(ValueError):
    """Raised for malformed presentation files or inconsistent relations."""


def _check_name(name: str) -> None:
    if not name or any(c.isspace() for c in name) or "^" in name or name == "1":
        raise PresentationError(f"invalid symbol name: {name!r}")


@dataclass(frozen=True)
class Presentation:
    names: tuple[str, ...]
    pairs: frozenset[tuple[int, int]]
    # comm[i] is the set of symbols commuting with i, i itself included
    comm: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @classmethod
    def from_pairs(cls, names: Sequence[str], pairs: Iterable[tuple[int, int]]) -> "Presentation":
        names = tuple(names)
        if not names:
            raise PresentationError("a presentation needs at least one symbol")
        for n in names:
            _check_name(n)
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise PresentationError(f"duplicate symbol: {dup}")
        r = len(names)
        closed = set()
        for i, j in pairs:
            if not (1 <= i <= r and 1 <= j <= r):
                raise PresentationError(f"commuting pair ({i}, {j}) out of range")
            if i == j:
                raise PresentationError(f"self-pair for symbol {names[i - 1]}")
            closed.add((i, j))
            closed.add((j, i))
        comm = [set() for _ in range(r + 1)]
        for i in range(1, r + 1):
            comm[i].add(i)
        for i, j in closed:
            comm[i].add(j)
        return cls(names, frozenset(closed), tuple(frozenset(c) for c in comm))

    @classmethod
    def from_names(cls, names: Sequence[str], commuting: Iterable[tuple[str, str]] = ()) -> "Presentation":
        index = {n: k + 1 for k, n in enumerate(names)}
        pairs = []
        for a, b in commuting:
            if a not in index or b not in index:
                unknown = a if a not in index else b
                raise PresentationError(f"commuting pair names unknown symbol: {unknown}")
            pairs.append((index[a], index[b]))
        return cls.from_pairs(names, pairs)

    @property
    def rank(self) -> int:
        return len(self.names)

    @property
    def symbols(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name) + 1
        except ValueError:
            raise PresentationError(f"unknown symbol: {name}") from None

    def name(self, s: int) -> str:
        return self.names[s - 1]

    def commutes(self, i: int, j: int) -> bool:
        return j in self.comm[i]

    def commutes_with_all(self, i: int, syms: Iterable[int]) -> bool:
        c = self.comm[i]
        return all(s in c for s in syms)

    def centralizer_symbols(self, syms: Iterable[int]) -> frozenset[int]:
        """Symbols commuting with every symbol of ``syms`` (members of ``syms`` may qualify)."""
        out = set(range(1, self.rank + 1))
        for s in syms:
            out &= self.comm[s]
        return frozenset(out)

    def non_commutation_components(self, syms: Iterable[int]) -> list[frozenset[int]]:
        """Connected components of the non-commutation graph restricted to ``syms``.

        Components are ordered by their least symbol.
        """
        todo = sorted(set(syms))
        seen: set[int] = set()
        out = []
        for start in todo:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            seen.add(start)
            while stack:
                a = stack.pop()
                for b in todo:
                    if b not in seen and b not in self.comm[a]:
                        seen.add(b)
                        comp.add(b)
                        stack.append(b)
            out.append(frozenset(comp))
        return out

    def is_connected(self, syms: Iterable[int]) -> bool:
        return len(self.non_commutation_components(syms)) <= 1

    def to_text(self) -> str:
        lines = ["symbols: " + " ".join(self.names)]
        for i, j in sorted(self.pairs):
            if i < j:
                lines.append(f"commute: {self.name(i)} {self.name(j)}")
        return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    """Parse the line-based presentation format.

    ``symbols: n1 n2 ...`` must occur exactly once; each ``commute: a b``
    line declares a commuting pair.  ``#`` starts a comment.
    """
    names = None
    commuting = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise PresentationError(f"line {lineno}: expected 'key: value'")
        toks = rest.split()
        if key == "symbols":
            if names is not None:
                raise PresentationError(f"line {lineno}: 'symbols' declared twice")
            names = toks
        elif key == "commute":
            if len(toks) != 2:
                raise PresentationError(f"line {lineno}: 'commute' takes exactly two symbols")
            commuting.append((lineno, toks[0], toks[1]))
        else:
            raise PresentationError(f"line {lineno}: unknown key {key!r}")
    if names is None:
        raise PresentationError("missing 'symbols' line")
    index = {}
    for n in names:
        _check_name(n)
        if n in index:
            raise PresentationError(f"duplicate symbol: {n}")
        index[n] = len(index) + 1
    pairs = []
    for lineno, a, b in commuting:
        for n in (a, b):
            if n not in index:
                raise PresentationError(f"line {lineno}: unknown symbol {n}")
        if a == b:
            raise PresentationError(f"line {lineno}: self-pair {a}")
        pairs.append((index[a], index[b]))
    return Presentation.from_pairs(names, pairs)


def load_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


# Common families used throughout tests, docs and the bench harness.

def free_group(r: int, names: Sequence[str] | None = None) -> Presentation:
    return Presentation.from_pairs(names or [f"x{i}" for i in range(1, r + 1)], [])


def free_abelian(r: int, names: Sequence[str] | None = None) -> Presentation:
    pairs = itertools.combinations(range(1, r + 1), 2)
    return Presentation.from_pairs(names or [f"x{i}" for i in range(1, r + 1)], pairs)


def far_commuting(r: int) -> Presentation:
    """x_i and x_j commute exactly when |i - j| > 1."""
    pairs = [(i, j) for i, j in itertools.combinations(range(1, r + 1), 2) if j - i > 1]
    return Presentation.from_pairs([f"x{i}" for i in range(1, r + 1)], pairs)


def abelian_free_product(r: int) -> Presentation:
    """Free abelian group on x1..x_{r-1}, free product with <x_r>."""
    pairs = itertools.combinations(range(1, r), 2)
    return Presentation.from_pairs([f"x{i}" for i in range(1, r + 1)], pairs)


def random_presentation(r: int, rng, density: float = 0.5, connected: bool = False) -> Presentation:
    """Random commutation graph; ``connected`` forces a connected non-commutation graph."""
    while True:
        pairs = [(i, j) for i, j in itertools.combinations(range(1, r + 1), 2) if rng.random() < density]
        p = Presentation.from_pairs([f"x{i}" for i in range(1, r + 1)], pairs)
        if not connected or p.is_connected(p.symbols):
            return p
