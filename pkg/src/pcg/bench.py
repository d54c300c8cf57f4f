"""Operation-count benchmarks.

Every algorithm is run on seeded random inputs and its OpCounter is compared
against an explicit linear bound, or a growth exponent is fitted by least
squares on the log-log means.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .conjugacy import are_conjugate, cyclically_reduce
from .divisibility import chain_decomposition, gcd_lm_of_divisors, parabolic_gd
from .presentation import Presentation, random_presentation
from .rewrite import normal_form
from .word import OpCounter, Word, inverse, reduce_to_geodesic

DEFAULT_SIZES = (64, 128, 256, 512, 1024)


@dataclass
class Check:
    name: str
    bound: str
    passed: bool
    worst: float  # worst ratio to the bound, or the fitted exponent
    means: dict = field(default_factory=dict)  # n -> mean op count


@dataclass
class BenchReport:
    seed: int
    rank: int
    sizes: tuple
    samples: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"seed={self.seed} r={self.rank} sizes={list(self.sizes)} samples={self.samples}"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            out.append(f"{mark} {c.name}: {c.bound} (observed {c.worst:.3f})")
        return out


def _appendable(p: Presentation, w: list, x: int) -> bool:
    """True iff w x is geodesic, for geodesic w: x^-1 must not reach the end."""
    cx = p.comm[abs(x)]
    for y in reversed(w):
        if y == -x:
            return False
        if abs(y) not in cx:
            return True
    return True


def random_geodesic(p: Presentation, n: int, rng: random.Random) -> Word:
    """Uniform letters, rejecting any that would make the word non-geodesic."""
    w: list[int] = []
    r = p.rank
    while len(w) < n:
        x = rng.randint(1, r) * rng.choice((1, -1))
        if _appendable(p, w, x):
            w.append(x)
    return tuple(w)


def random_cyclically_reduced(p: Presentation, n: int, rng: random.Random) -> Word:
    while True:
        c, _ = cyclically_reduce(p, random_geodesic(p, n, rng))
        if len(c) >= n // 2:
            return c


def fit_exponent(sizes, means) -> float:
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.maximum(np.asarray(means, dtype=float), 1.0))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def _linear(name, bound_text, factor, runs, sizes) -> Check:
    worst = 0.0
    means = {}
    for n in sizes:
        vals = runs[n]
        means[n] = sum(vals) / len(vals)
        worst = max(worst, max(v / (factor * n) for v in vals))
    return Check(name, bound_text, worst <= 1.0, worst, means)


def _fitted(name, limit, runs, sizes) -> Check:
    means = {n: sum(runs[n]) / len(runs[n]) for n in sizes}
    e = fit_exponent(list(sizes), [means[n] for n in sizes])
    return Check(name, f"fitted exponent <= {limit}", e <= limit, e, means)


def run_bench(seed: int = 0, sizes=DEFAULT_SIZES, samples: int = 50, rank: int = 8,
              conj_sizes=None, conj_samples: int | None = None) -> BenchReport:
    rng = random.Random(seed)
    p = random_presentation(rank, rng, density=0.5, connected=True)
    sizes = tuple(sizes)
    report = BenchReport(seed, rank, sizes, samples)
    ops = {k: {n: [] for n in sizes} for k in ("nf", "chains", "gd", "gdy", "cr")}
    for n in sizes:
        for _ in range(samples):
            w = random_geodesic(p, n, rng)

            c = OpCounter()
            normal_form(p, w, c)
            ops["nf"][n].append(c.elementary)

            c = OpCounter()
            chain_decomposition(p, w, c)
            ops["chains"][n].append(c.elementary)

            i, j = rng.randint(0, n), rng.randint(0, n)
            c = OpCounter()
            gcd_lm_of_divisors(p, w[:i], w[:j], w, c)
            ops["gd"][n].append(c.elementary)

            ys = [s for s in range(1, rank + 1) if rng.random() < 0.5]
            c = OpCounter()
            parabolic_gd(p, w, ys, c)
            ops["gdy"][n].append(c.elementary)

            # conjugate by a random word to force real cyclic reduction work
            z = random_geodesic(p, n // 2, rng)
            g = reduce_to_geodesic(p, inverse(z) + w + z)
            c = OpCounter()
            cyclically_reduce(p, g, c)
            ops["cr"][n].append(c.elementary)

    r = rank
    report.checks.append(_linear("geodesic normal form", "elementary <= 2n", 2, ops["nf"], sizes))
    report.checks.append(_linear("chain decomposition", f"elementary <= 3rn = {3 * r}n", 3 * r,
                                 ops["chains"], sizes))
    report.checks.append(_linear("gcd/lm of divisors", "elementary <= 4n", 4, ops["gd"], sizes))
    report.checks.append(_linear("parabolic divisor", f"elementary <= (3r+1)n = {3 * r + 1}n",
                                 3 * r + 1, ops["gdy"], sizes))
    report.checks.append(_fitted("cyclic reduction", 2.2, ops["cr"], sizes))

    conj_sizes = tuple(conj_sizes or sizes)
    conj_samples = conj_samples or samples
    crc = {n: [] for n in conj_sizes}
    full = {n: [] for n in conj_sizes}
    for n in conj_sizes:
        for _ in range(conj_samples):
            u = random_cyclically_reduced(p, n, rng)
            # a conjugate that is again cyclically reduced: rotate the word
            k = rng.randrange(len(u)) if u else 0
            v = u[k:] + u[:k]
            c = OpCounter()
            are_conjugate(p, u, v, c)
            crc[n].append(c.basic)

            z = random_geodesic(p, n // 2, rng)
            g = reduce_to_geodesic(p, inverse(z) + u + z)
            c = OpCounter()
            are_conjugate(p, g, v, c)
            full[n].append(c.basic)
    report.checks.append(_fitted("conjugacy, cyclically reduced inputs (basic)", 2.3, crc, conj_sizes))
    report.checks.append(_fitted("conjugacy, arbitrary inputs (basic)", 3.3, full, conj_sizes))
    return report
