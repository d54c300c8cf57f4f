"""Command-line front end: ``pcg <command> --group FILE words...``."""
from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .bench import DEFAULT_SIZES, run_bench
from .conjugacy import (are_conjugate, block_decomposition, cyclically_reduce, double_coset_canonical,
                        exhausted_form, in_parabolic_conjugacy_class)
from .divisibility import (chain_decomposition, divides_left, divides_right, gcd_lm_of_divisors,
                           gcd_lm_of_right_divisors, gcd_pair, gcd_pair_right, parabolic_gd,
                           parabolic_gd_right, relative_divisor, relative_divisor_right)
from .presentation import Presentation, PresentationError, load_presentation
from .rewrite import kb_normalize, normal_form
from .word import OpCounter, PreconditionError, WordError, format_word, parse_word, reduce_to_geodesic

# command -> number of word arguments
ARITY = {
    "normalize": 1, "geodesic": 1, "divides": 2, "gcd": 2, "lm": 3, "chains": 1,
    "pdiv": 1, "blocks": 1, "cycred": 1, "exhaust": 1, "conjugate": 2, "pconj": 2,
    "dcoset": 1,
}
ORACLE_ARITY = {"geodesics": 1, "min": 1, "crset": 1, "conjugate": 2, "divisors": 1}


class Answer:
    def __init__(self, text: str, result, witness=None):
        self.text = text
        self.result = result
        self.witness = witness


def _subset(p: Presentation, text: str | None) -> frozenset:
    if not text:
        return frozenset()
    return frozenset(p.index(n) for n in text.replace(",", " ").split())


def _geo(p, text):
    return reduce_to_geodesic(p, parse_word(p, text))


def _run(p: Presentation, args, words: list[str], counter: OpCounter) -> Answer:
    f = lambda w: format_word(p, w)  # noqa: E731
    cmd = args.command
    if cmd == "normalize":
        w = parse_word(p, words[0])
        out = kb_normalize(p, w, counter) if args.order == "prec" else normal_form(p, w, counter)
        return Answer(f(out), f(out))
    if cmd == "geodesic":
        out = reduce_to_geodesic(p, parse_word(p, words[0]), counter)
        return Answer(f(out), f(out))
    if cmd == "divides":
        u, w = _geo(p, words[0]), _geo(p, words[1])
        wit = (divides_right if args.right else divides_left)(p, u, w)
        if wit is None:
            return Answer("no", False)
        return Answer(f"yes q={f(wit.quotient)}", True, f(wit.quotient))
    if cmd == "gcd":
        u, v = _geo(p, words[0]), _geo(p, words[1])
        out = normal_form(p, (gcd_pair_right if args.right else gcd_pair)(p, u, v))
        return Answer(f(out), f(out))
    if cmd == "lm":
        u, v, w = (_geo(p, x) for x in words)
        fn = gcd_lm_of_right_divisors if args.right else gcd_lm_of_divisors
        g, l = fn(p, u, v, w, counter)
        return Answer(f(l), f(l))
    if cmd == "chains":
        cd = chain_decomposition(p, _geo(p, words[0]), counter)
        text = " | ".join(f(c) for c in cd.chains) if cd.chains else "1"
        return Answer(text, [f(c) for c in cd.chains])
    if cmd == "pdiv":
        w = _geo(p, words[0])
        if args.wrt is not None:
            fn = relative_divisor_right if args.right else relative_divisor
            out = fn(p, w, _geo(p, args.wrt), counter)
        else:
            fn = parabolic_gd_right if args.right else parabolic_gd
            out = fn(p, w, _subset(p, args.subset), counter)
        return Answer(f(out), f(out))
    if cmd == "blocks":
        bd = block_decomposition(p, _geo(p, words[0]), counter)
        text = " | ".join(f(b) for b in bd.blocks) if bd.blocks else "1"
        return Answer(text, [f(b) for b in bd.blocks])
    if cmd == "cycred":
        out, wit = cyclically_reduce(p, _geo(p, words[0]), counter)
        z = f(wit.conjugator)
        return Answer(f"{f(out)} z={z}" if args.witness else f(out), f(out), z)
    if cmd == "exhaust":
        out, wit = exhausted_form(p, _geo(p, words[0]), _subset(p, args.subset), counter)
        z = f(wit.conjugator)
        return Answer(f"{f(out)} z={z}" if args.witness else f(out), f(out), z)
    if cmd == "conjugate":
        wit = are_conjugate(p, parse_word(p, words[0]), parse_word(p, words[1]), counter)
        return _decision(f, wit, args.witness)
    if cmd == "pconj":
        wit = in_parabolic_conjugacy_class(p, parse_word(p, words[0]), _geo(p, words[1]),
                                           _subset(p, args.subset), counter)
        return _decision(f, wit, args.witness)
    if cmd == "dcoset":
        rep, h1, h2 = double_coset_canonical(p, parse_word(p, words[0]), _subset(p, args.left),
                                             _subset(p, args.right), counter)
        return Answer(f"{f(rep)} h1={f(h1)} h2={f(h2)}", f(rep), {"h1": f(h1), "h2": f(h2)})
    if cmd == "oracle":
        return _run_oracle(p, args, words)
    raise AssertionError(cmd)


def _decision(f, wit, show: bool) -> Answer:
    if wit is None:
        return Answer("no", False)
    z = f(wit.conjugator)
    return Answer(f"yes z={z}" if show else "yes", True, z)


def _run_oracle(p: Presentation, args, words: list[str]) -> Answer:
    f = lambda w: format_word(p, w)  # noqa: E731
    what = args.what
    if what == "geodesics":
        cls = oracle.enumerate_geodesics(p, _geo(p, words[0]))
        items = sorted(f(w) for w in cls.words)
        return Answer("\n".join(items), items)
    if what == "min":
        out = oracle.bruteforce_min(p, parse_word(p, words[0]), args.order)
        return Answer(f(out), f(out))
    if what == "crset":
        items = sorted(f(w) for w in oracle.cr_set(p, parse_word(p, words[0])))
        return Answer("\n".join(items), items)
    if what == "conjugate":
        ok = oracle.bruteforce_conjugate(p, parse_word(p, words[0]), parse_word(p, words[1]))
        return Answer("yes" if ok else "no", ok)
    if what == "divisors":
        items = sorted(f(w) for w in oracle.bruteforce_divisors(p, _geo(p, words[0])))
        return Answer("\n".join(items), items)
    raise AssertionError(what)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pcg", description="Divisibility and conjugacy in partially commutative groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, help, nwords=1, group=True, choices=None):
        sp = sub.add_parser(name, help=help)
        if choices:
            sp.add_argument("what", choices=choices)
        if group:
            sp.add_argument("--group", required=True, help="presentation file")
            sp.add_argument("--json", action="store_true", help="machine-readable output")
            sp.add_argument("--stdin", action="store_true",
                            help="read one query per line; separate words with ';'")
            sp.add_argument("words", nargs="*", help=f"{nwords} word(s)")
        return sp

    cmd("normalize", "normal form").add_argument("--order", choices=("shortlex", "prec"), default="shortlex")
    cmd("geodesic", "reduce to a geodesic word")
    for name, n, help in (("divides", 2, "is U a divisor of W"), ("gcd", 2, "greatest common divisor"),
                          ("lm", 3, "least common multiple of two divisors of W")):
        cmd(name, help, n).add_argument("--right", action="store_true", help="right-hand version")
    cmd("chains", "chain decomposition")
    sp = cmd("pdiv", "greatest parabolic divisor")
    sp.add_argument("--subset", help="comma-separated symbols")
    sp.add_argument("--wrt", help="word V: divisor commuting with V")
    sp.add_argument("--right", action="store_true")
    cmd("blocks", "block decomposition")
    cmd("cycred", "cyclic reduction").add_argument("--witness", action="store_true")
    sp = cmd("exhaust", "exhausted form")
    sp.add_argument("--subset", required=True)
    sp.add_argument("--witness", action="store_true")
    cmd("conjugate", "decide conjugacy", 2).add_argument("--witness", action="store_true")
    sp = cmd("pconj", "is V conjugate to W by an element of G(Y)", 2)
    sp.add_argument("--subset", required=True)
    sp.add_argument("--witness", action="store_true")
    sp = cmd("dcoset", "double coset canonical representative")
    sp.add_argument("--left", default="", help="symbols of the left subgroup")
    sp.add_argument("--right", default="", help="symbols of the right subgroup")
    sp = cmd("oracle", "brute-force reference computations", choices=sorted(ORACLE_ARITY))
    sp.add_argument("--order", choices=("shortlex", "prec"), default="shortlex")

    sp = cmd("bench", "operation-count benchmarks", group=False)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--sizes", default=",".join(map(str, DEFAULT_SIZES)))
    sp.add_argument("--samples", type=int, default=50)
    sp.add_argument("--rank", type=int, default=8)
    sp.add_argument("--json", action="store_true")
    return ap


def _arity(args) -> int:
    return ORACLE_ARITY[args.what] if args.command == "oracle" else ARITY[args.command]


def _emit(args, words, ans: Answer | None, counter: OpCounter, error: str | None = None) -> str:
    if args.json:
        doc = {"query": {"command": args.command, "words": words}}
        if error is not None:
            doc["error"] = error
        else:
            doc["result"] = ans.result
            if ans.witness is not None:
                doc["witness"] = ans.witness
            doc["counters"] = counter.as_dict()
        return json.dumps(doc)
    return f"error: {error}" if error is not None else ans.text


def _one(p, args, words) -> tuple[str, int]:
    counter = OpCounter()
    need = _arity(args)
    if len(words) != need:
        return _emit(args, words, None, counter, f"expected {need} word(s), got {len(words)}"), 2
    try:
        ans = _run(p, args, words, counter)
    except (WordError, PresentationError) as e:
        return _emit(args, words, None, counter, str(e)), 2
    except (PreconditionError, oracle.OracleBoundError) as e:
        return _emit(args, words, None, counter, str(e)), 1
    return _emit(args, words, ans, counter), 0


def _bench(args) -> int:
    try:
        sizes = tuple(int(s) for s in args.sizes.split(","))
    except ValueError:
        print(f"error: bad --sizes {args.sizes!r}", file=sys.stderr)
        return 2
    rep = run_bench(args.seed, sizes, args.samples, args.rank)
    if args.json:
        print(json.dumps({
            "query": {"command": "bench", "seed": rep.seed, "rank": rep.rank,
                      "sizes": list(rep.sizes), "samples": rep.samples},
            "result": [{"name": c.name, "bound": c.bound, "passed": c.passed, "observed": c.worst,
                        "means": {str(k): v for k, v in c.means.items()}} for c in rep.checks],
        }))
    else:
        print("\n".join(rep.lines()))
    return 0 if rep.passed else 1


def main(argv=None) -> int:
    ap = _parser()
    # words may be interleaved with options; argparse leaves the late ones over
    args, extra = ap.parse_known_args(argv)
    if extra:
        if not hasattr(args, "words") or any(e[:1] == "-" and (e[1:2].isalpha() or e[1:2] == "-") for e in extra):
            ap.error("unrecognized arguments: " + " ".join(extra))
        args.words = list(args.words) + extra
    if args.command == "bench":
        return _bench(args)
    try:
        p = load_presentation(args.group)
    except OSError as e:
        print(f"error: cannot read {args.group}: {e.strerror}", file=sys.stderr)
        return 2
    except PresentationError as e:
        print(f"error: {args.group}: {e}", file=sys.stderr)
        return 2
    if args.stdin:
        for line in sys.stdin:
            line = line.strip()
            words = [w.strip() for w in line.split(";")] if line else []
            text, _ = _one(p, args, words)
            print(text)
        return 0
    text, status = _one(p, args, args.words)
    print(text, file=sys.stdout if status == 0 or args.json else sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
