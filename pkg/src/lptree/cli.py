"""Command-line interface.

Records are read from positional arguments or, when none are given, one
per line from stdin.  Exit status: 0 success, 1 verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
import time
from itertools import islice

from .codec import encode, encode_code, format_stats, parse_code, parse_record
from .counting import catalan, formula
from .errors import LinkPatternError
from .family import Family
from .parallel import map_level
from .render import FORMATS, RenderSpec, render
from .stats import convert, stat_record
from .temperley_lieb import apply_word, preimages
from .tree import FrameProbe, children, iterate_level, node_at, parent, path_code
from .verify import SUITES, run_suite

FAMILIES = [f.value for f in Family]
BY_FAMILY = {"exposure": Family.LP, "interaction": Family.LP, "ldl": Family.DYCK, "peaks": Family.DYCK}


def _records(args):
    lines = args.records if args.records else (line for line in sys.stdin)
    for line in lines:
        if line.strip():
            yield parse_record(line, args.family)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_generate(args) -> int:
    if args.jobs > 1 and args.limit is None:
        for shard in map_level(args.family, args.size, "records", args.stats, args.jobs):
            for line in shard:
                print(line)
        return 0
    for node in islice(iterate_level(args.family, args.size), args.limit):
        extra = format_stats(stat_record(node).items()) if args.stats else ""
        print(encode(node) + extra)
    return 0


def cmd_count(args) -> int:
    n = args.size
    if args.by is None:
        expected = catalan(n)
        if not args.verify:
            print(f"{n}\t{expected}")
            print(f"TOTAL\t{expected}")
            return 0
        observed = sum(map_level(args.family, n, "count", None, args.jobs))
        ok = observed == expected
        print("value\tformula\tobserved\tdiff")
        print(f"{n}\t{expected}\t{observed}\t{observed - expected}")
        print(f"TOTAL\t{expected}\t{observed}\t{'ok' if ok else 'MISMATCH'}")
        return 0 if ok else 1

    family = Family(args.family) if args.family_given else BY_FAMILY[args.by]
    expected = formula(args.by, n)
    if not args.verify:
        for value, count in expected.items():
            print(f"{value}\t{count}")
        print(f"TOTAL\t{sum(expected.values())}")
        return 0
    observed = {}
    for shard in map_level(family, n, "histogram", args.by, args.jobs):
        for value, count in shard.items():
            observed[value] = observed.get(value, 0) + count
    ok = True
    print("value\tformula\tobserved\tdiff")
    for value in sorted(set(expected) | set(observed)):
        want, got = expected.get(value, 0), observed.get(value, 0)
        ok &= want == got
        print(f"{value}\t{want}\t{got}\t{got - want}")
    want, got = sum(expected.values()), sum(observed.values())
    print(f"TOTAL\t{want}\t{got}\t{'ok' if ok and want == got else 'MISMATCH'}")
    return 0 if ok and want == got else 1


def cmd_map(args) -> int:
    args.family = args.source
    for node in _records(args):
        print(encode(convert(node, args.target)))
    return 0


def cmd_children(args) -> int:
    for node in _records(args):
        for kid in children(node):
            print(encode(kid))
    return 0


def cmd_parent(args) -> int:
    for node in _records(args):
        print(encode(parent(node)))
    return 0


def cmd_code(args) -> int:
    if args.at is not None:
        print(encode(node_at(args.family, parse_code(args.at))))
        return 0
    for node in _records(args):
        print(encode_code(path_code(node)))
    return 0


def cmd_apply(args) -> int:
    word = args.word if args.word is not None else [args.gen]
    args.family = Family.LP
    for pi in _records(args):
        result = apply_word(pi, word)
        print(f"{encode(result.pattern)}\tloops={result.loops}")
    return 0


def cmd_preimages(args) -> int:
    args.family = Family.LP
    for pi in _records(args):
        for tau in preimages(pi, args.gen):
            print(encode(tau))
    return 0


def cmd_verify(args) -> int:
    ok = True
    for check in run_suite(args.suite, args.size, args.jobs):
        print(check.line())
        ok &= check.passed
    return 0 if ok else 1


def cmd_render(args) -> int:
    spec = RenderSpec(args.format, size=args.px, gap=args.gap)
    for node in _records(args):
        sys.stdout.write(render(node, spec))
    return 0


def cmd_bench(args) -> int:
    families = [args.family] if args.family_given else FAMILIES
    for fam in families:
        probe = FrameProbe()
        start = time.perf_counter()
        count = sum(1 for _ in iterate_level(fam, args.size, probe))
        elapsed = time.perf_counter() - start
        rate = count / elapsed if elapsed else float("inf")
        print(f"{fam}\tn={args.size}\tnodes={count}\tseconds={elapsed:.3f}\trate={rate:.0f}/s\tmax_frames={probe.max_frames}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lptree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def family_opt(p, default="lp"):
        p.add_argument("--family", choices=FAMILIES, default=None)
        p.set_defaults(family_default=default)

    def records_opt(p):
        p.add_argument("records", nargs="*", help="records (default: read stdin)")

    p = sub.add_parser("generate", help="stream every node of a level")
    family_opt(p)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("count", help="closed-form counts, optionally checked against the tree")
    family_opt(p)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--by", choices=sorted(BY_FAMILY))
    p.add_argument("--verify", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("map", help="convert records between families")
    p.add_argument("--from", dest="source", choices=FAMILIES, required=True)
    p.add_argument("--to", dest="target", choices=FAMILIES, required=True)
    records_opt(p)
    p.set_defaults(func=cmd_map)

    for name, fn, text in (("children", cmd_children, "list children in rank order"),
                           ("parent", cmd_parent, "print the parent")):
        p = sub.add_parser(name, help=text)
        family_opt(p)
        records_opt(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("code", help="path code of records, or the node at --at")
    family_opt(p)
    p.add_argument("--at", help="comma-separated ranks")
    records_opt(p)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("apply", help="apply a generator or a word to link patterns")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--gen", type=int)
    group.add_argument("--word", type=_ints)
    records_opt(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("preimages", help="preimages of link patterns under e_i")
    p.add_argument("--gen", type=int, required=True)
    records_opt(p)
    p.set_defaults(func=cmd_preimages)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw records")
    family_opt(p)
    p.add_argument("--format", choices=[*FORMATS, "ascii"], default="ascii-arc")
    p.add_argument("--px", type=int, default=240, help="svg size hint")
    p.add_argument("--gap", type=int, default=0, help="cut used by arc drawings")
    records_opt(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="time level streaming")
    family_opt(p)
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "family_default"):
        args.family_given = args.family is not None
        if args.family is None:
            args.family = args.family_default
    if getattr(args, "size", 1) < 1:
        parser.error("--size must be positive")
    try:
        return args.func(args)
    except LinkPatternError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
