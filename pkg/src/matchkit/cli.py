"""Command-line frontend.

Exit codes: 0 success / verification passed, 1 verification found a
counterexample, 2 usage or input error, 3 a resource bound was hit.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .core import (
    CHAINS,
    DyckWord,
    Matching,
    as_word,
    avoids,
    base,
    chain,
    parse_matching,
    permutational,
)
from .dyckbij import (
    enumerate_noncrossing,
    matching_from_pair,
    path_from_matching,
)
from .enumeration import (
    SCHEMA_VERSION,
    classify_relation,
    count_table,
    enumerate_bases,
    enumerate_matchings,
)
from .ferrers import matching_to_transversal
from .gentree import TreeKind, build_tree, leaf_count, phi
from .limits import BoundExceededError
from .render import dot_tree, svg_matching, svg_pair
from .report import write_report
from .verify import run_checks

__all__ = ["PatternSpec", "main"]


@dataclass(frozen=True)
class PatternSpec:
    """A parsed --pattern argument: a label plus the patterns it denotes."""

    label: str
    patterns: tuple

    @classmethod
    def parse(cls, text: str) -> "PatternSpec":
        text = text.strip()
        if not text:
            raise ValueError("empty pattern spec")
        if text == "Cfam":
            return cls("Cfam", (CHAINS,))
        if text.startswith("file:"):
            path = Path(text[5:])
            try:
                body = path.read_text()
            except OSError as exc:
                raise ValueError(f"cannot read pattern file {path}: {exc}") from None
            return cls(text, (parse_matching(body),))
        if text.startswith("C") and text[1:].isdigit():
            return cls(text, (chain(int(text[1:])),))
        if text.isdigit():
            return cls(text, (permutational(text),))
        raise ValueError(
            f"bad pattern spec {text!r}; use digits like 132, C4, Cfam, or file:PATH"
        )


def _pattern_sets(specs: list[str]) -> dict[str, tuple]:
    parsed = [PatternSpec.parse(s) for s in specs]
    return {p.label: p.patterns for p in parsed}


def _combined(specs: list[str]) -> PatternSpec:
    parsed = [PatternSpec.parse(s) for s in specs]
    label = "+".join(p.label for p in parsed)
    patterns = tuple(pat for p in parsed for pat in p.patterns)
    return PatternSpec(label, patterns)


def _print_json(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def cmd_count(args: argparse.Namespace) -> int:
    spec = _combined(args.pattern)
    if args.base is not None:
        w = as_word(args.base)
        if w.size != args.size:
            raise ValueError(f"base {w} has size {w.size}, not {args.size}")
        pats = spec.patterns
        c = sum(1 for match in enumerate_matchings(w) if avoids(match, pats))
        if args.format == "json":
            _print_json(
                {
                    "schema_version": SCHEMA_VERSION,
                    "kind": "count",
                    "m": args.size,
                    "w": w.bits,
                    "pattern_set": spec.label,
                    "count": c,
                }
            )
        elif args.format == "csv":
            print("m,w,pattern_set,count")
            print(f"{args.size},{w.bits},{spec.label},{c}")
        else:
            print(c)
        return 0
    table = count_table(args.size, {spec.label: spec.patterns})
    if args.format == "json":
        _print_json(table.json_obj())
    elif args.format == "csv":
        print(table.csv_text(), end="")
    else:
        for w_bits, _, c in table.entries:
            print(f"{w_bits}\t{c}")
        print(f"total\t{table.marginal()}")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.what == "bases":
        if args.size is None:
            raise ValueError("enumerate bases needs --size")
        items = [w.bits for w in enumerate_bases(args.size)]
    elif args.what == "matchings":
        if args.base is None:
            raise ValueError("enumerate matchings needs --base")
        w = as_word(args.base)
        stream = enumerate_matchings(w)
        if args.pattern:
            pats = _combined(args.pattern).patterns
            items = [str(m) for m in stream if avoids(m, pats)]
        else:
            items = [str(m) for m in stream]
    else:  # noncrossing
        if args.base is None:
            raise ValueError("enumerate noncrossing needs --base (the upper word)")
        items = [p.bits for p in enumerate_noncrossing(as_word(args.base))]
    if args.format == "json":
        _print_json(
            {"schema_version": SCHEMA_VERSION, "kind": f"enumerate_{args.what}", "items": items}
        )
    else:
        for it in items:
            print(it)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    a = _combined(args.a)
    b = _combined(args.b)
    verdict = classify_relation(a.patterns, b.patterns, args.max_size)
    if args.format == "json":
        obj = verdict.json_obj()
        obj["a"], obj["b"] = a.label, b.label
        _print_json(obj)
        return 0
    print(f"A = {a.label}")
    print(f"B = {b.label}")
    print(f"verdict (sizes up to {args.max_size}): {verdict.tag}")
    if verdict.witness_a_below:
        m, w = verdict.witness_a_below
        print(f"witness A<B: m={m} w={w}")
    if verdict.witness_b_below:
        m, w = verdict.witness_b_below
        print(f"witness B<A: m={m} w={w}")
    return 0


def cmd_tree(args: argparse.Namespace) -> int:
    w = as_word(args.base)
    kind = TreeKind[args.kind]
    print(f"leaves\t{leaf_count(w, kind)}")
    if args.out:
        Path(args.out).write_text(dot_tree(build_tree(w, kind)))
    if args.phi_out:
        Path(args.phi_out).write_text(json.dumps(phi(w).leaf_map_json(), indent=2) + "\n")
    return 0


def cmd_bijection(args: argparse.Namespace) -> int:
    if args.matching is not None:
        m = parse_matching(args.matching)
        w = base(m)
        p = path_from_matching(m)
        print(f"W\t{w.bits}")
        print(f"P\t{p.bits}")
    else:
        w = as_word(args.pair[0])
        p = as_word(args.pair[1])
        m = matching_from_pair(w, p)
        print(str(m))
    if args.svg:
        Path(args.svg).write_text(svg_pair(w, p))
    return 0


def cmd_ferrers(args: argparse.Namespace) -> int:
    m = parse_matching(args.matching)
    t = matching_to_transversal(m)
    if args.format == "json":
        _print_json(t.json_obj())
    else:
        print(t.ascii_art())
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    out = Path(args.out)
    if args.matching is not None:
        if out.suffix != ".svg":
            raise ValueError("matching renders to an .svg path")
        out.write_text(svg_matching(parse_matching(args.matching)))
    elif args.pair is not None:
        if out.suffix != ".svg":
            raise ValueError("a pair renders to an .svg path")
        out.write_text(svg_pair(as_word(args.pair[0]), as_word(args.pair[1])))
    else:
        w, kind_name = args.tree
        if out.suffix != ".dot":
            raise ValueError("a tree renders to a .dot path")
        if kind_name not in ("TM", "TC"):
            raise ValueError("tree kind must be TM or TC")
        out.write_text(dot_tree(build_tree(as_word(w), TreeKind[kind_name])))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_checks(args.check, args.max_size)
    failed = False
    for rep in reports:
        if not args.quiet:
            for cell in rep.cells:
                print(cell.line())
        print(rep.summary())
        failed = failed or not rep.passed
    return 1 if failed else 0


def cmd_report(args: argparse.Namespace) -> int:
    sets = _pattern_sets(args.pattern) if args.pattern else None
    paths = write_report(args.max_size, args.out, sets)
    for p in paths:
        print(p)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchkit",
        description="Count, relate and draw pattern-avoiding matchings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count avoiders of a pattern set")
    p.add_argument("--size", "-m", type=int, required=True)
    p.add_argument("--pattern", action="append", required=True,
                   help="132, C4, Cfam or file:PATH; repeat to combine")
    p.add_argument("--base", help="restrict to one base word")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("enumerate", help="list bases, matchings or dominated words")
    p.add_argument("what", choices=("bases", "matchings", "noncrossing"))
    p.add_argument("--size", type=int)
    p.add_argument("--base")
    p.add_argument("--pattern", action="append",
                   help="filter matchings to avoiders of this set")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("classify", help="compare avoider counts of two pattern sets")
    p.add_argument("--a", action="append", required=True)
    p.add_argument("--b", action="append", required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("tree", help="generating tree of one base word")
    p.add_argument("--base", required=True)
    p.add_argument("--kind", choices=("TM", "TC"), required=True)
    p.add_argument("--out", help="write the tree as DOT here")
    p.add_argument("--phi-out", help="write the leaf bijection as JSON here")
    p.set_defaults(fn=cmd_tree)

    p = sub.add_parser("bijection", help="map a matching to its path pair or back")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--matching", help="edge list like 1-6,2-3,4-5")
    g.add_argument("--pair", nargs=2, metavar=("W", "P"))
    p.add_argument("--svg", help="also draw the pair with tunnels here")
    p.set_defaults(fn=cmd_bijection)

    p = sub.add_parser("ferrers", help="shape-with-transversal view of a matching")
    p.add_argument("--matching", required=True)
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.set_defaults(fn=cmd_ferrers)

    p = sub.add_parser("render", help="write an SVG arc diagram, SVG pair or DOT tree")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--matching")
    g.add_argument("--pair", nargs=2, metavar=("W", "P"))
    g.add_argument("--tree", nargs=2, metavar=("W", "KIND"))
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("verify", help="run the cross-check suites")
    p.add_argument("--check", default="all",
                   help="mirror, counts-chain, tree-iso, bijection231, split231, ferrers or all")
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--quiet", action="store_true", help="print summaries only")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="write count CSVs and charts to a directory")
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--out", required=True)
    p.add_argument("--pattern", action="append",
                   help="pattern sets to tabulate; default is the six singles plus Cfam")
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
