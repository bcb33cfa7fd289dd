"""Command-line interface: counts, tables, conversions, checks, growth
reports and figure rendering.

Exit codes are a stable contract: 0 success, 1 property failure,
2 method disagreement, 3 usage or parse error, 4 non-canonical word.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import asymptotics, codec, counting, enumeration, poset, reference
from .errors import MacsError, MethodDisagreementError, NonCanonicalWordError
from .poset import GridShape

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_DISAGREEMENT = 2
EXIT_USAGE = 3
EXIT_NON_CANONICAL = 4

REPRESENTATIONS = ("antichain", "strict_chain", "word", "alignment", "walk")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract reserves 2 for
    # method disagreement and uses 3 for usage errors.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _shape_from_args(args: argparse.Namespace) -> GridShape | None:
    if getattr(args, "shape", None) and getattr(args, "m", None):
        raise ValueError("give either --shape or --m, not both")
    if getattr(args, "shape", None):
        return GridShape.parse(args.shape)
    if getattr(args, "m", None):
        return GridShape(args.m, args.m)
    return None


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# count


def _applicable_methods(method: str, m1: int, m2: int) -> list[str]:
    if method != "all":
        return [method]
    methods = ["simple", "double"]
    if m1 == m2:
        methods = ["heinz", "explicit"] + methods
    if m1 + m2 <= enumeration.enumeration_limit():
        methods.append("oracle")
    return methods


def _count_by(method: str, m1: int, m2: int) -> int:
    if method == "antichains":
        return counting.count_antichains(m1, m2)
    if method in ("heinz", "explicit") and m1 != m2:
        raise ValueError(f"method {method!r} applies to diagonal shapes only")
    if method == "heinz":
        return counting.count_maximal_heinz(m1)
    if method == "explicit":
        return counting.count_maximal_explicit(m1)
    if method == "double":
        return counting.count_maximal_double(m1, m2)[0]
    if method == "simple":
        return counting.count_maximal_simple(m1, m2)
    if method == "oracle":
        return enumeration.brute_force_count_maximal(GridShape(m1, m2))
    raise ValueError(f"unknown method {method!r}")


def cmd_count(args: argparse.Namespace) -> int:
    m1 = args.m1
    m2 = args.m2 if args.m2 is not None else m1
    if m1 < 0 or m2 < 0:
        raise ValueError("sizes must be non-negative")
    results = [(name, _count_by(name, m1, m2)) for name in
               _applicable_methods(args.method, m1, m2)]
    for name, value in results:
        if args.format == "json":
            print(json.dumps({"method": name, "m1": m1, "m2": m2,
                              "value": str(value)}))
        elif args.method == "all":
            print(f"{name} {value}")
        else:
            print(value)
    if len({value for _, value in results}) > 1:
        print("error: counting methods disagree", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


# ---------------------------------------------------------------------------
# table


def cmd_table(args: argparse.Namespace) -> int:
    table = counting.build_table(args.max1, args.max2)
    _write(table.to_csv(args.which), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# convert


def _parse_source(args: argparse.Namespace, shape: GridShape | None):
    """Returns (word, walk): the canonical word of the object, or the
    walk when the source is one (walks convert by their own rules)."""
    payload = args.payload
    if args.source == "word":
        codec.validate_word(payload, shape)
        return payload, None
    if args.source == "antichain":
        if shape is None:
            raise ValueError("converting points requires --shape or --m")
        return codec.antichain_to_word(poset.PointSet.from_text(payload, shape)), None
    if args.source == "strict_chain":
        if shape is None:
            raise ValueError("converting points requires --shape or --m")
        return codec.strict_chain_to_word(poset.PointSet.from_text(payload, shape)), None
    if args.source == "alignment":
        return codec.alignment_to_word(codec.Alignment.from_json(payload)), None
    return None, codec.Walk(payload, args.orientation)


def _convert_walk(walk: codec.Walk, target: str) -> tuple[str, object, bool, tuple]:
    if target == "word":
        word = codec.walk_to_word(walk)
        return word, word, codec.word_is_maximal(word), ()
    if target == "strict_chain":
        pts = codec.walk_to_strict_chain(walk)
        maximal = codec.walk_strict_chain_is_maximal(walk)
        return pts.to_text(), [list(p) for p in pts], maximal, \
            codec.walk_augmenting_points(walk) if not maximal else ()
    if target == "antichain":
        pts = codec.walk_to_antichain(walk)
        maximal = codec.walk_antichain_is_maximal(walk)
        text = ";".join(f"({x},{y})" for x, y in pts)
        return text, [list(p) for p in pts], maximal, \
            codec.walk_augmenting_points(walk) if not maximal else ()
    raise ValueError(f"cannot convert a walk to {target!r}")


def _convert_word(word: str, target: str, fmt: str) -> tuple[str, object]:
    shape = codec.word_shape(word)
    if target == "word":
        return word, word
    if target == "antichain":
        pts = codec.word_to_antichain(word, shape)
        return pts.to_text(), [list(p) for p in pts]
    if target == "strict_chain":
        pts = codec.word_to_strict_chain(word, shape)
        return pts.to_text(), [list(p) for p in pts]
    if target == "alignment":
        al = codec.word_to_alignment(word)
        text = al.render() if fmt == "rows" else al.to_json()
        return text, json.loads(al.to_json())
    raise ValueError(f"unknown representation {target!r}")


def cmd_convert(args: argparse.Namespace) -> int:
    shape = _shape_from_args(args)
    word, walk = _parse_source(args, shape)
    augmenting: tuple = ()
    if walk is not None:
        text, value, maximal, augmenting = _convert_walk(walk, args.target)
        m1, m2 = walk.shape.m1, walk.shape.m2
    else:
        text, value = _convert_word(word, args.target, args.format)
        maximal = codec.word_is_maximal(word)
        wshape = codec.word_shape(word)
        m1, m2 = wshape.m1, wshape.m2
    if args.format == "json":
        envelope = {"from": args.source, "to": args.target, "m1": m1, "m2": m2,
                    "value": value}
        if args.maximal:
            envelope["maximal"] = maximal
            if augmenting:
                envelope["augmenting"] = [list(p) for p in augmenting]
        print(json.dumps(envelope))
    else:
        print(text)
        if args.maximal:
            print(f"maximal={str(maximal).lower()}")
            if augmenting:
                print("augmenting=" + ";".join(f"({x},{y})" for x, y in augmenting))
    return EXIT_OK


# ---------------------------------------------------------------------------
# check


class _Report:
    def __init__(self) -> None:
        self.failures = 0

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        if ok:
            print(f"PASS {name}")
        else:
            self.failures += 1
            print(f"FAIL {name}{': ' + detail if detail else ''}")

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.failures == 0 else EXIT_PROPERTY_FAILURE


def _check_tables(limit: int, report: _Report) -> None:
    span = min(limit, 8)
    table = counting.build_table(span, span, verify=False)
    for which, published in (("dF", reference.PUBLISHED_MAXIMAL_COUNTS),
                             ("dFh", reference.PUBLISHED_H_FIRST_COUNTS)):
        grid = table.grid(which)
        bad = [(i, j) for i in range(1, span + 1) for j in range(1, span + 1)
               if grid[i][j] != published[i - 1][j - 1]]
        report.record(
            f"{which} matches published table ({span * span} cells)",
            not bad, f"first mismatch at {bad[0]}" if bad else "",
        )
    try:
        counting.build_table(limit, limit)
        report.record(f"four-way method agreement up to {limit}x{limit}", True)
    except MethodDisagreementError as exc:
        report.record(f"four-way method agreement up to {limit}x{limit}", False, str(exc))


def _check_bijections(limit: int, report: _Report) -> None:
    shapes = [GridShape(a, b) for a in range(1, limit + 1) for b in range(1, limit + 1)]
    total = 0
    failures = {"round trip": "", "duality": "", "maximality": ""}
    for shape in shapes:
        for antichain in enumeration.enumerate_antichains(shape):
            total += 1
            where = f"{shape} {antichain.to_text() or '{}'}"
            word = codec.antichain_to_word(antichain)
            if codec.word_to_antichain(word, shape) != antichain or (
                codec.strict_chain_to_antichain(codec.antichain_to_strict_chain(antichain))
                != antichain
            ):
                failures["round trip"] = failures["round trip"] or where
            if codec.strict_chain_to_word(codec.antichain_to_strict_chain(antichain)) != word:
                failures["duality"] = failures["duality"] or where
            if codec.word_is_maximal(word) != poset.is_maximal(antichain, "antichain"):
                failures["maximality"] = failures["maximality"] or where
    report.record(f"word and duality round trips over {total} antichains",
                  not failures["round trip"], failures["round trip"])
    report.record(f"duality commutes with encoding over {total} antichains",
                  not failures["duality"], failures["duality"])
    report.record(f"word maximality agrees with augmentation over {total} antichains",
                  not failures["maximality"], failures["maximality"])


def _check_oracle(limit: int, report: _Report) -> None:
    guard = enumeration.enumeration_limit()
    checked = 0
    ok = True
    detail = ""
    for m1 in range(1, limit + 1):
        for m2 in range(m1, limit + 1):
            if m1 + m2 > guard:
                continue
            brute = enumeration.brute_force_count_maximal(GridShape(m1, m2))
            values = {
                "simple": counting.count_maximal_simple(m1, m2),
                "double": counting.count_maximal_double(m1, m2)[0],
            }
            if m1 == m2:
                values["heinz"] = counting.count_maximal_heinz(m1)
                values["explicit"] = counting.count_maximal_explicit(m1)
            bad = {k: v for k, v in values.items() if v != brute}
            if bad:
                ok, detail = False, f"{m1}x{m2}: brute={brute}, {bad}"
            checked += 1
    report.record(f"oracle agreement on {checked} shapes", ok, detail)


def _check_heinz(limit: int, report: _Report) -> None:
    report.record(
        f"diagonal recurrence divisibility up to m={limit}",
        counting.heinz_bracket_divisible(limit),
    )


_CHECKS = {
    "tables": (_check_tables, 8),
    "bijections": (_check_bijections, 5),
    "oracle": (_check_oracle, 6),
    "heinz-divisibility": (_check_heinz, 200),
}


def cmd_check(args: argparse.Namespace) -> int:
    runner, default_limit = _CHECKS[args.scope]
    report = _Report()
    runner(args.limit if args.limit is not None else default_limit, report)
    return report.exit_code


# ---------------------------------------------------------------------------
# asym


def cmd_asym(args: argparse.Namespace) -> int:
    rows = asymptotics.growth_report(args.mmax)
    lines = ["m,dF,ratio,density"]
    for row in rows:
        lines.append(f"{row.m},{row.maximal_count},{row.ratio:.4f},{row.density:.4f}")
    lines.append(f"rho,{asymptotics.rho():.10f}")
    _write("\n".join(lines) + "\n", args.out)
    if args.figure:
        from . import figures  # deferred: matplotlib is slow to import

        figures.save_figure(figures.growth_figure(args.mmax), args.figure)
    return EXIT_OK


# ---------------------------------------------------------------------------
# render


def cmd_render(args: argparse.Namespace) -> int:
    from . import figures  # deferred: matplotlib is slow to import

    shape = _shape_from_args(args)
    if args.kind == "walk":
        fig = figures.walk_figure(codec.Walk(args.payload, args.orientation))
    elif args.kind == "word":
        fig = figures.word_figure(args.payload, shape, line=args.line)
    else:
        if shape is None:
            raise ValueError("rendering points requires --shape or --m")
        pts = poset.PointSet.from_text(args.payload, shape)
        if args.kind == "antichain":
            fig = figures.word_figure(codec.antichain_to_word(pts), shape,
                                      line="antichain")
        else:
            fig = figures.word_figure(codec.strict_chain_to_word(pts), shape,
                                      line="strict_chain")
    if args.out:
        figures.save_figure(fig, args.out)
    else:
        sys.stdout.write(figures.figure_to_svg(fig))
    return EXIT_OK


# ---------------------------------------------------------------------------
# enumerate


def cmd_enumerate(args: argparse.Namespace) -> int:
    shape = _shape_from_args(args)
    if shape is None:
        raise ValueError("enumeration requires --shape or --m")
    if args.what == "walks":
        for walk in enumeration.enumerate_walks(shape, args.orientation):
            if args.format == "json":
                print(json.dumps({"steps": walk.steps,
                                  "orientation": walk.orientation}))
            else:
                print(walk.steps)
        return EXIT_OK
    streams = {
        "words": enumeration.enumerate_canonical_words,
        "maximal-words": enumeration.enumerate_maximal_words,
        "antichains": enumeration.enumerate_antichains,
        "maximal-antichains": enumeration.enumerate_maximal_antichains,
    }
    for item in streams[args.what](shape):
        if isinstance(item, str):
            word, pts = item, codec.word_to_antichain(item, shape)
        else:
            word, pts = codec.antichain_to_word(item), item
        if args.format == "json":
            print(json.dumps({"word": word, "points": [list(p) for p in pts]}))
        elif args.format == "points":
            print(pts.to_text())
        else:
            print(word)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> _Parser:
    parser = _Parser(
        prog="macs",
        description="Antichains and maximal antichains in a product of two "
                    "chains: bijective codecs, exact counts, cross-checks, "
                    "growth diagnostics and figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shape_flags(p: _Parser) -> None:
        p.add_argument("--shape", help="grid shape, e.g. 5x6")
        p.add_argument("--m", type=int, help="diagonal shorthand for --shape NxN")

    p = sub.add_parser("count", help="count antichains or maximal antichains")
    p.add_argument("method", choices=("antichains", "heinz", "explicit", "double",
                                      "simple", "oracle", "all"))
    p.add_argument("m1", type=int)
    p.add_argument("m2", type=int, nargs="?")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="emit a counts table as CSV")
    p.add_argument("max1", type=int)
    p.add_argument("max2", type=int)
    p.add_argument("which", choices=("dF", "dFh", "dE"))
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("source", choices=REPRESENTATIONS)
    p.add_argument("target", choices=REPRESENTATIONS[:4])
    p.add_argument("payload")
    add_shape_flags(p)
    p.add_argument("--orientation", choices=("up", "down"), default="up",
                   help="walk orientation (walk payloads only)")
    p.add_argument("--maximal", action="store_true",
                   help="also report whether the object is maximal")
    p.add_argument("--format", choices=("text", "json", "rows"), default="text")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("check", help="run an invariant suite")
    p.add_argument("scope", choices=tuple(_CHECKS))
    p.add_argument("limit", type=int, nargs="?")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("asym", help="growth-ratio and density report")
    p.add_argument("mmax", type=int)
    p.add_argument("--out", help="write the CSV to a file")
    p.add_argument("--figure", help="also save a chart to this file")
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("render", help="render a grid line or walk as a figure")
    p.add_argument("kind", choices=("word", "antichain", "strict_chain", "walk"))
    p.add_argument("payload")
    add_shape_flags(p)
    p.add_argument("--line", choices=("antichain", "strict_chain"),
                   default="antichain", help="reading of a word payload")
    p.add_argument("--orientation", choices=("up", "down"), default="up")
    p.add_argument("--svg", action="store_true",
                   help="emit SVG (the default; kept for explicitness)")
    p.add_argument("--out", help="save to a file (format from the extension)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("enumerate", help="stream objects, one per line")
    p.add_argument("what", choices=("antichains", "maximal-antichains", "words",
                                    "maximal-words", "walks"))
    add_shape_flags(p)
    p.add_argument("--orientation", choices=("up", "down"), default="up")
    p.add_argument("--format", choices=("words", "points", "json"), default="words")
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonCanonicalWordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_CANONICAL
    except MethodDisagreementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except (MacsError, ValueError) as exc:  # JSONDecodeError is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
