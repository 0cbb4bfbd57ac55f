"""Command line: frameless {tm,overlap,color,frame,morph,verify}.

Exit status is 0 when nothing was found (or generation succeeded), 1 when a
witness was found, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from frameless import avoidance, coloring, morphism2d, tm_core, verifier
from frameless.errors import DomainError, ResourceLimitError, UnknownSymbolError, UsageError
from frameless.grid import Grid

EXIT_OK, EXIT_FOUND, EXIT_ERROR = 0, 1, 2

SOURCES = {
    "additive": coloring.PLANE,
    "additive-quarter": coloring.ADDITIVE,
    "quadrant": coloring.QUADRANT,
}


class InputError(ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column = line, column


def parse_range(text: str) -> tuple[int, int]:
    """'a..b' (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 0..15, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _symbol(tok: str):
    return int(tok) if tok.lstrip("-").isdigit() else tok


def parse_word(text: str) -> tm_core.Word:
    """A single line of one-character symbols."""
    word = None
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.rstrip()
        if not body:
            continue
        if word is not None:
            raise InputError("a word must fit on one line", lineno, 1)
        for col, ch in enumerate(body, 1):
            if ch.isspace():
                raise InputError("whitespace inside word", lineno, col)
        word = tm_core.Word.parse(body)
    return word if word is not None else tm_core.Word()


def parse_grid(text: str) -> Grid:
    """Header '<rows> <cols>', then that many rows of space-separated symbols."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise InputError("missing '<rows> <cols>' header", 1, 1)
    head = lines[0].split()
    if len(head) != 2 or not all(h.isdigit() for h in head):
        raise InputError(f"header must be '<rows> <cols>', got {lines[0]!r}", 1, 1)
    rows, cols = map(int, head)
    body = [(n, line) for n, line in enumerate(lines[1:], 2) if line.strip()]
    if len(body) != rows:
        where = body[rows][0] if len(body) > rows else len(lines) + 1
        raise InputError(f"expected {rows} rows, found {len(body)}", where, 1)
    cells = []
    for lineno, line in body:
        spans = [m.span() for m in re.finditer(r"\S+", line)]
        toks = [line[a:b] for a, b in spans]
        if len(toks) != cols:
            col = spans[cols][0] + 1 if len(toks) > cols else len(line) + 1
            raise InputError(f"expected {cols} symbols, found {len(toks)}", lineno, col)
        cells.append([_symbol(t) for t in toks])
    kinds = {type(v) for row in cells for v in row}
    if len(kinds) > 1:
        cells = [[str(v) for v in row] for row in cells]
    return Grid(cells)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit_grid(g: Grid, fmt: str, output=None):
    if fmt == "pbm":
        data = coloring.render_pbm(g)
    else:
        data = (coloring.render_text(g) + "\n").encode()
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _report(kind: str, witness, bounds: dict, as_json: bool, outcome=None) -> int:
    if as_json:
        doc = {"kind": kind, "found": witness is not None}
        if witness is not None:
            doc.update({k: v for k, v in witness.to_dict().items() if k != "kind"})
        if outcome is not None:
            doc["outcome"] = outcome
        doc["bounds"] = bounds
        print(json.dumps(doc, sort_keys=True))
    else:
        if outcome is not None:
            print(outcome)
        if witness is None:
            print("none")
        else:
            fields = witness.to_dict()
            print(" ".join(f"{k}={v}" for k, v in fields.items() if k != "kind"))
        if outcome is not None:
            print("bounds " + json.dumps(bounds, sort_keys=True))
    return EXIT_OK if witness is None else EXIT_FOUND


def cmd_tm(args) -> int:
    if args.lo is not None or args.hi is not None:
        if args.lo is None or args.hi is None:
            raise UsageError("--lo and --hi go together")
        word = tm_core.two_sided_window(args.lo, args.hi)
    elif args.len is None:
        raise UsageError("give --len or --lo/--hi")
    elif args.extended:
        word = tm_core.two_sided_window(-args.len, args.len - 1) if args.len else tm_core.Word()
    else:
        word = tm_core.tm_prefix(args.len)
    print(word)
    return EXIT_OK


def cmd_overlap(args) -> int:
    if args.tm is not None:
        word = tm_core.tm_prefix(args.tm)
    else:
        word = parse_word(_read_input(args.input))
    return _report("overlap", avoidance.find_overlap(word), {"length": len(word)}, args.json)


def cmd_color(args) -> int:
    g = coloring.window(SOURCES[args.source], *args.rows, *args.cols)
    _emit_grid(g, args.format, args.output)
    return EXIT_OK


def cmd_frame(args) -> int:
    if args.source is not None:
        if args.rows is None or args.cols is None:
            raise UsageError("--source needs --rows and --cols")
        g = coloring.window(SOURCES[args.source], *args.rows, *args.cols)
    else:
        g = parse_grid(_read_input(args.input))
    bounds = {"rows": [g.origin_row, g.origin_row + g.rows - 1],
              "cols": [g.origin_col, g.origin_col + g.cols - 1]}
    return _report("frame", avoidance.find_frame(g), bounds, args.json)


def cmd_morph(args) -> int:
    if args.quadrant:
        g = morphism2d.quadrant_plane(args.steps)
    else:
        m = morphism2d.GAMMA
        if args.square:
            m = morphism2d.compose_2d(m, m)
        g = morphism2d.iterate_2d(m, args.seed, args.steps)
    if args.coded:
        g = morphism2d.apply_coding(morphism2d.TAU, g)
    elif args.format == "pbm":
        raise UsageError("PBM output needs --coded")
    _emit_grid(g, args.format, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.check == "overlap":
        v = verifier.verify_overlap_free(args.i_max, args.n_max)
        kind = "overlap"
    elif args.check == "frameless":
        v = verifier.verify_frameless(SOURCES[args.source], args.m, args.n, args.p_max, args.q_max)
        kind = "frame"
    else:
        v = verifier.verify_frameless_via_reduction(args.x[0], args.x[1], args.p_max)
        kind = "overlap"
    _report(kind, v.witness, v.bounds, args.json, outcome=v.outcome)
    return EXIT_OK if v.passed else EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frameless",
        description="Thue-Morse words, frameless lattice colorings and bounded checks.",
        epilog="Negative ranges need '=': --rows=-4..3",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tm", help="print Thue-Morse symbols")
    p.add_argument("--len", type=int, help="prefix length")
    p.add_argument("--extended", action="store_true",
                   help="with --len N, print the two-sided window t(-N)..t(N-1)")
    p.add_argument("--lo", type=int, help="first index of a two-sided window")
    p.add_argument("--hi", type=int, help="last index of a two-sided window")
    p.set_defaults(func=cmd_tm)

    p = sub.add_parser("overlap", help="find an overlap axaxa in a word")
    p.add_argument("input", nargs="?", default="-", help="word file (default stdin)")
    p.add_argument("--tm", type=int, metavar="N", help="check the Thue-Morse prefix of length N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_overlap)

    p = sub.add_parser("color", help="print a window of a lattice coloring")
    p.add_argument("--source", choices=sorted(SOURCES), default="additive")
    p.add_argument("--rows", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--cols", type=parse_range, required=True, metavar="C..D")
    p.add_argument("--format", choices=("text", "pbm"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("frame", help="find a picture frame in a grid")
    p.add_argument("input", nargs="?", default="-", help="text grid file (default stdin)")
    p.add_argument("--source", choices=sorted(SOURCES), help="scan a generated window instead")
    p.add_argument("--rows", type=parse_range, metavar="A..B")
    p.add_argument("--cols", type=parse_range, metavar="C..D")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_frame)

    p = sub.add_parser("morph", help="iterate the 2D morphism gamma")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, choices=range(4))
    p.add_argument("--square", action="store_true", help="iterate gamma^2 instead of gamma")
    p.add_argument("--coded", action="store_true", help="apply tau (letter mod 2)")
    p.add_argument("--quadrant", action="store_true", help="centered four-quadrant construction")
    p.add_argument("--format", choices=("text", "pbm"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_morph)

    p = sub.add_parser("verify", help="bounded verification")
    checks = p.add_subparsers(dest="check", required=True)
    c = checks.add_parser("overlap", help="Thue-Morse has no overlap in the bounds")
    c.add_argument("--i-max", type=int, default=1024)
    c.add_argument("--n-max", type=int, default=512)
    c = checks.add_parser("frameless", help="exhaustive frame scan of a coloring")
    c.add_argument("--source", choices=sorted(SOURCES), default="additive-quarter")
    c.add_argument("--m", type=parse_range, default=(0, 63), metavar="A..B")
    c.add_argument("--n", type=parse_range, default=(0, 63), metavar="C..D")
    c.add_argument("--p-max", type=int, default=32)
    c.add_argument("--q-max", type=int, default=32)
    c = checks.add_parser("reduction", help="framelessness through overlaps of the diagonal word")
    c.add_argument("--x", type=parse_range, default=(0, 255), metavar="A..B")
    c.add_argument("--p-max", type=int, default=64)
    for c in checks.choices.values():
        c.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, DomainError, ResourceLimitError, UnknownSymbolError, InputError, OSError) as exc:
        print(f"frameless {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
