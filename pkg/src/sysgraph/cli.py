"""Command line interface.

Exit codes: 0 success / property holds, 1 property fails (witness JSON on
stdout), 2 invalid input or usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__, bounds, formats
from .colored_graph import ColoredGraph
from .constructions import FAMILIES, build_family
from .errors import SysgraphError
from .isoperimetry import exact_profile, heuristic_profile, profile_csv
from .simplicial import (ChromaticComplex, cards_complex, cube_complex,
                         detect_empty_squares, detect_empty_triangles,
                         dual_graph, star_correspondence)
from .spectral import full_spectrum, threshold_counts, verify_threshold_theorem
from .verifiers import Property, verify

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _manifest(args, **params) -> str:
    """One-line JSON run record embedded in reports.

    Thread count and wall time are left out so the report bytes do not
    depend on them; wall time goes to stderr instead.
    """
    doc = {"tool": "sysgraph", "version": __version__, "subcommand": args.command}
    doc.update({k: v for k, v in params.items() if v is not None})
    return "manifest " + json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load_graph(path: str) -> ColoredGraph:
    obj = formats.load(path)
    if not isinstance(obj, ColoredGraph):
        raise UsageError(f"{path}: expected a pcg-1 graph")
    return obj


def _parse_sizes(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(bounds.parse_size(part))
    if not out:
        raise UsageError("empty size list")
    return out


def cmd_construct(args) -> int:
    g = build_family(args.family, args.dim)
    _write(formats.graph_to_json(g), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.file)
    report = verify(g, args.property, args.mode)
    doc = report.to_dict()
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_profile(args) -> int:
    g = _load_graph(args.file)
    if args.exact:
        rep = exact_profile(g, s_max=args.max_size,
                            sizes=_parse_sizes(args.sizes) if args.sizes else None,
                            threads=args.threads)
        man = _manifest(args, input=os.path.basename(args.file), method="exact",
                        max_size=args.max_size, sizes=args.sizes)
    else:
        if not args.sizes:
            raise UsageError("--heuristic needs --sizes")
        rep = heuristic_profile(g, _parse_sizes(args.sizes), trials=args.trials,
                                seed=args.seed, threads=args.threads)
        man = _manifest(args, input=os.path.basename(args.file), method="heuristic",
                        sizes=args.sizes, trials=args.trials, seed=args.seed)
    _write(profile_csv(rep, [man]), args.output)
    return EXIT_OK


def cmd_bounds(args) -> int:
    s = bounds.parse_size(args.size)
    if s < 2:
        raise UsageError("--size must be at least 2")
    d = args.dim
    env, ell = bounds.envelope(s)
    lines = [f"# {_manifest(args, dim=d, size=args.size, table=args.table)}",
             "quantity,value",
             f"log2_s,{bounds._log2(s):.12g}",
             f"pseudo_cube_bound,{bounds.pseudo_cube_bound(d, s):.12g}",
             f"envelope,{env:.12g}",
             f"envelope_ell,{ell}",
             f"closed_form,{bounds.loglog_closed_form(s):.12g}",
             f"dual_systolic_bound,{bounds.dual_systolic_bound(d, s):.12g}"]
    if args.table:
        lines.append("")
        cols = ["ell", "coef_exact", "coef_simplified", "g_exact", "g_simplified",
                "bound_exact", "bound_simplified"]
        lines.append(",".join(cols))
        for row in bounds.bounds_table(d, s, args.table):
            lines.append(",".join(str(row[c]) if c == "ell" else f"{row[c]:.12g}"
                                  for c in cols))
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    if args.verify_threshold_bound:
        if args.dim is None or args.k is None:
            raise UsageError("--verify-threshold-bound needs --dim and --k")
        check = verify_threshold_theorem(args.dim, args.k)
        sys.stdout.write(json.dumps(check.to_dict(), sort_keys=True) + "\n")
        return EXIT_OK if check.verdict else EXIT_FAIL
    if args.file is None or args.epsilon is None:
        raise UsageError("spectrum needs --epsilon and FILE")
    g = _load_graph(args.file)
    strict, tolerant = threshold_counts(g, args.epsilon)
    out = {"n": g.num_vertices, "d": g.dimension, "epsilon": args.epsilon,
           "threshold_rank": tolerant, "threshold_rank_strict": strict}
    if args.full_csv:
        spec = full_spectrum(g)
        out["max_residual"] = spec.max_residual
        body = "".join(f"{x:.17g}\n" for x in spec.eigenvalues.tolist())
        _write("eigenvalue\n" + body, args.full_csv)
    sys.stdout.write(json.dumps(out, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_complex(args) -> int:
    if args.input:
        c = formats.load(args.input)
        if not isinstance(c, ChromaticComplex):
            raise UsageError(f"{args.input}: expected a scx-1 complex")
    elif args.kind == "cards":
        c = cards_complex(args.dim if args.dim is not None else 3)
    elif args.kind == "cube":
        if args.dim is None:
            raise UsageError("--kind cube needs --dim")
        c = cube_complex(args.dim)
    else:
        raise UsageError("give --kind or --input")
    if args.output:
        _write(formats.complex_to_json(c), args.output)
    if args.dual:
        _write(formats.graph_to_json(dual_graph(c)), args.dual)
    if args.analyze:
        squares = detect_empty_squares(c)
        doc = {"num_colors": c.num_colors, "num_vertices": c.num_vertices,
               "num_facets": c.num_facets,
               "euler_characteristic": c.euler_characteristic(),
               "empty_squares": [list(q) for q in squares],
               "empty_triangles": [list(t) for t in detect_empty_triangles(c)],
               "star_correspondence": star_correspondence(c)}
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    elif not args.output and not args.dual:
        _write(formats.complex_to_json(c), None)
    return EXIT_OK


def cmd_export(args) -> int:
    obj = formats.load(args.file)
    _write(formats.export(obj, args.format), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sysgraph", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: $SYSGRAPH_THREADS or 1)")
    # also accepted after the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a graph family as pcg-1 JSON")
    c.add_argument("--family", choices=FAMILIES, required=True)
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="check a structural property")
    v.add_argument("--property", choices=[x.value for x in Property], required=True)
    v.add_argument("--mode", choices=["literal", "weak"], default="literal",
                   help="recursion mode for weak-pseudo-cube")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    pr = sub.add_parser("profile", parents=[common], help="isoperimetric profile as CSV")
    g = pr.add_mutually_exclusive_group(required=True)
    g.add_argument("--exact", action="store_true")
    g.add_argument("--heuristic", action="store_true")
    pr.add_argument("--max-size", type=int)
    pr.add_argument("--sizes", help="comma list, ranges a-b allowed")
    pr.add_argument("--trials", type=int, default=10)
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("-o", "--output")
    pr.add_argument("file")
    pr.set_defaults(func=cmd_profile)

    b = sub.add_parser("bounds", parents=[common], help="evaluate the lower bounds at one size")
    b.add_argument("--dim", type=int, required=True)
    b.add_argument("--size", required=True, help="e.g. 65536 or 2^16")
    b.add_argument("--table", type=int, metavar="ELL_MAX")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("spectrum", parents=[common], help="threshold rank and spectrum")
    s.add_argument("--epsilon", type=float)
    s.add_argument("--full-csv", metavar="PATH")
    s.add_argument("--verify-threshold-bound", action="store_true",
                   help="check the threshold-rank lower bound on CP^(dim) at eps = 2k/dim")
    s.add_argument("--verify-theorem6", dest="verify_threshold_bound",
                   action="store_true", help=argparse.SUPPRESS)
    s.add_argument("--dim", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("file", nargs="?")
    s.set_defaults(func=cmd_spectrum)

    x = sub.add_parser("complex", parents=[common], help="build or analyze a chromatic complex")
    x.add_argument("--kind", choices=["cards", "cube"])
    x.add_argument("--dim", type=int, help="cube dimension, or players for cards")
    x.add_argument("--input", help="scx-1 file instead of --kind")
    x.add_argument("-o", "--output")
    x.add_argument("--dual", metavar="PATH", help="write the dual graph here")
    x.add_argument("--analyze", action="store_true",
                   help="print empty squares, Euler characteristic, stars")
    x.set_defaults(func=cmd_complex)

    e = sub.add_parser("export", parents=[common], help="convert a graph or complex file")
    e.add_argument("--format", choices=formats.EXPORT_FORMATS, required=True)
    e.add_argument("-o", "--output")
    e.add_argument("file")
    e.set_defaults(func=cmd_export)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    if args.threads is not None and args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_INPUT
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (SysgraphError, UsageError, OSError, json.JSONDecodeError,
            KeyError, TypeError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    elapsed = time.perf_counter() - start
    print(f"{args.command}: {elapsed:.3f} s", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())
