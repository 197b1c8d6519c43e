"""Command-line entry point.

Exit codes: 0 success, 2 bad input, 3 oracle cap exceeded, 4 internal
inconsistency (an identity that must hold did not).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .betti import (
    DEFAULT_ORACLE_CAP,
    InconsistencyError,
    OracleCapError,
    betti_table_hochster,
    has_linear_resolution,
    lex_segment,
    lower_bound,
    strand_report,
    triangle_lower_bound,
    upper_bound,
)
from .census import census, count_cliques
from .graph import Graph, GraphInputError
from .homology import Field
from .io import GeneratorSpec, read_graph
from .verify import MAX_VERIFY_N, check_graph, run_verify

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_INCONSISTENT = 0, 2, 3, 4

VERBS = ("betti", "strand", "census", "check", "bounds", "triangles", "resolution", "verify")


def _field(text: str) -> Field:
    try:
        return Field(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _add_input(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--edges", metavar="PATH", help="edge-list file ('u v' per line, optional 'n N' header)")
    src.add_argument("--json", metavar="PATH", help='JSON graph {"n": N, "edges": [[u, v], ...]}')
    src.add_argument("--complete", type=int, metavar="N")
    src.add_argument("--complete-bipartite", type=int, nargs=2, metavar=("A", "B"))
    src.add_argument("--cycle", type=int, metavar="N")
    src.add_argument("--path", type=int, metavar="N")
    src.add_argument("--wheel", type=int, metavar="N", help="C_N plus a hub (N+1 vertices)")
    src.add_argument("--random", nargs=3, metavar=("N", "P", "SEED"), help="Erdos-Renyi G(N, P)")
    src.add_argument("--random-tree", type=int, nargs=2, metavar=("N", "SEED"))
    p.add_argument("--allow-large", action="store_true", help="accept more than 64 vertices")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=Field(0), help="0 for QQ or a prime p (default 0)")
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--max-i", type=int, default=None, metavar="K")
    common.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP, metavar="N",
                        help=f"largest graph the homology oracle accepts (default {DEFAULT_ORACLE_CAP})")
    common.add_argument("--threads", type=_positive, default=None, metavar="T",
                        help="worker processes for the oracle (default: all CPUs)")

    parser = argparse.ArgumentParser(prog="edge-betti", description="Betti numbers of edge ideals.")
    sub = parser.add_subparsers(dest="verb", required=True)
    helps = {
        "betti": "full Betti table via Hochster's formula",
        "strand": "linear strand: oracle, exact formulas and bounds",
        "census": "induced-subgraph counts used by the formulas",
        "check": "run every cross-check on one graph",
        "bounds": "lower and upper linear-strand bounds",
        "triangles": "lower bound on the triangle count",
        "resolution": "is the resolution linear? (complement chordality)",
    }
    for verb, text in helps.items():
        p = sub.add_parser(verb, parents=[common], help=text)
        _add_input(p)
    v = sub.add_parser("verify", parents=[common], help="exhaustive check of all small labelled graphs")
    v.add_argument("--max-n", type=int, default=5, metavar="N")
    v.add_argument("--sample", type=_positive, default=None, metavar="K",
                   help="use K seeded random graphs for sizes >= 6 instead of all of them")
    v.add_argument("--seed", type=int, default=0)
    return parser


def load_graph(args: argparse.Namespace) -> Graph:
    large = args.allow_large
    if args.edges:
        return read_graph(args.edges, "edges", allow_large=large)
    if args.json:
        return read_graph(args.json, "json", allow_large=large)
    if args.random:
        n, p, seed = args.random
        try:
            spec = GeneratorSpec("random", (int(n), float(p), int(seed)))
        except ValueError:
            raise GraphInputError(f"--random expects N P SEED, got {' '.join(args.random)}") from None
        return spec.build(allow_large=large)
    for family in ("complete", "complete_bipartite", "cycle", "path", "wheel", "random_tree"):
        val = getattr(args, family)
        if val is not None:
            params = tuple(val) if isinstance(val, list) else (val,)
            return GeneratorSpec(family.replace("_", "-"), params).build(allow_large=large)
    raise GraphInputError("no input graph given")


def _csv(header: Sequence[str], rows) -> str:
    return "\n".join([",".join(header)] + [",".join("" if x is None else str(x) for x in r) for r in rows])


def _table(header: Sequence[str], rows) -> str:
    body = [[("-" if x is None else str(x)) for x in r] for r in rows]
    widths = [max([len(str(h))] + [len(r[c]) for r in body]) for c, h in enumerate(header)]
    return "\n".join("  ".join(s.rjust(w) for s, w in zip(r, widths)) for r in [list(header)] + body)


def _emit(fmt: str, header, rows, payload) -> str:
    if fmt == "json":
        return json.dumps(payload)
    if fmt == "csv":
        return _csv(header, rows)
    return _table(header, rows)


def cmd_betti(args, g: Graph) -> int:
    table = betti_table_hochster(g, args.field, cap=args.cap, threads=args.threads)
    if args.format == "json":
        print(table.to_json())
    elif args.format == "csv":
        print(_csv(("i", "j", "beta"), [(i, j, b) for (i, j), b in sorted(table.entries.items())]))
    else:
        print(table.render())
    return EXIT_OK


def cmd_strand(args, g: Graph) -> int:
    report = strand_report(g, args.field, cap=args.cap, max_i=args.max_i, threads=args.threads)
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(report.to_csv())
    else:
        print(report.render())
    problems = report.problems()
    if problems:
        for msg in problems:
            print(f"inconsistency: {msg}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_census(args, g: Graph) -> int:
    rep = census(g)
    rows = [(f"k{r}", v) for r, v in sorted(rep.k.items())]
    rows += [(f"k{a},{b}", v) for (a, b), v in sorted(rep.k_bipartite.items())]
    rows += [("c4", rep.c4), ("w4", rep.w4), ("d", rep.d)]
    print(rep.to_json() if args.format == "json" else _emit(args.format, ("pattern", "count"), rows, None))
    return EXIT_OK


def cmd_check(args, g: Graph) -> int:
    if g.n > args.cap:
        raise OracleCapError(f"homology oracle capped at {args.cap} vertices (graph has {g.n}); raise it with --cap")
    bad = check_graph(g, args.field, cap=args.cap)
    for msg in bad:
        print(f"FAIL {msg}")
    if bad:
        return EXIT_INCONSISTENT
    print(f"ok: all identities hold on this {g.n}-vertex, {g.num_edges}-edge graph over {args.field}")
    return EXIT_OK


def cmd_bounds(args, g: Graph) -> int:
    top = g.n - 2 if args.max_i is None else min(args.max_i, g.n - 2)
    rows = [(i, lower_bound(g, i), upper_bound(g, i)) for i in range(top + 1)]
    payload = {"n": g.n, "edges": g.num_edges, "rows": [dict(i=i, lower=lo, upper=hi) for i, lo, hi in rows]}
    print(_emit(args.format, ("i", "lower", "upper"), rows, payload))
    return EXIT_OK


def cmd_triangles(args, g: Graph) -> int:
    seg = lex_segment(g.num_edges, g.n)
    bound, k3 = triangle_lower_bound(g), count_cliques(g, 3)
    payload = {"bound": bound, "k3": k3, "j": seg.j, "l": seg.l}
    print(_emit(args.format, ("bound", "k3", "j", "l"), [(bound, k3, seg.j, seg.l)], payload))
    if bound > k3:
        print(f"inconsistency: triangle bound {bound} exceeds k3 = {k3}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_resolution(args, g: Graph) -> int:
    certify = g.n <= args.cap
    res = has_linear_resolution(g, args.field, certificate=certify, cap=args.cap)
    payload = {"linear": res.linear, "certificate": res.certificate}
    print(_emit(args.format, ("linear", "certificate"), [(res.linear, res.certificate)], payload))
    return EXIT_OK


def cmd_verify(args) -> int:
    if not 1 <= args.max_n <= MAX_VERIFY_N:
        raise GraphInputError(f"--max-n must lie in 1..{MAX_VERIFY_N}")

    def progress(n, count):
        print(f"n={n}: {count} graphs checked, 0 failures", flush=True)

    summary = run_verify(args.max_n, args.field, sample=args.sample, seed=args.seed, progress=progress)
    if not summary.ok:
        n, mask, bad = summary.failure
        print(f"FAIL n={n} edge-mask={mask}", file=sys.stderr)
        for msg in bad:
            print(f"  {msg}", file=sys.stderr)
        return EXIT_INCONSISTENT
    total = sum(summary.checked.values())
    print(f"verified {total} graphs over {summary.field}: 0 failures")
    return EXIT_OK


COMMANDS = {
    "betti": cmd_betti,
    "strand": cmd_strand,
    "census": cmd_census,
    "check": cmd_check,
    "bounds": cmd_bounds,
    "triangles": cmd_triangles,
    "resolution": cmd_resolution,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "verify":
            return cmd_verify(args)
        g = load_graph(args)
        return COMMANDS[args.verb](args, g)
    except (GraphInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
