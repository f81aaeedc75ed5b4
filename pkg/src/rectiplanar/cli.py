"""Command-line interface.

Exit status: 0 when a run completes (whatever the verdict), 2 for malformed
or out-of-scope input, 3 when an internal invariant breaks. Errors print one
line ``error: <reason>: <detail>`` on standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench, corpus, generators, oracle, tester, witness
from .errors import InputError, InternalInfeasible, RectiplanarError
from .graph import Graph, parse_graph

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


def _read_graph(path: str) -> Graph:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise _Usage(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(data)


def _write(path: str | None, data: bytes | str) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(path).write_bytes(data)


class _Usage(InputError):
    reason = "usage"


def cmd_test(args) -> int:
    g = _read_graph(args.input)
    report = tester.test(g, all_roots=args.all_roots)
    payload = report.to_dict()
    if args.all_roots and report.per_root_sets is not None:
        payload["per_root_sets"] = {str(k): str(v) for k, v in report.per_root_sets.items()}
    _write(args.output, json.dumps(payload) + "\n")
    return EXIT_OK


def cmd_draw(args) -> int:
    g = _read_graph(args.input)
    report = tester.test(g)
    if not report.rectilinear_planar:
        print(f"note: {report.reason}; nothing to draw", file=sys.stderr)
        _write(args.output, report.to_json() + "\n")
        return EXIT_OK
    w = witness.build_witness(g, report)
    if args.svg:
        _write(args.svg, witness.to_svg(w.drawing))
    if args.json or not args.svg:
        _write(args.json if args.json else args.output, w.drawing.to_json() + "\n")
    return EXIT_OK


def cmd_gen(args) -> int:
    sidecar = None
    if args.kind == "lowerbound":
        lb = generators.gen_lowerbound(args.N)
        g, sidecar = lb.graph, lb.sidecar()
    elif args.kind == "random":
        if args.seed is None:
            raise _Usage("random generation needs --seed")
        g = generators.gen_random_ipsp(args.n_target, args.seed)
    else:
        g = generators.gen_cycle(args.n)
    text = g.to_json() + "\n" if args.format == "json" else g.to_text()
    _write(args.output, text)
    if args.sidecar:
        if sidecar is None:
            raise _Usage("--sidecar is only available for lowerbound")
        _write(args.sidecar, json.dumps(sidecar) + "\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _read_graph(args.input)
    result = oracle.oracle_test(g, cap=args.cap)
    _write(args.output, json.dumps(result.to_dict()) + "\n")
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = bench.run_bench(args.sizes, runs=args.runs, seed=args.seed)
    _write(args.output, bench.to_csv(rows))
    return EXIT_OK


def cmd_corpus(args) -> int:
    graphs = corpus.random_corpus(args.count, args.max_edges, args.seed)
    graphs += corpus.exhaustive_corpus(args.sweep_edges)
    summary = corpus.agreement(graphs)
    _write(args.output, json.dumps(summary.to_dict()) + "\n")
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError("sizes must be comma-separated integers") from None
    if not sizes or min(sizes) < 4:
        raise argparse.ArgumentTypeError("sizes must be integers >= 4")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rectiplanar",
        description="Rectilinear planarity testing for independent-parallel series-parallel graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", help="decide rectilinear planarity")
    p.add_argument("input", help="graph file, or - for standard input")
    p.add_argument("--all-roots", action="store_true", help="evaluate every root and list its set")
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("draw", help="test, then build and compact a witness drawing")
    p.add_argument("input")
    p.add_argument("--svg", metavar="PATH", help="write an SVG drawing")
    p.add_argument("--json", metavar="PATH", help="write the drawing as JSON")
    p.add_argument("-o", "--output", help="where the JSON goes when --json is not given")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("kind", choices=["lowerbound", "random", "cycle"])
    p.add_argument("--N", type=int, default=2, help="lowerbound parameter (even, >= 2)")
    p.add_argument("--n-target", type=int, default=20, help="random: target vertex count")
    p.add_argument("--n", type=int, default=4, help="cycle length")
    p.add_argument("--seed", type=int, help="random: seed (required)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--sidecar", metavar="PATH", help="lowerbound: write G_0 vertex lists")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force rectilinear planarity (small graphs)")
    p.add_argument("input")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_EDGE_CAP, help="maximum edge count")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="timing over growing random instances (CSV)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--sizes", type=_sizes, default=list(bench.DEFAULT_SIZES))
    p.add_argument("--runs", type=int, default=5)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("corpus", help="tester versus oracle on the small corpus")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--max-edges", type=int, default=12)
    p.add_argument("--sweep-edges", type=int, default=8)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc.reason}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInfeasible as exc:
        print(f"error: {exc.reason}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except RectiplanarError as exc:  # pragma: no cover - every subclass is handled above
        print(f"error: {exc.reason}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: invalid argument: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
