"""Command line front end.

    clubsplit cluster  --input G --algo 2ccedvs --output clusters.txt
    clubsplit eval     --input G --clusters clusters.txt [--truth truth.txt]
    clubsplit generate --output G --truth truth.txt --vertices 137 ...
    clubsplit oracle   --input G --algo 2cced [--kmax 6]

Exit codes: 0 success, 1 usage error, 2 input error, 3 oracle budget refusal.
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from .cced import run_2cced
from .ccedvs import run_2ccedvs
from .graph import (GraphError, format_clusters, format_edge_list, format_edit_log,
                    parse_clusters, parse_edge_list, parse_edit_log)
from .metrics import quality_report
from .oracle import OracleBudget, OracleRefusal, exact_2cced, exact_2ccedvs
from .synth import SynthParams, format_truth, generate_planted

log = logging.getLogger("clubsplit")

EXIT_USAGE, EXIT_INPUT, EXIT_REFUSED = 1, 2, 3
DEFAULT_SEED = 0
ALGORITHMS = {"2cced": run_2cced, "2ccedvs": run_2ccedvs}


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _load_graph(args):
    return parse_edge_list(_read(args.input), min_weight=args.min_weight)


def cmd_cluster(args) -> int:
    g = _load_graph(args)
    t0 = time.perf_counter()
    clustering, edits = ALGORITHMS[args.algo](g)
    runtime = time.perf_counter() - t0
    _write(args.output, format_clusters(clustering.origin_view))
    _write(args.edits or args.output + ".edits", format_edit_log(edits))
    print(f"cost {len(edits)} clusters {len(clustering)} runtime {runtime:.3f}")
    return 0


def cmd_eval(args) -> int:
    g = _load_graph(args)
    pred = parse_clusters(_read(args.clusters))
    unknown = sorted({v for c in pred for v in c} - set(g.adj))
    if unknown:
        raise InputError(f"clusters reference unknown vertices: {unknown[:10]}")
    truth = parse_clusters(_read(args.truth)) if args.truth else None
    edits = parse_edit_log(_read(args.edits)) if args.edits else None
    text = quality_report(g, pred, truth, edits).to_text()
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_generate(args) -> int:
    params = SynthParams(n=args.vertices, communities=args.communities,
                         overlap_fraction=args.overlap, p_in=args.p_in,
                         p_out=args.p_out, rng_seed=args.seed)
    try:
        params.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g, truth = generate_planted(params)
    _write(args.output, format_edge_list(g))
    _write(args.truth, format_truth(truth))
    return 0


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    solver = exact_2cced if args.algo == "2cced" else exact_2ccedvs
    k = solver(g, OracleBudget(kmax=args.kmax))
    print("exceeds kmax" if k is None else k)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="clubsplit", description="2-club correlation clustering with vertex splitting")
    parser.add_argument("--verbose", "-v", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_input(p):
        p.add_argument("--input", required=True, help="edge list file")
        p.add_argument("--min-weight", type=float, default=None,
                       help="drop edges whose weight is below this value")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("cluster", help="cluster a graph")
    graph_input(p)
    p.add_argument("--algo", required=True, choices=sorted(ALGORITHMS))
    p.add_argument("--output", required=True, help="clusters file")
    p.add_argument("--edits", help="edit log file (default: OUTPUT.edits)")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("eval", help="score a clustering")
    graph_input(p)
    p.add_argument("--clusters", required=True)
    p.add_argument("--truth")
    p.add_argument("--edits", help="edit log, to report the cost")
    p.add_argument("--output", help="report file (default: stdout)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("generate", help="sample a planted-community graph")
    p.add_argument("--output", required=True, help="edge list file")
    p.add_argument("--truth", required=True, help="ground truth file")
    p.add_argument("--vertices", type=int, default=137)
    p.add_argument("--communities", type=int, default=5)
    p.add_argument("--overlap", type=float, default=0.3)
    p.add_argument("--p-in", type=float, default=0.5)
    p.add_argument("--p-out", type=float, default=0.04)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="exact minimum edit cost of a tiny graph")
    graph_input(p)
    p.add_argument("--algo", required=True, choices=sorted(ALGORITHMS))
    p.add_argument("--kmax", type=int, default=6)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"clubsplit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, GraphError) as exc:
        print(f"clubsplit: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleRefusal as exc:
        print(f"clubsplit: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
