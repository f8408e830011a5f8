"""Command-line front end.

Exit codes: 0 success (or "yes"), 1 a "no" answer or a failed check,
2 usage or input errors, 3 refusal because a graph is above the size cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .codecs import ParseError, emit_edge_list, parse_edge_list, read_graph6_lines, to_graph6
from .graph import Graph, GraphError, vertex_mask
from .recognizers import classify_cubic, recognize_half_tough_4regular
from .reductions import (
    GkParams,
    attach_gadgets_even,
    attach_gadgets_odd,
    build_bipartite_double,
    build_gk,
    build_hr,
)
from .solver import (
    DEFAULT_EXHAUSTIVE_CAP,
    SizeCapError,
    Witness,
    decide_t_tough,
    half_tough_spanning_subgraph,
    parse_rational,
    refute_heuristic,
    toughness,
    verify_witness,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sniff_format(path: str, explicit: Optional[str]) -> str:
    if explicit:
        return explicit
    if path == "-":
        return "g6"
    ext = os.path.splitext(path)[1].lower()
    if ext in (".g6", ".graph6"):
        return "g6"
    if ext in (".el", ".edges"):
        return "el"
    raise UsageError(f"cannot tell the format of {path!r}; pass --format g6 or --format el")


def read_graphs(path: str, fmt: Optional[str]) -> list[Graph]:
    fmt = _sniff_format(path, fmt)
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="ascii", errors="surrogateescape") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    graphs = [parse_edge_list(text)] if fmt == "el" else list(read_graph6_lines(text.splitlines()))
    if not graphs:
        raise UsageError(f"no graphs in {path}")
    return graphs


def _emit(obj, as_json: bool, text: str) -> None:
    print(json.dumps(obj, sort_keys=True) if as_json else text)


# -- subcommands --------------------------------------------------------------


def cmd_tau(args) -> int:
    for g in read_graphs(args.input, args.format):
        tau = toughness(g, cap=args.max_n, workers=args.workers)
        _emit(tau.to_json(), args.json, str(tau))
    return EXIT_OK


def cmd_decide(args) -> int:
    status = EXIT_OK
    for g in read_graphs(args.input, args.format):
        if g.n > args.max_n:
            # above the cap only a heuristic "no" is possible
            w = refute_heuristic(g, args.t, budget=args.budget, seed=args.seed)
            if w is None:
                raise SizeCapError(
                    f"n={g.n} is above the exhaustive cap {args.max_n} and the heuristic "
                    "found no witness; raise --max-n to decide exactly"
                )
            tough, witness = False, w
        else:
            d = decide_t_tough(g, args.t, cap=args.max_n)
            tough, witness = d.tough, d.witness
        if not tough:
            status = EXIT_NO
        payload = {"tough": tough, "witness": witness.to_json() if witness else None}
        text = "yes" if tough else f"no {json.dumps(witness.to_json(), sort_keys=True)}"
        _emit(payload, args.json, text)
    return status


def _load_witness(source: str) -> Witness:
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            source = fh.read()
    try:
        data = json.loads(source)
        return Witness.from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed witness: {exc}") from None


def cmd_witness_verify(args) -> int:
    graphs = read_graphs(args.input, args.format)
    if len(graphs) != 1:
        raise UsageError("witness-verify expects exactly one graph")
    g = graphs[0]
    if args.cutset is not None:
        try:
            cut = vertex_mask(int(x) for x in args.cutset.split(",") if x.strip())
        except ValueError:
            raise UsageError("--cutset takes comma-separated vertex indices") from None
        w = Witness.of(g, cut & g.full) if not cut & ~g.full else Witness(cut, 0, 0)
    elif args.witness is not None:
        w = _load_witness(args.witness)
    else:
        raise UsageError("witness-verify needs --witness or --cutset")
    ok = verify_witness(g, args.t, w)
    _emit({"valid": ok, "witness": w.to_json()}, args.json, "valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_NO


def _write_graph(g: Graph, args) -> None:
    text = emit_edge_list(g) if getattr(args, "to", "g6") == "el" else to_graph6(g)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_spanning_half(args) -> int:
    for g in read_graphs(args.input, args.format):
        h = half_tough_spanning_subgraph(g, cap=args.max_n)
        if args.json:
            print(json.dumps({"graph6": to_graph6(h), "removed_edges": g.m - h.m}, sort_keys=True))
        else:
            _write_graph(h, args)
    return EXIT_OK


def _single_input(args) -> Graph:
    if args.input is None:
        raise UsageError(f"gadget {args.gadget} needs --in")
    graphs = read_graphs(args.input, args.format)
    if len(graphs) != 1:
        raise UsageError("gadget commands take exactly one input graph")
    return graphs[0]


def cmd_gadget(args) -> int:
    if args.gadget == "hr":
        if args.r is None:
            raise UsageError("gadget hr needs --r")
        g, labels = build_hr(args.r)
    elif args.gadget == "bg":
        g, labels = build_bipartite_double(_single_input(args))
    elif args.gadget == "gk":
        if args.t is None or args.k is None:
            raise UsageError("gadget gk needs --t a/b and --k")
        g, labels = build_gk(_single_input(args), GkParams.from_t(args.t, args.k))
    else:
        if args.r is None:
            raise UsageError(f"gadget {args.gadget} needs --r")
        attach = attach_gadgets_odd if args.gadget == "attach-odd" else attach_gadgets_even
        g, labels = attach(_single_input(args), args.r)
    if args.json:
        print(json.dumps({"graph6": to_graph6(g), "labels": labels}))
        return EXIT_OK
    _write_graph(g, args)
    print(json.dumps(labels))
    return EXIT_OK


def cmd_recognize(args) -> int:
    status = EXIT_OK
    for g in read_graphs(args.input, args.format):
        if args.family == "cubic":
            c = classify_cubic(g)
            text = c.kind.value + (f" cut_vertex={c.cut_vertex}" if c.cut_vertex is not None else "")
            _emit(c.to_json(), args.json, text)
        else:
            ok = recognize_half_tough_4regular(g)
            status = status if ok else EXIT_NO
            _emit({"half_tough": ok}, args.json, "yes" if ok else "no")
    return status


def cmd_verify(args) -> int:
    from .harness import CHECKS, MAX_ORACLE_N, HarnessConfig, run_all, summary_table, write_json_lines

    if args.list:
        print("\n".join(CHECKS))
        return EXIT_OK
    try:
        cfg = HarnessConfig(
            max_n=args.max_n,
            seed=args.seed,
            workers=args.workers,
            heuristic_budget=args.budget,
            cubic_corpus=args.cubic_corpus,
            # external corpora are checked up to the oracle's limit
            cubic_corpus_max_n=MAX_ORACLE_N if args.cubic_corpus else 14,
            quartic_corpus=args.quartic_corpus,
            fault=args.inject_fault,
            checks=tuple(args.checks) or None,
        )
        reports, status = run_all(cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.report:
        if args.report == "-":
            write_json_lines(reports, sys.stdout)
        else:
            with open(args.report, "w", encoding="utf-8") as fh:
                write_json_lines(reports, fh)
    if args.json:
        write_json_lines(reports, sys.stdout)
    elif args.report != "-":
        print(summary_table(reports))
    return status


def cmd_convert(args) -> int:
    graphs = read_graphs(args.input, args.format)
    if args.to == "el" and len(graphs) != 1:
        raise UsageError("edge-list output holds exactly one graph")
    lines = [emit_edge_list(g) if args.to == "el" else to_graph6(g) for g in graphs]
    text = "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toughkit", description="Exact graph toughness tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p, required=True):
        p.add_argument("--in", dest="input", required=required, metavar="PATH",
                       help="graph file (.g6 or .el), or - for stdin")
        p.add_argument("--format", choices=("g6", "el"), help="override the extension-based format")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def cap(p):
        p.add_argument("--max-n", type=int, default=DEFAULT_EXHAUSTIVE_CAP,
                       help=f"exhaustive size cap (default {DEFAULT_EXHAUSTIVE_CAP})")

    p = sub.add_parser("tau", help="exact toughness")
    graph_input(p)
    cap(p)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("decide", help="is the graph t-tough? exit 0 yes, 1 no")
    graph_input(p)
    cap(p)
    p.add_argument("--t", type=_rational, required=True, help="threshold as a/b")
    p.add_argument("--budget", type=int, default=2000, help="heuristic budget above the cap")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("witness-verify", help="check a non-t-toughness witness")
    graph_input(p)
    p.add_argument("--t", type=_rational, required=True)
    p.add_argument("--witness", help="witness JSON, inline or as a file path")
    p.add_argument("--cutset", help="comma-separated cutset vertices")
    p.set_defaults(func=cmd_witness_verify)

    p = sub.add_parser("spanning-half", help="spanning subgraph with toughness exactly 1/2")
    graph_input(p)
    cap(p)
    p.add_argument("--out", help="write the graph here instead of stdout")
    p.add_argument("--to", choices=("g6", "el"), default="g6")
    p.set_defaults(func=cmd_spanning_half)

    p = sub.add_parser("gadget", help="build a reduction gadget; prints graph6 and a label map")
    p.add_argument("gadget", choices=("gk", "bg", "hr", "attach-odd", "attach-even"))
    graph_input(p, required=False)
    p.add_argument("--t", type=_rational, help="a/b for gk")
    p.add_argument("--k", type=int, help="k for gk")
    p.add_argument("--r", type=int, help="degree for hr and the attach gadgets")
    p.add_argument("--out", help="write the graph here instead of stdout")
    p.add_argument("--to", choices=("g6", "el"), default="g6")
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("recognize", help="polynomial recognizers for cubic and 4-regular graphs")
    p.add_argument("family", choices=("cubic", "4reg"))
    graph_input(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify", help="run the verification checks")
    p.add_argument("checks", nargs="*", help="check ids (default: all)")
    p.add_argument("--list", action="store_true", help="list check ids")
    p.add_argument("--max-n", type=int, default=None, help="clamp every check to this order")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=2000, help="heuristic budget per search")
    p.add_argument("--cubic-corpus", help="graph6 file of cubic graphs (default: bundled)")
    p.add_argument("--quartic-corpus", help="graph6 file of 4-regular graphs (default: bundled)")
    p.add_argument("--report", help="write JSON lines here (- for stdout)")
    p.add_argument("--json", action="store_true", help="JSON lines on stdout instead of the table")
    p.add_argument("--inject-fault", choices=("bg", "gk", "hr", "attach"), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="convert between graph6 and edge lists")
    graph_input(p)
    p.add_argument("--to", choices=("g6", "el"), required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SizeCapError as exc:
        print(f"toughkit: refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ParseError, GraphError, ValueError, NotImplementedError) as exc:
        print(f"toughkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
