"""Command-line interface. Every command prints exactly one JSON object (``gen`` prints graph6).

Exit codes: 0 ok, 1 verification failed or fuzz found violations, 2 usage
or parse error, 3 class violation, 4 hypothesis violation, 5 oracle budget
exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, atlas
from .engine import ColoringOutcome, ColorClass, Trace, color_p2p3, color_p6, color_thm4, color_thm5
from .engine.common import color_by_components
from .engine.p2p3 import _color_p2p3_component, check_class
from .engine.p6 import _color_p6_component
from .errors import (ClassViolation, GraphFormatError, HypothesisViolation, OracleUndecided,
                     PreconditionError)
from .formats import parse_graph, write_graph6
from .fuzz import SCHEMA_VERSION, fuzz
from .graph import Graph
from .oracle import chromatic_number, clique_number, max_clique, optimal_coloring, verify_coloring
from .recognition import Pattern, classify, find_induced

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CLASS = 3
EXIT_HYPOTHESIS = 4
EXIT_BUDGET = 5

METHODS = ("auto", "thm3", "thm4", "thm5", "oracle")


class _Exit(Exception):
    def __init__(self, code: int, message: str, payload: dict | None = None):
        super().__init__(message)
        self.code = code
        self.payload = payload


def _report(command: str, **fields) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, **fields}


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj) + "\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii", errors="strict") as fh:
            return fh.read()
    except OSError as exc:
        raise _Exit(EXIT_USAGE, f"cannot read {path}: {exc.strerror}")
    except UnicodeDecodeError as exc:
        raise _Exit(EXIT_USAGE, f"{path} is not ASCII text: {exc}")


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if not text.strip():
        raise _Exit(EXIT_USAGE, "empty input")
    return parse_graph(text, fmt)


def _input_graph(args) -> Graph:
    g = _load_graph(args.input, args.format)
    args.loaded = g
    return g


def _needs_bull(g: Graph) -> ColoringOutcome:
    if find_induced(g, Pattern.BULL) is None:
        raise ClassViolation("BULL", None, "method thm5 needs every component to contain an induced bull")
    return color_thm5(g)


def _oracle_outcome(g: Graph) -> ColoringOutcome:
    col = optimal_coloring(g)
    k = len(set(col))
    classes = [ColorClass(c, "oracle", tuple(v for v in range(g.n) if col[v] == c)) for c in range(1, k + 1)]
    return ColoringOutcome(col, k, [Trace("oracle", "optimal", tuple(max_clique(g)), classes)])


def _color(g: Graph, method: str, trust: bool) -> ColoringOutcome:
    p6_class = (Pattern.P6, Pattern.DIAMOND, Pattern.K4)
    if method == "oracle":
        return _oracle_outcome(g)
    if method == "thm3":
        if trust:
            return color_by_components(g, _color_p2p3_component)
        return color_p2p3(g)
    if method == "thm4":
        if not trust:
            check_class(g, p6_class + (Pattern.BULL,))
        return color_by_components(g, color_thm4)
    if method == "thm5":
        if not trust:
            check_class(g, p6_class)
        return color_by_components(g, _needs_bull)
    if trust:
        return color_by_components(g, _color_p6_component)
    return color_p6(g)


def cmd_classify(args, out) -> int:
    g = _input_graph(args)
    rep = classify(g)
    _emit(_report("classify", **rep.to_dict(), in_p6_class=rep.in_p6_class,
                  in_p2p3_class=rep.in_p2p3_class), out)
    return EXIT_OK


def cmd_color(args, out) -> int:
    g = _input_graph(args)
    res = _color(g, args.method, args.trust)
    ok, edge = verify_coloring(g, res.coloring)
    if not ok:
        raise _Exit(EXIT_HYPOTHESIS, f"produced coloring is improper at edge {list(edge)}",
                    _report("color", error="improper_coloring", graph6=write_graph6(g),
                            vertices=list(edge)))
    extra = {}
    if args.verify:
        chi = chromatic_number(g)
        extra = {"chi": chi, "sandwich": chi <= res.colors_used <= res.bound}
        if not extra["sandwich"]:
            raise _Exit(EXIT_HYPOTHESIS, "chi <= colors_used <= bound failed",
                        _report("color", error="sandwich", graph6=write_graph6(g), **extra))
    _emit(_report("color", method=args.method, n=g.n, **res.to_dict(), verified=True, **extra), out)
    return EXIT_OK


def cmd_chi(args, out) -> int:
    g = _input_graph(args)
    col = optimal_coloring(g)
    _emit(_report("chi", n=g.n, chi=len(set(col)), omega=clique_number(g), coloring=col), out)
    return EXIT_OK


def cmd_gen(args, out) -> int:
    g = atlas.named_graph(args.name, args.n)
    out.write(write_graph6(g) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = _load_graph(args.graph, args.format)
    try:
        data = json.loads(_read_text(args.coloring))
    except json.JSONDecodeError as exc:
        raise _Exit(EXIT_USAGE, f"coloring is not valid JSON: {exc}")
    if isinstance(data, dict):
        data = data.get("coloring")
    if not isinstance(data, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in data):
        raise _Exit(EXIT_USAGE, "coloring must be a JSON list of integers or an object with a 'coloring' list")
    ok, edge = verify_coloring(g, data)
    _emit(_report("verify", valid=ok, edge=None if edge is None else list(edge),
                  colors_used=len(set(data))), out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_fuzz(args, out) -> int:
    if args.trials is not None and args.trials < 0:
        raise _Exit(EXIT_USAGE, "--trials must be nonnegative")
    summary = fuzz(args.seed, args.n_max, args.trials, args.jobs, args.samples)
    _emit(summary, out)
    return EXIT_FAIL if summary["violation_count"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hexachrome", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"hexachrome {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin (default)")
        p.add_argument("--format", choices=("auto", "g6", "edges"), default="auto")

    p = sub.add_parser("classify", help="report pattern freeness with witnesses")
    graph_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("color", help="color a class member and report the trace")
    graph_input(p)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--verify", action="store_true", help="also compute chi exactly and check chi <= used <= bound")
    p.add_argument("--trust", action="store_true", help="skip the class-membership check")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("chi", help="exact chromatic number with a certificate coloring")
    graph_input(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("gen", help="print a named graph as graph6")
    p.add_argument("name", help="e.g. schlafli_complement, clebsch, grotzsch, petersen, bull, cycle(5)")
    p.add_argument("n", nargs="?", type=int, help="size for parametric families")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check that a coloring is proper")
    p.add_argument("graph")
    p.add_argument("coloring", help="JSON list, or an object with a 'coloring' list (e.g. a color report)")
    p.add_argument("--format", choices=("auto", "g6", "edges"), default="auto")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="run the corpus through both coloring procedures and the oracle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--trials", type=int, default=None, help="stop after this many corpus graphs")
    p.add_argument("--samples", type=int, default=None,
                   help="sampled class members beyond the exhaustive part (default 0 for n-max <= 8, else 64)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_fuzz)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except _Exit as exc:
        if exc.payload is not None:
            _emit(exc.payload, out)
        print(f"hexachrome: {exc}", file=sys.stderr)
        return exc.code
    except (GraphFormatError, PreconditionError) as exc:
        print(f"hexachrome: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ClassViolation as exc:
        witness = None if exc.witness is None else list(exc.witness)
        _emit(_report(args.command, error="class_violation", pattern=exc.pattern, witness=witness,
                      message=str(exc)), out)
        print(f"hexachrome: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except HypothesisViolation as exc:
        loaded = getattr(args, "loaded", None)
        g6 = None if loaded is None else write_graph6(loaded)
        _emit(_report(args.command, error="hypothesis_violation", step=exc.step,
                      vertices=list(exc.vertices), message=str(exc), graph6=g6), out)
        print(f"hexachrome: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except OracleUndecided as exc:
        _emit(_report(args.command, error="oracle_undecided", budget_ms=exc.budget_ms,
                      message=str(exc)), out)
        print(f"hexachrome: {exc}; raise HEXACHROME_BUDGET_MS to allow more time", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
