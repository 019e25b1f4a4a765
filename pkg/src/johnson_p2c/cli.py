"""Command-line front end.

Subcommands: gen, hamilton, p2c, verify, oracle, sweep, fixture.  All
output is UTF-8 JSON (or DOT with --format dot) on stdout; diagnostics go
to stderr.  Exit codes: 0 success, 1 validation failure or absent oracle
solution, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .covers import EndpointQuad, P2CSolution
from .errors import CoverError
from .graphs import JohnsonGraph, QJGraph, fig1_counterexample, to_dot
from .hamilton import Path, hamilton_bruteforce, hamilton_johnson, hamilton_qj
from .p2c_johnson import p2c_complete, p2c_johnson
from .p2c_qj import p2c_qj
from .subsets import ElementSet
from .verify import (
    DEFAULT_ORACLE_CAP,
    check_hamilton,
    check_p2c,
    p2c_bruteforce,
    sweep,
)


class UsageError(Exception):
    pass


def _add_graph_flags(p):
    p.add_argument("--graph", choices=["johnson", "qj", "complete"])
    p.add_argument("--fixture", choices=["fig1"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--levels", help="comma-separated level cardinalities, e.g. 1,3")


def _build_graph(args):
    if args.fixture:
        return fig1_counterexample()[0]
    if args.graph is None:
        raise UsageError("one of --graph or --fixture is required")
    if args.n is None:
        raise UsageError("--n is required")
    if args.graph == "johnson":
        if args.k is None:
            raise UsageError("--k is required for --graph johnson")
        return JohnsonGraph(args.n, args.k)
    if args.graph == "qj":
        if not args.levels:
            raise UsageError("--levels is required for --graph qj")
        levels = [int(t) for t in args.levels.split(",")]
        return QJGraph(args.n, levels)
    return JohnsonGraph(args.n, 1)  # complete graph as J(n,1)


def _parse_vertex(text, args):
    if args.fixture:
        return int(text, 2)
    if args.n is None:
        raise UsageError("--n is required to parse subset vertices")
    return ElementSet.from_elements((int(t) for t in text.split(",")), args.n)


def _parse_quad(args):
    for flag in ("u", "v", "x", "y"):
        if getattr(args, flag) is None:
            raise UsageError(f"--{flag} is required")
    return EndpointQuad(
        _parse_vertex(args.u, args),
        _parse_vertex(args.v, args),
        _parse_vertex(args.x, args),
        _parse_vertex(args.y, args),
    )


def _emit(obj):
    print(json.dumps(obj))


def _solution_dot(g, sol):
    return to_dot(
        g,
        highlight={
            "color=red, penwidth=2": list(sol.path_uv),
            "color=blue, penwidth=2": list(sol.path_xy),
        },
    )


def _cmd_gen(args):
    g = _build_graph(args)
    if args.format == "dot":
        print(to_dot(g))
        return 0
    verts = list(g.vertices())
    edges = []
    seen = set()
    for v in verts:
        for w in g.neighbors(v):
            key = frozenset((repr(v), repr(w)))
            if key not in seen:
                seen.add(key)
                edges.append([_vertex_json(v), _vertex_json(w)])
    _emit(
        {
            "graph": g.descriptor(),
            "vertices": [_vertex_json(v) for v in verts],
            "edges": edges,
        }
    )
    return 0


def _vertex_json(v):
    return v.to_json() if isinstance(v, ElementSet) else v


def _cmd_hamilton(args):
    g = _build_graph(args)
    if args.s is None or args.t is None:
        raise UsageError("--s and --t are required")
    s = _parse_vertex(args.s, args)
    t = _parse_vertex(args.t, args)
    if args.fixture:
        path = hamilton_bruteforce(g, s, t)
        if path is None:
            _emit({"exists": False})
            return 1
    elif isinstance(g, QJGraph):
        path = hamilton_qj(g, s, t)
    else:
        path = hamilton_johnson(g, s, t)
    report = check_hamilton(g, path, s, t)
    if not report.valid:
        print(json.dumps(report.to_json()), file=sys.stderr)
        return 1
    _emit({"path": path.to_json()})
    return 0


def _cmd_p2c(args):
    g = _build_graph(args)
    q = _parse_quad(args)
    if args.graph == "complete":
        sol = p2c_complete(list(g.vertices()), q)
    elif isinstance(g, QJGraph):
        sol = p2c_qj(g, q, debug=args.debug_check)
    else:
        sol = p2c_johnson(g, q, debug=args.debug_check)
    report = check_p2c(g, q, sol)
    if not report.valid:
        print(json.dumps(report.to_json()), file=sys.stderr)
        return 1
    if args.format == "dot":
        print(_solution_dot(g, sol))
    else:
        _emit(sol.to_json())
    return 0


def _cmd_verify(args):
    g = _build_graph(args)
    q = _parse_quad(args)
    data = json.load(sys.stdin)
    sol = P2CSolution(
        Path(tuple(_load_vertex(w, args) for w in data["path_uv"])),
        Path(tuple(_load_vertex(w, args) for w in data["path_xy"])),
    )
    report = check_p2c(g, q, sol)
    _emit(report.to_json())
    return 0 if report.valid else 1


def _load_vertex(w, args):
    if isinstance(w, list):
        return ElementSet.from_elements(w, args.n)
    return w


def _cmd_oracle(args):
    g = _build_graph(args)
    q = _parse_quad(args)
    sol = p2c_bruteforce(g, q, cap=args.oracle_cap)
    if sol is None:
        _emit({"exists": False})
        return 1
    _emit({"exists": True, "solution": sol.to_json()})
    return 0


def _cmd_sweep(args):
    g = _build_graph(args)
    constructor = args.constructor
    if constructor is None:
        if args.fixture:
            constructor = "oracle"
        elif isinstance(g, QJGraph):
            constructor = "qj"
        elif args.graph == "complete":
            constructor = "complete"
        else:
            constructor = "johnson"
    summary = sweep(
        g,
        mode=args.mode,
        constructor=constructor,
        seed=args.seed,
        count=args.count,
        oracle_cap=args.oracle_cap,
        jobs=args.jobs,
    )
    _emit(summary.to_json())
    return 0 if summary.invalid == 0 and summary.errors == 0 else 1


def _cmd_fixture(args):
    g, quad = fig1_counterexample()
    if args.format == "dot":
        print(to_dot(g))
        return 0
    _emit(
        {
            "name": "fig1",
            "vertex_count": g.vertex_count,
            "edges": [
                [v, w] for v in g.vertices() for w in g.neighbors(v) if v < w
            ],
            "endpoints": {"u": quad[0], "v": quad[1], "x": quad[2], "y": quad[3]},
        }
    )
    return 0


def _make_parser():
    parser = argparse.ArgumentParser(
        prog="johnson-p2c",
        description="Disjoint path covers of Johnson and stacked Johnson graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit vertex and edge lists")
    _add_graph_flags(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("hamilton", help="Hamilton path between two vertices")
    _add_graph_flags(p)
    p.add_argument("--s")
    p.add_argument("--t")
    p.set_defaults(fn=_cmd_hamilton)

    p = sub.add_parser("p2c", help="paired 2-disjoint path cover")
    _add_graph_flags(p)
    for flag in ("u", "v", "x", "y"):
        p.add_argument(f"--{flag}")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--debug-check", action="store_true")
    p.set_defaults(fn=_cmd_p2c)

    p = sub.add_parser("verify", help="check a solution JSON read from stdin")
    _add_graph_flags(p)
    for flag in ("u", "v", "x", "y"):
        p.add_argument(f"--{flag}")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("oracle", help="exact brute-force P2C search")
    _add_graph_flags(p)
    for flag in ("u", "v", "x", "y"):
        p.add_argument(f"--{flag}")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("sweep", help="certify a constructor over many quads")
    _add_graph_flags(p)
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--constructor", choices=["johnson", "qj", "complete", "oracle"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("fixture", help="emit a built-in fixture graph")
    p.add_argument("--name", choices=["fig1"], default="fig1")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(fn=_cmd_fixture)

    parser.add_argument("--timing", action="store_true", help="report elapsed time on stderr")
    return parser


def run(argv) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    start = time.perf_counter()
    try:
        code = args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CoverError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "timing", False):
        print(f"elapsed: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
