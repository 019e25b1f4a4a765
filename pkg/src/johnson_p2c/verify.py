"""Certificates and ground truth.

``check_hamilton`` and ``check_p2c`` validate paths and covers against any
graph view exposing ``vertices()``, ``has_vertex`` and ``adjacent``.
``p2c_bruteforce`` is the exact oracle: a backtracking search that either
produces a checkable cover or proves none exists.  ``sweep`` drives a
constructor over every (or a sampled set of) endpoint quadruples and
certifies each result.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .covers import EndpointQuad, P2CSolution
from .errors import CoverError, SweepBudget, TooLargeForOracle
from .graphs import GenericGraph, to_generic
from .hamilton import Path

DEFAULT_ORACLE_CAP = 20
DEFAULT_SWEEP_BUDGET = 2_000_000


@dataclass
class CheckReport:
    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, code: str, detail: str) -> None:
        self.violations.append((code, detail))

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [{"code": c, "detail": d} for c, d in self.violations],
        }


def _check_path_steps(g, path, report: CheckReport) -> None:
    seen = set()
    for v in path:
        if not g.has_vertex(v):
            report.add("ForeignVertex", f"{v} is not a vertex of the host graph")
            return
        if v in seen:
            report.add("RepeatedVertex", f"{v} appears more than once")
            return
        seen.add(v)
    for a, b in zip(path, list(path)[1:]):
        if not g.adjacent(a, b):
            report.add("NotAdjacentStep", f"{a} -- {b} is not an edge")
            return


def check_hamilton(g, p, s, t) -> CheckReport:
    """Valid iff p runs from s to t, steps along edges, and covers V(g)."""
    report = CheckReport()
    path = list(p)
    if not path or path[0] != s or path[-1] != t:
        report.add("BadEndpoint", f"expected endpoints {s} and {t}")
    _check_path_steps(g, path, report)
    if report.valid and len(path) != g.vertex_count:
        report.add(
            "NotCovering", f"{len(path)} of {g.vertex_count} vertices covered"
        )
    return report


def check_p2c(g, q: EndpointQuad, sol: P2CSolution) -> CheckReport:
    """Valid iff the two paths are disjoint, edge-respecting, endpoint-correct
    (either orientation per path) and together cover V(g) exactly."""
    report = CheckReport()
    p1 = list(sol.path_uv)
    p2 = list(sol.path_xy)
    if not p1 or {p1[0], p1[-1]} != {q.u, q.v}:
        report.add("BadEndpoint", f"path_uv endpoints are not {{{q.u},{q.v}}}")
    if not p2 or {p2[0], p2[-1]} != {q.x, q.y}:
        report.add("BadEndpoint", f"path_xy endpoints are not {{{q.x},{q.y}}}")
    _check_path_steps(g, p1, report)
    _check_path_steps(g, p2, report)
    if not report.valid:
        return report
    s1, s2 = set(p1), set(p2)
    shared = s1 & s2
    if shared:
        report.add("PathsIntersect", f"shared vertices: {sorted(map(repr, shared))}")
        return report
    if len(s1) + len(s2) != g.vertex_count:
        report.add(
            "NotCovering",
            f"{len(s1) + len(s2)} of {g.vertex_count} vertices covered",
        )
    return report


# ---------------------------------------------------------------------------
# Exact P2C oracle.


def p2c_bruteforce(g, q: EndpointQuad, cap: int = DEFAULT_ORACLE_CAP):
    """Exact search for a paired 2-disjoint path cover; None if impossible."""
    q.validate(g)
    if g.vertex_count > cap:
        raise TooLargeForOracle(
            f"{g.vertex_count} vertices exceeds oracle cap {cap}"
        )
    if isinstance(g, GenericGraph):
        generic, verts = g, list(range(g.vertex_count))
    else:
        generic, verts = to_generic(g)
    index = {v: i for i, v in enumerate(verts)}
    found = _p2c_search(
        generic.adjacency, index[q.u], index[q.v], index[q.x], index[q.y]
    )
    if found is None:
        return None
    p1, p2 = found
    return P2CSolution(
        Path(tuple(verts[i] for i in p1)), Path(tuple(verts[i] for i in p2))
    )


def _p2c_search(adj, u, v, x, y):
    n = len(adj)
    visited = [False] * n
    visited[u] = True
    visited[x] = True
    p1 = [u]
    p2 = [x]

    def feasible(done1: bool) -> bool:
        # Reachability: every unvisited vertex must connect to an active path
        # end through unvisited vertices.  Degree: an unvisited vertex that is
        # not a pending terminal needs two usable neighbors to pass through.
        ends = []
        if not done1:
            ends.append(p1[-1])
        ends.append(p2[-1])
        seen = set(ends)
        stack = list(ends)
        while stack:
            w = stack.pop()
            for z in adj[w]:
                if not visited[z] and z not in seen:
                    seen.add(z)
                    stack.append(z)
        targets = {y}
        if not done1:
            targets.add(v)
        endset = set(ends)
        for w in range(n):
            if visited[w]:
                continue
            if w not in seen:
                return False
            avail = sum(1 for z in adj[w] if not visited[z] or z in endset)
            if avail == 0:
                return False
            if avail == 1 and w not in targets:
                return False
        return True

    def dfs2() -> bool:
        cur = p2[-1]
        if cur == y:
            return len(p1) + len(p2) == n
        if not feasible(True):
            return False
        for nxt in adj[cur]:
            if visited[nxt]:
                continue
            if nxt == y and len(p1) + len(p2) + 1 != n:
                continue
            visited[nxt] = True
            p2.append(nxt)
            if dfs2():
                return True
            p2.pop()
            visited[nxt] = False
        return False

    def dfs1() -> bool:
        cur = p1[-1]
        if cur == v:
            return dfs2()
        if not feasible(False):
            return False
        for nxt in adj[cur]:
            if visited[nxt] or nxt == y:
                continue
            visited[nxt] = True
            p1.append(nxt)
            if dfs1():
                return True
            p1.pop()
            visited[nxt] = False
        return False

    return (list(p1), list(p2)) if dfs1() else None


# ---------------------------------------------------------------------------
# Sweeps.


@dataclass
class SweepSummary:
    graph: dict
    mode: dict
    total: int
    valid: int
    invalid: int
    errors: int
    failures: list

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "mode": self.mode,
            "total": self.total,
            "valid": self.valid,
            "invalid": self.invalid,
            "errors": self.errors,
            "failures": self.failures,
        }


def _constructor_fn(name: str, oracle_cap: int):
    # Local imports keep verify free of a static dependency on the builders.
    from .p2c_johnson import p2c_complete, p2c_johnson
    from .p2c_qj import p2c_qj

    if name == "johnson":
        return lambda g, q: p2c_johnson(g, q)
    if name == "qj":
        return lambda g, q: p2c_qj(g, q)
    if name == "complete":
        return lambda g, q: p2c_complete(list(g.vertices()), q)
    if name == "oracle":
        return lambda g, q: p2c_bruteforce(g, q, cap=oracle_cap)
    raise ValueError(f"unknown constructor {name!r}")


def _quad_json(q: EndpointQuad) -> list:
    return [w.to_json() if hasattr(w, "to_json") else w for w in q.vertices()]


def _run_quads(g, quads, constructor: str, oracle_cap: int):
    fn = _constructor_fn(constructor, oracle_cap)
    total = valid = invalid = errors = 0
    failures = []
    for quad in quads:
        total += 1
        q = EndpointQuad(*quad)
        try:
            sol = fn(g, q)
        except CoverError as exc:
            errors += 1
            failures.append(
                {"quad": _quad_json(q), "error": f"{type(exc).__name__}: {exc}"}
            )
            continue
        if sol is None:
            invalid += 1
            failures.append({"quad": _quad_json(q), "error": "NoSolution"})
            continue
        report = check_p2c(g, q, sol)
        if report.valid:
            valid += 1
        else:
            invalid += 1
            failures.append(
                {"quad": _quad_json(q), "violations": report.to_json()["violations"]}
            )
    return total, valid, invalid, errors, failures


def _sweep_worker(args):
    descriptor, quads, constructor, oracle_cap = args
    g = _graph_from_descriptor(descriptor)
    raw = [
        tuple(_vertex_from_json(w, descriptor) for w in quad) for quad in quads
    ]
    return _run_quads(g, raw, constructor, oracle_cap)


def _graph_from_descriptor(descriptor: dict):
    from .graphs import JohnsonGraph, QJGraph, fig1_counterexample

    kind = descriptor["kind"]
    if kind == "johnson":
        return JohnsonGraph(descriptor["n"], descriptor["k"])
    if kind == "qj":
        return QJGraph(descriptor["n"], descriptor["levels"])
    if kind == "fig1":
        return fig1_counterexample()[0]
    raise ValueError(f"cannot rebuild graph of kind {kind!r}")


def _vertex_from_json(w, descriptor: dict):
    from .subsets import ElementSet

    if isinstance(w, list):
        return ElementSet.from_elements(w, descriptor["n"])
    return w


def sweep(
    g,
    mode: str = "exhaustive",
    constructor: str = "johnson",
    seed: int = 0,
    count: int = 1000,
    budget: int = DEFAULT_SWEEP_BUDGET,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    jobs: int = 1,
) -> SweepSummary:
    """Run a constructor over endpoint quadruples and certify every result."""
    verts = list(g.vertices())
    nv = len(verts)
    if mode == "exhaustive":
        n_quads = nv * (nv - 1) * (nv - 2) * (nv - 3)
        if n_quads > budget:
            raise SweepBudget(f"{n_quads} quads exceeds budget {budget}")
        quads = _ordered_quads(verts)
        mode_json = {"kind": "exhaustive"}
    elif mode == "sampled":
        rng = random.Random(seed)
        quads = [tuple(rng.sample(verts, 4)) for _ in range(count)]
        mode_json = {"kind": "sampled", "seed": seed, "count": count}
    else:
        raise ValueError(f"unknown sweep mode {mode!r}")

    if jobs > 1:
        results = _sweep_parallel(g, quads, constructor, oracle_cap, jobs)
    else:
        results = [_run_quads(g, quads, constructor, oracle_cap)]

    total = sum(r[0] for r in results)
    valid = sum(r[1] for r in results)
    invalid = sum(r[2] for r in results)
    errors = sum(r[3] for r in results)
    failures = [f for r in results for f in r[4]]
    failures.sort(key=lambda f: str(f["quad"]))
    try:
        descriptor = g.descriptor()
    except AttributeError:
        descriptor = {"kind": "generic", "vertex_count": g.vertex_count}
    return SweepSummary(
        graph=descriptor,
        mode=mode_json,
        total=total,
        valid=valid,
        invalid=invalid,
        errors=errors,
        failures=failures[:10],
    )


def _ordered_quads(verts):
    for u in verts:
        for v in verts:
            if v == u:
                continue
            for x in verts:
                if x == u or x == v:
                    continue
                for y in verts:
                    if y == u or y == v or y == x:
                        continue
                    yield (u, v, x, y)


def _sweep_parallel(g, quads, constructor, oracle_cap, jobs):
    from concurrent.futures import ProcessPoolExecutor

    descriptor = g.descriptor()
    quads = list(quads)
    quad_json = [
        tuple(w.to_json() if hasattr(w, "to_json") else w for w in quad)
        for quad in quads
    ]
    chunk = max(1, (len(quad_json) + jobs - 1) // jobs)
    batches = [
        (descriptor, quad_json[i : i + chunk], constructor, oracle_cap)
        for i in range(0, len(quad_json), chunk)
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_sweep_worker, batches))
