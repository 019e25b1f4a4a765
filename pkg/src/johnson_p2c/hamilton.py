"""Hamilton-path builders for K_n-like vertex lists, J(n,k) and QJ(n,A).

The Johnson builder recursively splits J(n,k) by the element n into
X (vertices without n, isomorphic to J(n-1,k)) and Y (vertices with n,
isomorphic to J(n-1,k-1)), splicing the smaller side's Hamilton path into
an edge of the larger side's path.  The QJ builder peels the top level of
the stack.  Recursion bottoms out in an exact backtracking search on any
host graph with at most 12 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import CoverError, EqualEndpoints, NotAVertex, SpliceEdgeNotFound
from .graphs import GenericGraph, JohnsonGraph, QJGraph, to_generic
from .subsets import ElementSet, complement, down_neighbors, k_subsets, up_neighbors

BRUTE_FORCE_LIMIT = 12


@dataclass(frozen=True)
class Path:
    """An ordered sequence of pairwise-distinct, consecutively adjacent vertices."""

    vertices: tuple

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def reversed(self) -> "Path":
        return Path(tuple(reversed(self.vertices)))

    def to_json(self):
        return [
            v.to_json() if isinstance(v, ElementSet) else v for v in self.vertices
        ]


def _sort_key(v):
    return v.bits if isinstance(v, ElementSet) else v


# ---------------------------------------------------------------------------
# Exact search on explicit graphs.

_BF_CACHE: dict = {}


def hamilton_bruteforce(g: GenericGraph, s: int, t: int) -> Path | None:
    """Exact Hamilton path search with connectivity and dead-end pruning."""
    if s == t:
        raise EqualEndpoints(f"endpoints coincide: {s}")
    if not (g.has_vertex(s) and g.has_vertex(t)):
        raise NotAVertex(f"{s} or {t} not in graph")
    key = (g.key(), s, t)
    if key in _BF_CACHE:
        hit = _BF_CACHE[key]
        return Path(hit) if hit is not None else None
    result = _ham_search(g.adjacency, s, t)
    _BF_CACHE[key] = tuple(result) if result is not None else None
    return Path(tuple(result)) if result is not None else None


def _ham_search(adj, s: int, t: int) -> list[int] | None:
    n = len(adj)
    if n == 1:
        return None
    path = [s]
    visited = [False] * n
    visited[s] = True

    def feasible(cur: int) -> bool:
        # Every unvisited vertex must be reachable from cur without crossing
        # visited vertices, and (unless it is the final target) must keep at
        # least two usable neighbors to pass through.
        stack = [cur]
        seen = {cur}
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not visited[w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        for w in range(n):
            if visited[w]:
                continue
            if w not in seen:
                return False
            avail = sum(1 for z in adj[w] if not visited[z] or z == cur)
            if avail == 0:
                return False
            if avail == 1 and w != t:
                return False
        return True

    def dfs(cur: int) -> bool:
        if len(path) == n:
            return cur == t
        if not feasible(cur):
            return False
        for nxt in adj[cur]:
            if visited[nxt]:
                continue
            if nxt == t and len(path) != n - 1:
                continue
            visited[nxt] = True
            path.append(nxt)
            if dfs(nxt):
                return True
            path.pop()
            visited[nxt] = False
        return False

    return path if dfs(s) else None


# ---------------------------------------------------------------------------
# Complete graphs (J(n,1), J(n,n-1) and friends).


def hamilton_complete(vertices, s, t) -> Path:
    """Hamilton path of a complete graph: s, the rest in canonical order, t."""
    if s == t:
        raise EqualEndpoints(f"endpoints coincide: {s}")
    vertices = list(vertices)
    if s not in vertices or t not in vertices:
        raise NotAVertex("an endpoint is not among the given vertices")
    middle = sorted((v for v in vertices if v != s and v != t), key=_sort_key)
    return Path(tuple([s, *middle, t]))


# ---------------------------------------------------------------------------
# Johnson graphs.

_JOHNSON_CACHE: dict = {}


def hamilton_johnson(g: JohnsonGraph, s: ElementSet, t: ElementSet) -> Path:
    if s == t:
        raise EqualEndpoints(f"endpoints coincide: {s}")
    if not (g.has_vertex(s) and g.has_vertex(t)):
        raise NotAVertex(f"{s} or {t} not a vertex of {g}")
    return Path(tuple(_ham_johnson(g.n, g.k, s, t)))


def _ham_small(graph, s, t) -> list:
    generic, verts = to_generic(graph)
    index = {v: i for i, v in enumerate(verts)}
    found = hamilton_bruteforce(generic, index[s], index[t])
    if found is None:
        raise CoverError(f"no Hamilton path from {s} to {t} in {graph}")
    return [verts[i] for i in found]


def _y_neighbors(a: ElementSet, n: int) -> list[ElementSet]:
    """Neighbors of an X-vertex inside Y, bit-vector order: swap one element for n."""
    nbit = 1 << n
    return sorted(
        (ElementSet(a.bits ^ (1 << e) | nbit, n) for e in a.elements()),
        key=_sort_key,
    )


def _x_neighbors(a: ElementSet, n: int) -> list[ElementSet]:
    """Neighbors of a Y-vertex inside X: swap n for a missing element."""
    base = a.bits & ~(1 << n)
    return sorted(
        (
            ElementSet(base | (1 << e), n)
            for e in range(1, n)
            if not a.bits >> e & 1
        ),
        key=_sort_key,
    )


def _ham_johnson(n: int, k: int, s: ElementSet, t: ElementSet) -> list[ElementSet]:
    key = (n, k, s.bits, t.bits)
    hit = _JOHNSON_CACHE.get(key)
    if hit is not None:
        return list(hit)
    result = _ham_johnson_build(n, k, s, t)
    _JOHNSON_CACHE[key] = tuple(result)
    return result


def _ham_johnson_build(n, k, s, t):
    if 2 * k > n:
        # J(n,k) and J(n,n-k) are isomorphic under complementation.
        return [complement(v) for v in _ham_johnson(n, n - k, complement(s), complement(t))]
    if k == 1:
        return list(hamilton_complete(k_subsets(n, 1), s, t))
    if comb(n, k) <= BRUTE_FORCE_LIMIT:
        return _ham_small(JohnsonGraph(n, k), s, t)

    nbit = 1 << n
    s_in_y = bool(s.bits & nbit)
    t_in_y = bool(t.bits & nbit)

    if not s_in_y and not t_in_y:
        sub = _ham_johnson(n - 1, k, s.with_ground_set(n - 1), t.with_ground_set(n - 1))
        h = [v.with_ground_set(n) for v in sub]
        a, b = h[0], h[1]
        ap = _y_neighbors(a, n)[0]
        bp = next(w for w in _y_neighbors(b, n) if w != ap)
        detour = _lift_y(_ham_johnson(n - 1, k - 1, _drop_n(ap), _drop_n(bp)), n)
        return [h[0], *detour, *h[1:]]

    if s_in_y and t_in_y:
        sub = _ham_johnson(n - 1, k - 1, _drop_n(s), _drop_n(t))
        h = _lift_y(sub, n)
        a, b = h[0], h[1]
        ap = _x_neighbors(a, n)[0]
        bp = next(w for w in _x_neighbors(b, n) if w != ap)
        detour = [
            v.with_ground_set(n)
            for v in _ham_johnson(
                n - 1, k, ap.with_ground_set(n - 1), bp.with_ground_set(n - 1)
            )
        ]
        return [h[0], *detour, *h[1:]]

    if s_in_y:
        return list(reversed(_ham_johnson_build(n, k, t, s)))

    # s in X, t in Y: end the X-path at an auxiliary vertex bridging into Y.
    a = next(v.with_ground_set(n) for v in k_subsets(n - 1, k) if v.bits != s.bits)
    ap = next(w for w in _y_neighbors(a, n) if w != t)
    h1 = [
        v.with_ground_set(n)
        for v in _ham_johnson(n - 1, k, s.with_ground_set(n - 1), a.with_ground_set(n - 1))
    ]
    h2 = _lift_y(_ham_johnson(n - 1, k - 1, _drop_n(ap), _drop_n(t)), n)
    return h1 + h2


def _drop_n(v: ElementSet) -> ElementSet:
    return ElementSet(v.bits & ~(1 << v.n), v.n - 1)


def _lift_y(vs, n: int) -> list[ElementSet]:
    nbit = 1 << n
    return [ElementSet(v.bits | nbit, n) for v in vs]


# ---------------------------------------------------------------------------
# Stacked Johnson graphs.

_QJ_CACHE: dict = {}


def hamilton_qj(g: QJGraph, s: ElementSet, t: ElementSet) -> Path:
    if s == t:
        raise EqualEndpoints(f"endpoints coincide: {s}")
    if not (g.has_vertex(s) and g.has_vertex(t)):
        raise NotAVertex(f"{s} or {t} not a vertex of {g}")
    return Path(tuple(_ham_qj(g.n, g.levels.levels, s, t)))


def _ham_qj(n: int, levels: tuple, s: ElementSet, t: ElementSet) -> list[ElementSet]:
    if len(levels) == 1:
        return _ham_johnson(n, levels[0], s, t)
    key = (n, levels, s.bits, t.bits)
    hit = _QJ_CACHE.get(key)
    if hit is not None:
        return list(hit)
    result = _ham_qj_build(n, levels, s, t)
    _QJ_CACHE[key] = tuple(result)
    return result


def _ham_qj_build(n, levels, s, t):
    g = QJGraph(n, levels)
    if g.vertex_count <= BRUTE_FORCE_LIMIT:
        return _ham_small(g, s, t)

    top = levels[-1]
    below = levels[-2]
    lower = levels[:-1]
    s_top = s.cardinality() == top
    t_top = t.cardinality() == top

    if not s_top and not t_top:
        h = _ham_qj(n, lower, s, t)
        i = _find_level_edge(h, below)
        a, b = h[i], h[i + 1]
        if top == n:
            apex = ElementSet(((1 << n) - 1) << 1, n)
            return [*h[: i + 1], apex, *h[i + 1 :]]
        ap = up_neighbors(a, top)[0]
        bp = next(w for w in up_neighbors(b, top) if w != ap)
        return [*h[: i + 1], *_ham_johnson(n, top, ap, bp), *h[i + 1 :]]

    if s_top and t_top:
        h = _ham_johnson(n, top, s, t)
        a, b = h[0], h[1]
        ap = down_neighbors(a, below)[0]
        bp = next(w for w in down_neighbors(b, below) if w != ap)
        return [h[0], *_ham_qj(n, lower, ap, bp), *h[1:]]

    if s_top:
        return list(reversed(_ham_qj_build(n, levels, t, s)))

    # s below, t in the top level: bridge through a cross edge.
    if top == n:
        a = next(v for v in k_subsets(n, below) if v != s)
        return _ham_qj(n, lower, s, a) + [t]
    a = next(v for v in k_subsets(n, below) if v != s)
    ap = next(w for w in up_neighbors(a, top) if w != t)
    return _ham_qj(n, lower, s, a) + _ham_johnson(n, top, ap, t)


def _find_level_edge(path, card: int, forbidden=()) -> int:
    """Index of the first path edge whose endpoints both have the given
    cardinality and avoid the forbidden vertices."""
    for i in range(len(path) - 1):
        a, b = path[i], path[i + 1]
        if (
            a.bits.bit_count() == card
            and b.bits.bit_count() == card
            and a not in forbidden
            and b not in forbidden
        ):
            return i
    raise SpliceEdgeNotFound(f"no usable within-level edge at cardinality {card}")


def clear_caches() -> None:
    _BF_CACHE.clear()
    _JOHNSON_CACHE.clear()
    _QJ_CACHE.clear()
