"""Implicit graph models for J(n,k) and QJ(n,A), plus explicit fixtures.

Johnson and QJ graphs never store adjacency: the vertex currency is
``ElementSet`` and every adjacency query is O(1) bit arithmetic.
``GenericGraph`` is an explicit structure used only by the brute-force
oracles and the built-in fixtures.
"""

from __future__ import annotations

from math import comb
from typing import Iterator

from .errors import NotAVertex
from .subsets import (
    ElementSet,
    down_neighbors,
    k_subsets,
    same_level_neighbors,
    up_neighbors,
)


class JohnsonGraph:
    """The Johnson graph J(n,k) on all k-subsets of [n]."""

    __slots__ = ("n", "k")

    def __init__(self, n: int, k: int):
        if not 0 <= k <= n:
            raise ValueError(f"k={k} outside [0, {n}]")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("JohnsonGraph is immutable")

    @property
    def vertex_count(self) -> int:
        return comb(self.n, self.k)

    def vertices(self) -> Iterator[ElementSet]:
        return k_subsets(self.n, self.k)

    def has_vertex(self, s: ElementSet) -> bool:
        return s.n == self.n and s.cardinality() == self.k

    def adjacent(self, a: ElementSet, b: ElementSet) -> bool:
        return (a.bits ^ b.bits).bit_count() == 2

    def neighbors(self, s: ElementSet) -> list[ElementSet]:
        if not self.has_vertex(s):
            raise NotAVertex(f"{s} is not a vertex of {self}")
        return same_level_neighbors(s)

    def key(self):
        return ("johnson", self.n, self.k)

    def descriptor(self) -> dict:
        return {"kind": "johnson", "n": self.n, "k": self.k}

    def __repr__(self) -> str:
        return f"J({self.n},{self.k})"


class LevelSpec:
    """A strictly increasing list of level cardinalities a_1 < ... < a_m."""

    __slots__ = ("levels",)

    def __init__(self, levels):
        levels = tuple(levels)
        if not levels:
            raise ValueError("level set must be non-empty")
        if any(b <= a for a, b in zip(levels, levels[1:])):
            raise ValueError(f"levels {levels} not strictly increasing")
        if levels[0] < 1:
            raise ValueError(f"level {levels[0]} below 1")
        object.__setattr__(self, "levels", levels)

    def __setattr__(self, name, value):
        raise AttributeError("LevelSpec is immutable")

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)

    def __getitem__(self, i):
        return self.levels[i]


class QJGraph:
    """The stacked Johnson graph QJ(n,A).

    A vertex's level is determined by its cardinality, which must be a
    member of A.  Edges are Johnson edges inside a level plus containment
    edges between consecutive levels.
    """

    __slots__ = ("n", "levels")

    def __init__(self, n: int, levels):
        if not isinstance(levels, LevelSpec):
            levels = LevelSpec(levels)
        if levels[-1] > n:
            raise ValueError(f"level {levels[-1]} exceeds ground set size {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "levels", levels)

    def __setattr__(self, name, value):
        raise AttributeError("QJGraph is immutable")

    @property
    def vertex_count(self) -> int:
        return sum(comb(self.n, a) for a in self.levels)

    def vertices(self) -> Iterator[ElementSet]:
        for a in self.levels:
            yield from k_subsets(self.n, a)

    def has_vertex(self, s: ElementSet) -> bool:
        return s.n == self.n and s.cardinality() in self.levels.levels

    def level_index(self, s: ElementSet) -> int:
        card = s.cardinality()
        try:
            return self.levels.levels.index(card)
        except ValueError:
            raise NotAVertex(f"cardinality {card} not a level of {self}") from None

    def adjacent(self, a: ElementSet, b: ElementSet) -> bool:
        ca, cb = a.bits.bit_count(), b.bits.bit_count()
        if ca == cb:
            return (a.bits ^ b.bits).bit_count() == 2
        if ca > cb:
            a, b, ca, cb = b, a, cb, ca
        ia = self._index_of(ca)
        ib = self._index_of(cb)
        if ia is None or ib is None or ib != ia + 1:
            return False
        return a.bits & ~b.bits == 0

    def _index_of(self, card: int):
        levels = self.levels.levels
        return levels.index(card) if card in levels else None

    def neighbors(self, s: ElementSet) -> list[ElementSet]:
        i = self.level_index(s)
        levels = self.levels.levels
        out = []
        if 0 < levels[i] < self.n:
            out.extend(same_level_neighbors(s))
        if i + 1 < len(levels):
            out.extend(up_neighbors(s, levels[i + 1]))
        if i > 0:
            out.extend(down_neighbors(s, levels[i - 1]))
        out.sort()
        return out

    def key(self):
        return ("qj", self.n, self.levels.levels)

    def descriptor(self) -> dict:
        return {"kind": "qj", "n": self.n, "levels": list(self.levels)}

    def __repr__(self) -> str:
        return f"QJ({self.n},{{{','.join(map(str, self.levels))}}})"


class GenericGraph:
    """Explicit undirected graph on opaque indices 0..vertex_count-1."""

    __slots__ = ("vertex_count", "adjacency")

    def __init__(self, vertex_count: int, edges):
        adjacency = [set() for _ in range(vertex_count)]
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            adjacency[a].add(b)
            adjacency[b].add(a)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(
            self, "adjacency", tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        )

    def __setattr__(self, name, value):
        raise AttributeError("GenericGraph is immutable")

    def vertices(self) -> Iterator[int]:
        return iter(range(self.vertex_count))

    def has_vertex(self, v: int) -> bool:
        return isinstance(v, int) and 0 <= v < self.vertex_count

    def adjacent(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def key(self):
        return ("generic", self.vertex_count, self.adjacency)

    def descriptor(self) -> dict:
        return {"kind": "generic", "vertex_count": self.vertex_count}


def fig1_counterexample() -> tuple[GenericGraph, tuple[int, int, int, int]]:
    """The modified 3-cube separating Hamilton-connectedness from P2C.

    Vertices are indexed by the value of their 3-bit label.  The graph is
    Q3 plus the chords 000-011 and 100-111; the returned endpoint quad
    (000, 101, 100, 001) admits no paired 2-disjoint path cover.
    """
    edges = [(i, i ^ (1 << d)) for i in range(8) for d in range(3) if i < i ^ (1 << d)]
    edges += [(0b000, 0b011), (0b100, 0b111)]
    return GenericGraph(8, edges), (0b000, 0b101, 0b100, 0b001)


def to_generic(g) -> tuple[GenericGraph, list]:
    """Materialize an implicit graph; returns (graph, index->vertex list)."""
    verts = list(g.vertices())
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for i, v in enumerate(verts):
        for w in g.neighbors(v):
            j = index[w]
            if i < j:
                edges.append((i, j))
    return GenericGraph(len(verts), edges), verts


def _vertex_label(v) -> str:
    if isinstance(v, ElementSet):
        return "{%s}" % ",".join(str(e) for e in v.elements())
    return str(v)


def to_dot(g, highlight=None) -> str:
    """DOT export; `highlight` maps edge attribute strings to vertex paths."""
    lines = ["graph G {"]
    verts = list(g.vertices())
    for v in verts:
        lines.append(f'  "{_vertex_label(v)}";')
    highlighted = {}
    if highlight:
        for attr, path in highlight.items():
            for a, b in zip(path, path[1:]):
                key = frozenset((_vertex_label(a), _vertex_label(b)))
                highlighted[key] = attr
    seen = set()
    for v in verts:
        for w in g.neighbors(v):
            key = frozenset((_vertex_label(v), _vertex_label(w)))
            if key in seen:
                continue
            seen.add(key)
            attr = highlighted.get(key)
            suffix = f" [{attr}]" if attr else ""
            lines.append(f'  "{_vertex_label(v)}" -- "{_vertex_label(w)}"{suffix};')
    lines.append("}")
    return "\n".join(lines)
