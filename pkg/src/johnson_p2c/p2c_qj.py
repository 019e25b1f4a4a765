"""Paired 2-disjoint path covers of stacked Johnson graphs QJ(n,A).

The construction first solves a local cover on the contiguous level range
spanned by the four endpoints (dispatch on how the endpoints are
distributed over one to four levels), then expands it to the whole stack
by splicing Hamilton paths of the level ranges below and above through
boundary-level edges (the EP2C expansion).  An apex level J(n,n) is
absorbed separately: its single vertex is either inserted into a
top-level edge or attached by a pendant cross edge.
"""

from __future__ import annotations

from .covers import EndpointQuad, P2CSolution
from .errors import (
    LemmaPreconditionViolated,
    OutOfTheoremRange,
    SelectionExhausted,
    SpliceEdgeNotFound,
)
from .graphs import QJGraph
from .hamilton import Path, _find_level_edge, _ham_johnson, _ham_qj
from .p2c_johnson import _orient, _solve as _solve_johnson
from .subsets import ElementSet, complement, down_neighbors, k_subsets, up_neighbors


# ---------------------------------------------------------------------------
# Neighbor selection (distinct-neighbor and single-neighbor picks).


def _cross_neighbors(s: ElementSet, card_to: int) -> list[ElementSet]:
    if card_to > s.cardinality():
        return up_neighbors(s, card_to)
    return down_neighbors(s, card_to)


def _check_cards(n, card_from, card_to, *vertices):
    if not (1 <= card_from <= n and 0 <= card_to <= n) or card_from == card_to:
        raise LemmaPreconditionViolated(
            f"bad level cardinalities {card_from} -> {card_to} for n={n}"
        )
    for w in vertices:
        if w.cardinality() != card_from:
            raise LemmaPreconditionViolated(f"{w} is not at level {card_from}")


def pick_one_avoiding(n, card_from, card_to, a, avoid) -> ElementSet:
    """Smallest neighbor of a at the target level outside `avoid`."""
    _check_cards(n, card_from, card_to, a)
    for w in _cross_neighbors(a, card_to):
        if w not in avoid:
            return w
    raise SelectionExhausted(
        f"no neighbor of {a} at cardinality {card_to} avoiding {set(avoid)}"
    )


def pick_two_avoiding(
    n, card_from, card_to, a, b, avoid
) -> tuple[ElementSet, ElementSet]:
    """First pair (a', b') in scan order of distinct neighbors of a and b at
    the target level, both outside `avoid`."""
    _check_cards(n, card_from, card_to, a, b)
    if a == b:
        raise LemmaPreconditionViolated("a and b must be distinct")
    cand_b = [w for w in _cross_neighbors(b, card_to) if w not in avoid]
    for ap in _cross_neighbors(a, card_to):
        if ap in avoid:
            continue
        for bp in cand_b:
            if bp != ap:
                return ap, bp
    raise SelectionExhausted(
        f"no distinct neighbor pair for {a},{b} at cardinality {card_to}"
    )


# ---------------------------------------------------------------------------
# EP2C expansion.


def _locate_level_edge(paths, card, forbidden=()):
    for pi, p in enumerate(paths):
        try:
            return pi, _find_level_edge(p, card, forbidden)
        except SpliceEdgeNotFound:
            continue
    raise SpliceEdgeNotFound(
        f"no within-level edge at cardinality {card} on either path"
    )


def _splice_between(paths, c, d, detour):
    """Insert `detour` (running from a neighbor of c to a neighbor of d)
    between the consecutive vertices c and d, wherever they now sit."""
    for p in paths:
        for i in range(len(p) - 1):
            if p[i] == c and p[i + 1] == d:
                p[i + 1 : i + 1] = detour
                return
            if p[i] == d and p[i + 1] == c:
                p[i + 1 : i + 1] = list(reversed(detour))
                return
    raise SpliceEdgeNotFound(f"edge {c} -- {d} vanished during expansion")


def ep2c_expand(paths, n, A, lo, hi):
    """Expand a local cover of levels A[lo..hi] to all of QJ(n,A)."""
    m = len(A)
    if lo == 0 and hi == m - 1:
        return [list(paths[0]), list(paths[1])]
    paths = [list(paths[0]), list(paths[1])]

    down_edge = up_edge = None
    if lo > 0:
        pi, t = _locate_level_edge(paths, A[lo])
        down_edge = (paths[pi][t], paths[pi][t + 1])
    if hi < m - 1:
        pi, t = _locate_level_edge(paths, A[hi], down_edge or ())
        up_edge = (paths[pi][t], paths[pi][t + 1])

    if down_edge is not None:
        a, b = down_edge
        ap, bp = pick_two_avoiding(n, A[lo], A[lo - 1], a, b, frozenset())
        _splice_between(paths, a, b, _ham_qj(n, A[:lo], ap, bp))
    if up_edge is not None:
        c, d = up_edge
        cp, dp = pick_two_avoiding(n, A[hi], A[hi + 1], c, d, frozenset())
        _splice_between(paths, c, d, _ham_qj(n, A[hi + 1 :], cp, dp))
    return paths


# ---------------------------------------------------------------------------
# Apex absorption (level J(n,n)).


def absorb_apex(g: QJGraph, q: EndpointQuad, debug: bool = False) -> P2CSolution:
    """Cover of QJ(n,A) with n in A, via the cover of QJ(n, A-{n})."""
    n = g.n
    A = g.levels.levels
    if n not in A:
        raise LemmaPreconditionViolated(f"{g} has no apex level")
    sub_levels = tuple(a for a in A if a != n)
    if not sub_levels:
        raise OutOfTheoremRange("QJ(n,{n}) is a single vertex")
    apex = ElementSet(((1 << n) - 1) << 1, n)
    top = sub_levels[-1]

    if apex not in q.vertices():
        p1, p2 = _solve_qj(n, sub_levels, q.u, q.v, q.x, q.y, debug)
        pi, t = _locate_level_edge([p1, p2], top)
        (p1, p2)[pi].insert(t + 1, apex)
        return P2CSolution(Path(tuple(p1)), Path(tuple(p2)))

    pairing = {q.u: q.v, q.v: q.u, q.x: q.y, q.y: q.x}
    partner = pairing[apex]
    others = [w for w in q.vertices() if w not in (apex, partner)]
    cp = next(
        w for w in k_subsets(n, top) if w not in (partner, others[0], others[1])
    )
    p1, p2 = _solve_qj(n, sub_levels, cp, partner, others[0], others[1], debug)
    paths = _orient_quad([[apex] + p1, p2], q)
    return P2CSolution(Path(tuple(paths[0])), Path(tuple(paths[1])))


def _orient_quad(paths, q: EndpointQuad):
    return _orient(paths[0], paths[1], q.u, q.v, q.x, q.y)


# ---------------------------------------------------------------------------
# Top-level entry point.


def p2c_qj(g: QJGraph, q: EndpointQuad, debug: bool = False) -> P2CSolution:
    """Paired 2-disjoint path cover of QJ(n,A), n >= 4, at least 4 vertices."""
    if g.n < 4:
        raise OutOfTheoremRange(f"{g} has n < 4")
    if g.vertex_count < 4:
        raise OutOfTheoremRange(f"{g} has fewer than 4 vertices")
    q.validate(g)
    if g.n in g.levels.levels:
        sol = absorb_apex(g, q, debug)
    else:
        p1, p2 = _solve_qj(g.n, g.levels.levels, q.u, q.v, q.x, q.y, debug)
        sol = P2CSolution(Path(tuple(p1)), Path(tuple(p2)))
    if debug:
        _debug_check(g, q, sol)
    return sol


def _debug_check(g, q, sol):
    from .verify import check_p2c

    report = check_p2c(g, q, sol)
    if not report.valid:
        raise AssertionError(f"invalid cover of {g}: {report.violations}")


def _solve_qj(n, A, u, v, x, y, debug=False):
    """Oriented (u-to-v, x-to-y) cover of QJ(n,A); A excludes n."""
    if len(A) == 1:
        p1, p2 = _solve_johnson(n, A[0], u, v, x, y, debug)
    else:
        card_index = {a: i for i, a in enumerate(A)}
        levels = [card_index[w.cardinality()] for w in (u, v, x, y)]
        lo, hi = min(levels), max(levels)
        local = _local_p2c(n, A, levels, u, v, x, y, debug)
        p1, p2 = ep2c_expand(local, n, A, lo, hi)
        p1, p2 = _orient(p1, p2, u, v, x, y)
    if debug:
        _debug_check(
            QJGraph(n, A),
            EndpointQuad(u, v, x, y),
            P2CSolution(Path(tuple(p1)), Path(tuple(p2))),
        )
    return p1, p2


def _flip_solve(n, A, lo, hi, u, v, x, y, debug):
    """Solve on the complement-flipped level range and map the cover back."""
    flipped = tuple(n - a for a in reversed(A[lo : hi + 1]))
    p1, p2 = _solve_qj(
        n, flipped, complement(u), complement(v), complement(x), complement(y), debug
    )
    return [complement(w) for w in p1], [complement(w) for w in p2]


def _local_p2c(n, A, levels, u, v, x, y, debug):
    """Cover of QJ(n, A[lo..hi]) where lo..hi is the endpoint level range."""
    lo, hi = min(levels), max(levels)
    distinct = sorted(set(levels))
    if len(distinct) == 1:
        return _solve_johnson(n, A[lo], u, v, x, y, debug)
    if len(distinct) == 2:
        return _local_two_levels(n, A, levels, u, v, x, y, debug)
    if len(distinct) == 3:
        return _local_three_levels(n, A, levels, u, v, x, y, debug)
    return _local_four_levels(n, A, levels, u, v, x, y, debug)


def _level_vertices(n, card):
    return k_subsets(n, card)


def _first_vertex(n, card, excluded):
    for w in _level_vertices(n, card):
        if w not in excluded:
            return w
    raise SelectionExhausted(f"level {card} exhausted avoiding {excluded}")


def _local_two_levels(n, A, levels, u, v, x, y, debug):
    i, j = min(levels), max(levels)
    low_count = sum(1 for li in levels if li == i)

    if low_count in (1, 3):
        return _local_trio(n, A, levels, u, v, x, y, debug)
    if levels[0] == levels[1]:
        # Aligned: each pair occupies a single level.  The lower pair rides a
        # Hamilton path of the lower stack, the upper pair one of the top level.
        low_pair, high_pair = ((u, v), (x, y)) if levels[0] == i else ((x, y), (u, v))
        p_low = _ham_qj(n, A[i:j], low_pair[0], low_pair[1])
        p_high = _ham_johnson(n, A[j], high_pair[0], high_pair[1])
        return [p_low, p_high]
    return _local_interleaved(n, A, i, j, u, v, x, y, debug)


def _local_interleaved(n, A, i, j, u, v, x, y, debug):
    """One endpoint of each pair per level; u,x low and v,y high after
    normalization."""
    if u.cardinality() == A[j]:
        u, v = v, u
    if x.cardinality() == A[j]:
        x, y = y, x

    if A[j] < n - 1:
        p1 = _ham_qj(n, A[i:j], u, x)
        t = _find_level_edge(p1, A[j - 1])
        a, b = p1[t], p1[t + 1]
        ap, bp = pick_two_avoiding(n, A[j - 1], A[j], a, b, {v, y})
        s1, s2 = _solve_johnson(n, A[j], ap, v, bp, y, debug)
        return [p1[: t + 1] + s1, list(reversed(p1[t + 1 :])) + s2]

    p2 = _ham_johnson(n, A[j], v, y)
    c, d = p2[0], p2[1]
    cp, dp = pick_two_avoiding(n, A[j], A[j - 1], c, d, {u, x})
    s1, s2 = _solve_qj(n, A[i:j], cp, u, dp, x, debug)
    return [
        list(reversed(s1)) + [c],
        list(reversed(s2)) + p2[1:],
    ]


def _local_trio(n, A, levels, u, v, x, y, debug):
    """Three endpoints on one level, the fourth on the other."""
    endpoints = (u, v, x, y)
    counts = {li: sum(1 for lw in levels if lw == li) for li in set(levels)}
    lone_level = next(li for li, c in counts.items() if c == 1)
    trio_level = next(li for li, c in counts.items() if c == 3)
    lone = endpoints[levels.index(lone_level)]
    pairing = {u: v, v: u, x: y, y: x}
    partner = pairing[lone]
    other_pair = [w for w in endpoints if w not in (lone, partner)]

    a = _first_vertex(n, A[trio_level], set(endpoints) - {lone})
    if trio_level < lone_level:
        ap = pick_one_avoiding(n, A[trio_level], A[trio_level + 1], a, {lone})
        bridge = _ham_qj(n, A[trio_level + 1 : lone_level + 1], ap, lone)
    else:
        ap = pick_one_avoiding(n, A[trio_level], A[trio_level - 1], a, {lone})
        bridge = _ham_qj(n, A[lone_level:trio_level], ap, lone)
    s1, s2 = _solve_johnson(
        n, A[trio_level], other_pair[0], other_pair[1], partner, a, debug
    )
    return [s1, s2 + bridge]


def _local_three_levels(n, A, levels, u, v, x, y, debug):
    endpoints = (u, v, x, y)
    distinct = sorted(set(levels))
    i, j, l = distinct
    counts = {li: sum(1 for lw in levels if lw == li) for li in distinct}
    if counts[l] == 2:
        # Mirror through complementation so the doubled level is lowest.
        lo, hi = i, l
        p1, p2 = _flip_solve(n, A, lo, hi, u, v, x, y, debug)
        return [p1, p2]
    pairing = {u: v, v: u, x: y, y: x}
    if counts[i] == 2:
        doubled = [w for w, lw in zip(endpoints, levels) if lw == i]
        if pairing[doubled[0]] == doubled[1]:
            # Doubled level holds a full pair: two independent Hamilton paths.
            other = [w for w in endpoints if w not in doubled]
            if other[0].cardinality() > other[1].cardinality():
                other = [other[1], other[0]]
            p_low = _ham_johnson(n, A[i], doubled[0], doubled[1])
            p_high = _ham_qj(n, A[i + 1 : l + 1], other[0], other[1])
            return [p_low, p_high]
        # Doubled level holds one endpoint of each pair.
        e_mid = endpoints[levels.index(j)]
        e_top = endpoints[levels.index(l)]
        uu = pairing[e_mid]
        xx = pairing[e_top]
        a = _first_vertex(n, A[j], {e_mid})
        ap = pick_one_avoiding(n, A[j], A[j + 1], a, {e_top})
        s1, s2 = _solve_qj(n, A[i : j + 1], uu, e_mid, xx, a, debug)
        bridge = _ham_qj(n, A[j + 1 : l + 1], ap, e_top)
        return [s1, s2 + bridge]

    # Doubled level is the middle one.
    doubled = [w for w, lw in zip(endpoints, levels) if lw == j]
    e_low = endpoints[levels.index(i)]
    e_top = endpoints[levels.index(l)]
    if pairing[doubled[0]] == doubled[1]:
        # Middle pair covered inside its level; the outer pair threads both
        # Hamilton stacks through two auxiliary middle vertices.
        a = _first_vertex(n, A[j], set(doubled))
        b = _first_vertex(n, A[j], set(doubled) | {a})
        ap = pick_one_avoiding(n, A[j], A[j - 1], a, {e_low})
        bp = pick_one_avoiding(n, A[j], A[j + 1], b, {e_top})
        s1, s2 = _solve_johnson(n, A[j], doubled[0], doubled[1], a, b, debug)
        h_low = _ham_qj(n, A[i:j], e_low, ap)
        h_high = _ham_qj(n, A[j + 1 : l + 1], bp, e_top)
        return [h_low + s2 + h_high, s1]
    # Middle holds one endpoint of each pair.
    f_low = pairing[e_low]  # middle endpoint paired with the bottom one
    f_top = pairing[e_top]
    a = _first_vertex(n, A[j], set(doubled))
    b = _first_vertex(n, A[j], set(doubled) | {a})
    ap = pick_one_avoiding(n, A[j], A[j - 1], a, {e_low})
    bp = pick_one_avoiding(n, A[j], A[j + 1], b, {e_top})
    s1, s2 = _solve_johnson(n, A[j], f_low, a, f_top, b, debug)
    h_low = _ham_qj(n, A[i:j], ap, e_low)
    h_high = _ham_qj(n, A[j + 1 : l + 1], bp, e_top)
    return [s1 + h_low, s2 + h_high]


def _local_four_levels(n, A, levels, u, v, x, y, debug):
    endpoints = (u, v, x, y)
    order = sorted(range(4), key=lambda idx: levels[idx])
    e1, e2, e3, e4 = (endpoints[idx] for idx in order)
    i, j, k, l = (levels[idx] for idx in order)
    pairing = {u: v, v: u, x: y, y: x}

    if pairing[e1] == e2:
        # Two aligned Hamilton stacks.
        p_low = _ham_qj(n, A[i : j + 1], e1, e2)
        p_high = _ham_qj(n, A[j + 1 : l + 1], e3, e4)
        return [p_low, p_high]

    a = _first_vertex(n, A[j], {e2})
    b = _first_vertex(n, A[k], {e3})
    ap = pick_one_avoiding(n, A[j], A[j - 1], a, {e1})
    bp = pick_one_avoiding(n, A[k], A[k + 1], b, {e4})
    h_low = _ham_qj(n, A[i:j], e1, ap)
    h_high = _ham_qj(n, A[k + 1 : l + 1], e4, bp)

    if pairing[e1] == e3:
        # Pairs (e1,e3) and (e2,e4): middle cover joins a to e3 and b to e2.
        s1, s2 = _solve_qj(n, A[j : k + 1], a, e3, b, e2, debug)
        path_a = h_low + s1
        path_b = list(reversed(s2)) + list(reversed(h_high))
        return [path_a, path_b]

    # Pairs (e1,e4) and (e2,e3): middle cover joins a to b and e2 to e3.
    s1, s2 = _solve_qj(n, A[j : k + 1], a, b, e2, e3, debug)
    path_a = h_low + s1 + list(reversed(h_high))
    return [path_a, s2]
