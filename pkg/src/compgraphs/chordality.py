"""Chordality of competition graphs through forbidden subdigraphs.

Subdigraph always means a vertex subset together with a subset of the arcs
among them; nothing here is induced.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import SizeGuardError
from .graphs import Digraph, Graph, as_bounds, bits, competition_graph, is_ij_digraph

GOOD_FALLBACK_VERTICES = 10

# The five digraphs whose presence is equivalent to a triangle in the
# competition graph.  Vertex numbering follows the drawings left to right,
# bottom row first.
TRIANGLE_PATTERNS: dict[str, Digraph] = {
    # three predators, pairwise sharing three distinct prey
    "a": Digraph(6, [(0, 3), (0, 5), (1, 3), (1, 4), (2, 4), (2, 5)]),
    # three predators, one shared prey
    "b": Digraph(4, [(0, 3), (1, 3), (2, 3)]),
    # the middle predator is itself the prey shared by the outer two
    "c": Digraph(5, [(0, 3), (0, 1), (1, 3), (1, 4), (2, 1), (2, 4)]),
    # three digons
    "d": Digraph(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]),
    # one digon, both ends feeding one vertex and fed by another
    "e": Digraph(4, [(0, 3), (3, 0), (3, 1), (0, 1), (2, 3), (2, 0)]),
}

P22 = Digraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    m = len(cycle)
    best = None
    for seq in (cycle, cycle[::-1]):
        for s in range(m):
            rot = tuple(seq[s:] + seq[:s])
            if best is None or rot < best:
                best = rot
    return best


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """A perfect elimination ordering via maximum cardinality search, or None."""
    weight = [0] * g.n
    numbered = 0
    visit = []
    for _ in range(g.n):
        v = max((x for x in range(g.n) if not numbered >> x & 1), key=lambda x: (weight[x], -x))
        visit.append(v)
        numbered |= 1 << v
        for x in bits(g.adj[v] & ~numbered):
            weight[x] += 1
    position = {v: t for t, v in enumerate(visit)}
    for v in visit:
        earlier = [x for x in bits(g.adj[v]) if position[x] < position[v]]
        if not g.is_clique(earlier):
            return None
    return visit[::-1]


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def find_hole(g: Graph) -> tuple[int, ...] | None:
    """An induced cycle of length >= 4, canonically rotated, or None.

    For every vertex ``v`` and nonadjacent neighbours ``x < y``, a shortest
    ``x``-``y`` path avoiding the rest of ``N[v]`` closes a hole through
    ``v``; every hole arises this way.
    """
    for v in range(g.n):
        nbrs = g.neighbors(v)
        for x, y in combinations(nbrs, 2):
            if g.has_edge(x, y):
                continue
            blocked = g.adj[v] | (1 << v)
            allowed = ~blocked | (1 << x) | (1 << y)
            path = _shortest_path(g, x, y, allowed)
            if path is not None:
                return _canonical_cycle([v] + path)
    return None


def _shortest_path(g: Graph, src: int, dst: int, allowed: int) -> list[int] | None:
    parent = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = []
            while u is not None:
                path.append(u)
                u = parent[u]
            return path[::-1]
        for w in bits(g.adj[u] & allowed):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def find_subdigraph(host: Digraph, pattern: Digraph) -> dict[int, int] | None:
    """Injective map of pattern vertices into ``host`` carrying arcs to arcs."""
    k = pattern.n
    if k > host.n or len(pattern.arcs) > len(host.arcs):
        return None
    # place vertices adjacent to already placed ones first
    order = []
    placed = set()
    while len(order) < k:
        rest = [x for x in range(k) if x not in placed]
        x = max(
            rest,
            key=lambda x: (
                sum(1 for y in placed if pattern.has_arc(x, y) or pattern.has_arc(y, x)),
                pattern.outdegree(x) + pattern.indegree(x),
                -x,
            ),
        )
        order.append(x)
        placed.add(x)
    need_out = [pattern.outdegree(x) for x in range(k)]
    need_in = [pattern.indegree(x) for x in range(k)]
    mapping: dict[int, int] = {}
    used = 0

    def place(pos: int) -> bool:
        nonlocal used
        if pos == k:
            return True
        x = order[pos]
        for h in range(host.n):
            if used >> h & 1:
                continue
            if host.outdegree(h) < need_out[x] or host.indegree(h) < need_in[x]:
                continue
            ok = True
            for y, hy in mapping.items():
                if pattern.has_arc(x, y) and not host.has_arc(h, hy):
                    ok = False
                    break
                if pattern.has_arc(y, x) and not host.has_arc(hy, h):
                    ok = False
                    break
            if not ok:
                continue
            mapping[x] = h
            used |= 1 << h
            if place(pos + 1):
                return True
            del mapping[x]
            used &= ~(1 << h)
        return False

    return dict(mapping) if place(0) else None


def triangle_pattern(d: Digraph) -> tuple[str, dict[int, int]] | None:
    """The first triangle pattern found in ``d`` with its embedding."""
    for name, pattern in TRIANGLE_PATTERNS.items():
        emb = find_subdigraph(d, pattern)
        if emb is not None:
            return name, emb
    return None


def induces_triangle(d: Digraph) -> bool:
    return triangle_pattern(d) is not None


def is_irredundant(d: Digraph) -> bool:
    """No two vertices share two distinct out-neighbours."""
    out = d.out_masks
    return not any((out[u] & out[v]).bit_count() >= 2 for u, v in combinations(range(d.n), 2))


def is_bar22(d: Digraph) -> bool:
    """Every in- and outdegree is 0 or 2."""
    return all(d.indegree(v) in (0, 2) and d.outdegree(v) in (0, 2) for v in range(d.n))


@dataclass(frozen=True)
class GoodSubdigraphReport:
    found: bool
    vertices: tuple = ()
    arcs: tuple = ()
    method: str = ""

    def as_dict(self) -> dict:
        return {"found": self.found, "vertices": list(self.vertices), "arcs": [list(a) for a in self.arcs]}


def good_subdigraph_problems(host: Digraph, arcs) -> list[str]:
    """Which defining conditions of a good subdigraph ``arcs`` fails in ``host``."""
    arcs = list(arcs)
    problems = []
    if any(a not in host.arcs for a in arcs):
        return ["not a subdigraph of the host"]
    sub = Digraph(host.n, arcs)
    if not arcs:
        problems.append("has no arc")
    if not is_bar22(sub):
        problems.append("degrees are not all 0 or 2")
    if not is_irredundant(sub):
        problems.append("contains P(2,2)")
    if induces_triangle(sub):
        problems.append("induces a triangle")
    return problems


def _report(host: Digraph, arcs, method: str) -> GoodSubdigraphReport:
    arcs = tuple(sorted(arcs))
    problems = good_subdigraph_problems(host, arcs)
    if problems:
        raise RuntimeError(f"{method} search produced a non-good subdigraph: {problems}")
    vertices = tuple(sorted({v for a in arcs for v in a}))
    return GoodSubdigraphReport(True, vertices, arcs, method)


def _hole_skeleton(d: Digraph, hole: tuple[int, ...]) -> list[tuple[int, int]]:
    arcs = []
    m = len(hole)
    for t in range(m):
        a, b = hole[t], hole[(t + 1) % m]
        common = d.out_masks[a] & d.out_masks[b]
        u = (common & -common).bit_length() - 1
        arcs += [(a, u), (b, u)]
    return arcs


def _exhaustive_good(d: Digraph) -> list[tuple[int, int]] | None:
    sources = [v for v in range(d.n) if d.outdegree(v) >= 2]
    options = {v: list(combinations(d.out_neighbors(v), 2)) for v in sources}
    # vertex -> index in ``sources`` after which no more arcs can enter it
    last_feed = {}
    for pos, v in enumerate(sources):
        for w in d.out_neighbors(v):
            last_feed[w] = pos
    indeg = [0] * d.n
    preds: list[list[int]] = [[] for _ in range(d.n)]
    chosen: dict[int, tuple[int, int]] = {}
    pairs_used: set = set()
    closing: dict[int, list[int]] = {}
    for w, pos in last_feed.items():
        closing.setdefault(pos, []).append(w)

    def makes_triangle(v: int, pair: tuple[int, int]) -> bool:
        # new competition edges join v to the other in-neighbours of x and y
        new_nbrs = set()
        for x in pair:
            new_nbrs.update(preds[x])
        new_nbrs.discard(v)
        for a, b in combinations(sorted(new_nbrs), 2):
            if any(a in preds[w] and b in preds[w] for w in range(d.n)):
                return True
        return False

    def arcs_now() -> list[tuple[int, int]]:
        return [(v, w) for v, pair in chosen.items() for w in pair]

    def step(pos: int) -> list[tuple[int, int]] | None:
        if pos == len(sources):
            return arcs_now() if chosen else None
        v = sources[pos]
        for pair in [None] + options[v]:
            if pair is not None:
                if pair in pairs_used or any(indeg[w] >= 2 for w in pair):
                    continue
                if makes_triangle(v, pair):
                    continue
                chosen[v] = pair
                pairs_used.add(pair)
                for w in pair:
                    indeg[w] += 1
                    preds[w].append(v)
            if all(indeg[w] != 1 for w in closing.get(pos, ())):
                found = step(pos + 1)
                if found is not None:
                    return found
            if pair is not None:
                del chosen[v]
                pairs_used.discard(pair)
                for w in pair:
                    indeg[w] -= 1
                    preds[w].pop()
        return None

    return step(0)


def find_good_subdigraph(
    d: Digraph, max_vertices: int = GOOD_FALLBACK_VERTICES, method: str = "auto"
) -> GoodSubdigraphReport:
    """Look for a ``<2bar,2bar>`` subdigraph that is irredundant, triangle-free and nonempty.

    ``method="auto"`` first builds the skeleton of a hole of the competition
    graph, if one exists, then falls back to exhaustive search when
    ``d`` has at most ``max_vertices`` vertices.  ``method="exhaustive"``
    skips the hole phase.  Every positive report is re-checked against the
    definition.
    """
    if method not in ("auto", "exhaustive"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        hole = find_hole(competition_graph(d))
        if hole is not None:
            return _report(d, _hole_skeleton(d, hole), "hole")
    if d.n > max_vertices:
        raise SizeGuardError(
            "good-subdigraph-fallback",
            f"exhaustive good-subdigraph search refuses n={d.n} > {max_vertices}",
        )
    arcs = _exhaustive_good(d)
    if arcs is None:
        return GoodSubdigraphReport(False, method="exhaustive")
    return _report(d, arcs, "exhaustive")


def chordal_iff_no_good(d: Digraph, i: int) -> tuple[bool, GoodSubdigraphReport]:
    """Both sides of the chordality criterion for outdegree bound 2."""
    if not is_ij_digraph(d, as_bounds((i, 2))):
        raise ValueError(f"digraph is not an <{i},2> digraph")
    chordal = is_chordal(competition_graph(d))
    report = find_good_subdigraph(d)
    if chordal == report.found:
        raise RuntimeError(f"chordal={chordal} but good subdigraph found={report.found}")
    return chordal, report


def interval_22(d: Digraph) -> bool:
    """Interval test for competition graphs of ``<2,2>`` digraphs.

    Such a graph has maximum degree 2, so it is interval exactly when no
    component is a cycle of length at least 4.  The answer is cross-checked
    against chordality and, within the exhaustive limit, against the
    good-subdigraph search.
    """
    if not is_ij_digraph(d, (2, 2)):
        raise ValueError("digraph is not a <2,2> digraph")
    g = competition_graph(d)
    interval = True
    for comp in g.components():
        if len(comp) >= 4 and all(g.degree(v) == 2 for v in comp):
            interval = False
            break
    if interval != is_chordal(g):
        raise RuntimeError("interval and chordal disagree on a max-degree-2 graph")
    if d.n <= GOOD_FALLBACK_VERTICES or not interval:
        if find_good_subdigraph(d).found == interval:
            raise RuntimeError("interval test disagrees with the good-subdigraph search")
    return interval
