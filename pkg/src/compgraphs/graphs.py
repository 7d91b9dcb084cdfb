"""Simple graphs, loopless digraphs and the competition-graph map.

Vertices are the integers ``0..n-1``.  Both ``Graph`` and ``Digraph`` are
immutable; adjacency is cached as integer bitmasks, which is what every
search in this package runs on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import SizeGuardError

MAX_CLIQUE_VERTICES = 64

EDGE_COUNT = "edge-count"
STAR_FREE = "K1,j+1-free"
MAX_DEGREE = "max-degree"


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _normalize_pairs(n: int, pairs: Iterable[tuple[int, int]], directed: bool) -> frozenset:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for pair in pairs:
        u, v = (int(x) for x in pair)
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"pair ({u}, {v}) out of range for n={n}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            kind = "arc" if directed else "edge"
            raise ValueError(f"duplicate {kind} ({u}, {v})")
        seen.add(key)
    return frozenset(seen)


@dataclass(frozen=True)
class DegreeBounds:
    """Indegree bound ``i`` and outdegree bound ``j``."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < 1:
            raise ValueError(f"degree bounds must be positive, got ({self.i}, {self.j})")

    def __iter__(self):
        return iter((self.i, self.j))

    def __str__(self) -> str:
        return f"<{self.i},{self.j}>"


def as_bounds(b) -> DegreeBounds:
    return b if isinstance(b, DegreeBounds) else DegreeBounds(*b)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``edges`` holds pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", _normalize_pairs(self.n, self.edges, directed=False))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(bits(comp)))
        return comps

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled to ``0..len(vertices)-1`` in the given order."""
        vs = list(vertices)
        index = {v: t for t, v in enumerate(vs)}
        return Graph(len(vs), [(index[u], index[v]) for u, v in self.edges if u in index and v in index])


@dataclass(frozen=True)
class Digraph:
    """Loopless digraph without parallel arcs.  Digons are allowed."""

    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", _normalize_pairs(self.n, self.arcs, directed=True))

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, v in self.arcs:
            out[u] |= 1 << v
        return tuple(out)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        inn = [0] * self.n
        for u, v in self.arcs:
            inn[v] |= 1 << u
        return tuple(inn)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)

    def out_neighbors(self, v: int) -> list[int]:
        return list(bits(self.out_masks[v]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(bits(self.in_masks[v]))

    def outdegree(self, v: int) -> int:
        return self.out_masks[v].bit_count()

    def indegree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def subdigraph(self, arcs: Iterable[tuple[int, int]]) -> Digraph:
        arcs = list(arcs)
        missing = [a for a in arcs if a not in self.arcs]
        if missing:
            raise ValueError(f"arcs not in host digraph: {missing}")
        return Digraph(self.n, arcs)


def competition_graph(d: Digraph) -> Graph:
    """Two vertices are adjacent iff they share an out-neighbour in ``d``."""
    edges = set()
    for prey in range(d.n):
        for u, v in combinations(bits(d.in_masks[prey]), 2):
            edges.add((u, v))
    return Graph(d.n, edges)


def is_ij_digraph(d: Digraph, b) -> bool:
    b = as_bounds(b)
    return all(d.indegree(v) <= b.i and d.outdegree(v) <= b.j for v in range(d.n))


def _has_independent_set(g: Graph, candidates: int, size: int) -> bool:
    if size <= 0:
        return True
    if candidates.bit_count() < size:
        return False
    v = (candidates & -candidates).bit_length() - 1
    rest = candidates & ~(1 << v)
    # take v, or skip it
    if _has_independent_set(g, rest & ~g.adj[v], size - 1):
        return True
    return _has_independent_set(g, rest, size)


def is_k1t_free(g: Graph, t: int) -> bool:
    """True iff ``g`` has no induced star ``K_{1,t}``.

    An induced ``K_{1,t}`` centred at ``v`` is exactly an independent set of
    size ``t`` inside ``N(v)``.
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    return not any(_has_independent_set(g, g.adj[v], t) for v in range(g.n))


def necessary_conditions(g: Graph, b) -> list[str]:
    """Names of the failed necessary conditions for ``<i,j>`` membership.

    The three checks are the edge-count bound ``|E| <= i(i-1)/2 |V|``,
    freeness of induced ``K_{1,j+1}`` and ``Delta <= j(i-1)``.  An empty
    list does not imply membership.
    """
    b = as_bounds(b)
    failed = []
    if 2 * g.m > (b.i - 1) * b.i * g.n:
        failed.append(EDGE_COUNT)
    if not is_k1t_free(g, b.j + 1):
        failed.append(STAR_FREE)
    if g.max_degree() > b.j * (b.i - 1):
        failed.append(MAX_DEGREE)
    return failed


def _greedy_color_order(g: Graph, cand: int) -> tuple[list[int], list[int]]:
    """Sequential colouring of ``cand``; returns vertices and their colour bounds."""
    order, bounds = [], []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~(1 << v) & ~g.adj[v]
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique(g: Graph) -> list[int]:
    """A maximum clique, by colour-bounded branch and bound."""
    if g.n > MAX_CLIQUE_VERTICES:
        raise SizeGuardError("max-clique", f"exact clique search refuses n={g.n} > {MAX_CLIQUE_VERTICES}")
    best: list[int] = []

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        order, bounds = _greedy_color_order(g, cand)
        for idx in range(len(order) - 1, -1, -1):
            if len(current) + bounds[idx] <= len(best):
                return
            v = order[idx]
            current.append(v)
            new_cand = cand & g.adj[v]
            if new_cand:
                expand(current, new_cand)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    if g.n:
        expand([], (1 << g.n) - 1)
    return sorted(best)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def graph_stats(g: Graph) -> tuple[int, int]:
    """``(max_degree, clique_number)``, both exact."""
    return g.max_degree(), clique_number(g)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(t, (t + 1) % n) for t in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(t, t + 1) for t in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph(leaves + 1, [(0, t) for t in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, edges)


def complete_graph_digraph(n: int) -> Digraph:
    """The ``<n-1,2>`` digraph whose competition graph is ``K_n`` (n >= 3).

    With ``v_1..v_n`` mapped to ``0..n-1``: every ``v_t`` (t < n) points to
    ``v_n``, every ``v_t`` (t >= 2) points to ``v_1``, and ``v_1`` and ``v_n``
    both point to ``v_2``.
    """
    if n < 3:
        raise ValueError(f"construction needs n >= 3, got {n}")
    last = n - 1
    arcs = {(t, last) for t in range(last)}
    arcs |= {(t, 0) for t in range(1, n)}
    arcs |= {(0, 1), (last, 1)}
    return Digraph(n, arcs)
