"""Edge clique covers, distinct representatives and witness digraphs.

A cover ``C_1..C_p`` of ``G`` lies in ``C(G, i, j)`` when every clique has at
most ``i`` vertices, every vertex sits in at most ``j`` cliques and
``p <= |V(G)|``.  If the complements ``V(G) - C_t`` also have distinct
representatives ``v_t``, the arcs ``(v, v_t)`` for ``v`` in ``C_t`` give a
digraph whose competition graph is ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import SizeGuardError
from .graphs import Digraph, Graph, as_bounds, bits, complete_graph_digraph, mask_of

MAX_SEARCH_VERTICES = 20
MAX_CANDIDATE_CLIQUES = 2000


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "cliques", tuple(frozenset(c) for c in self.cliques))

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    @property
    def weight(self) -> int:
        return sum(len(c) for c in self.cliques)

    def as_lists(self) -> list[list[int]]:
        return [sorted(c) for c in self.cliques]


@dataclass(frozen=True)
class SdrAssignment:
    """``representatives[t]`` is a vertex outside clique ``t``; all distinct."""

    representatives: tuple = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "representatives", tuple(self.representatives))

    def __len__(self) -> int:
        return len(self.representatives)


@dataclass(frozen=True)
class HallViolation:
    """Cover indices whose complements jointly contain fewer vertices than indices."""

    indices: tuple
    union: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(self.indices))
        object.__setattr__(self, "union", frozenset(self.union))


@dataclass(frozen=True)
class RepairResult:
    cover: CliqueCover
    sdr: SdrAssignment
    # cover weight before the loop and after each replacement
    weights: tuple = ()
    # True when the loop ended on a complete graph covered by V(G) and the
    # K_n construction supplied the cover instead
    used_complete_construction: bool = False
    steps: tuple = field(default=(), compare=False)


def _as_cover(c) -> CliqueCover:
    return c if isinstance(c, CliqueCover) else CliqueCover(c)


def cover_problems(g: Graph, c, b) -> list[str]:
    """Human-readable reasons ``c`` is not a member of ``C(G, i, j)``."""
    c, b = _as_cover(c), as_bounds(b)
    problems = []
    usage = [0] * g.n
    covered = set()
    for t, clique in enumerate(c.cliques):
        if any(not 0 <= v < g.n for v in clique):
            problems.append(f"clique {t} has a vertex outside 0..{g.n - 1}")
            continue
        if not g.is_clique(clique):
            problems.append(f"clique {t} is not a clique of the graph")
        if len(clique) > b.i:
            problems.append(f"clique {t} has {len(clique)} > i={b.i} vertices")
        for v in clique:
            usage[v] += 1
        covered.update(combinations(sorted(clique), 2))
    over = [v for v in range(g.n) if usage[v] > b.j]
    if over:
        problems.append(f"vertices {over} lie in more than j={b.j} cliques")
    if len(c) > g.n:
        problems.append(f"p={len(c)} exceeds |V|={g.n}")
    missing = sorted(g.edges - covered)
    if missing:
        problems.append(f"edges {missing[:5]} are not covered")
    return problems


def validate_cover(g: Graph, c, b) -> bool:
    return not cover_problems(g, c, b)


def find_sdr(g: Graph, c) -> SdrAssignment | HallViolation:
    """Distinct representatives for the complements of the cover cliques.

    Runs augmenting-path matching between cover indices and vertices.  On
    failure the indices reachable by alternating paths from the unmatched
    indices form a family whose complements cover too few vertices.
    """
    c = _as_cover(c)
    p = len(c)
    full = (1 << g.n) - 1
    outside = [full & ~mask_of(clique) for clique in c.cliques]
    owner = [-1] * g.n  # vertex -> index
    match = [-1] * p  # index -> vertex

    def augment(t: int, visited: list[bool]) -> bool:
        for v in bits(outside[t]):
            if visited[v]:
                continue
            visited[v] = True
            if owner[v] < 0 or augment(owner[v], visited):
                owner[v] = t
                match[t] = v
                return True
        return False

    for t in range(p):
        augment(t, [False] * g.n)

    free = [t for t in range(p) if match[t] < 0]
    if not free:
        return SdrAssignment(match)

    reached_idx = set(free)
    reached_vtx = 0
    stack = list(free)
    while stack:
        t = stack.pop()
        new = outside[t] & ~reached_vtx
        reached_vtx |= new
        for v in bits(new):
            nxt = owner[v]
            if nxt >= 0 and nxt not in reached_idx:
                reached_idx.add(nxt)
                stack.append(nxt)
    return HallViolation(sorted(reached_idx), bits(reached_vtx))


def subsets_lemma_index(sets: Sequence[Iterable], ground: Iterable | None = None) -> int:
    """Index ``t`` of a set contained in the union of the others.

    Needs more sets than ground elements; ``ground`` defaults to the union
    of ``sets``.  Ties go to the smallest index.
    """
    sets = [frozenset(s) for s in sets]
    ground = frozenset().union(*sets) if ground is None else frozenset(ground)
    if any(not s <= ground for s in sets):
        raise ValueError("every set must lie inside the ground set")
    if len(sets) <= len(ground):
        raise ValueError(f"need more sets than ground elements, got {len(sets)} sets over {len(ground)}")
    prefix = [frozenset()]
    for s in sets:
        prefix.append(prefix[-1] | s)
    suffix = frozenset()
    found = None
    for t in range(len(sets) - 1, -1, -1):
        if sets[t] <= prefix[t] | suffix:
            found = t
        suffix |= sets[t]
    if found is None:  # pragma: no cover - excluded by the pigeonhole argument
        raise AssertionError("no contained set despite |sets| > |ground|")
    return found


def witness_digraph(g: Graph, c, s: SdrAssignment) -> Digraph:
    """Arcs ``(v, v_t)`` for every ``v`` in ``C_t``."""
    c = _as_cover(c)
    reps = s.representatives
    if len(reps) != len(c):
        raise ValueError(f"{len(reps)} representatives for {len(c)} cliques")
    if len(set(reps)) != len(reps):
        raise ValueError("representatives are not distinct")
    arcs = []
    for clique, rep in zip(c.cliques, reps):
        if rep in clique:
            raise ValueError(f"representative {rep} lies inside its clique")
        arcs.extend((v, rep) for v in clique)
    return Digraph(g.n, arcs)


def _complete_cover(n: int) -> tuple[CliqueCover, SdrAssignment]:
    d = complete_graph_digraph(n)
    prey = [v for v in range(n) if d.in_masks[v]]
    return CliqueCover([d.in_neighbors(v) for v in prey]), SdrAssignment(prey)


def repair_cover(g: Graph, c, b) -> RepairResult:
    """Shrink a cover in ``C(G, i, j)`` until its complements have an SDR.

    Each round takes a Hall violation ``t_1..t_s`` with union ``U``, forms
    ``Q_a = C_{t_a} & U``, picks ``r`` with ``Q_r`` inside the other ``Q``'s
    and replaces ``C_{t_r}`` by ``Q_r`` (dropped when it spans no edge).
    The cover stays in ``C(G, i, j)`` and its weight drops every round.
    """
    c, b = _as_cover(c), as_bounds(b)
    problems = cover_problems(g, c, b)
    if problems:
        raise ValueError("cover is not in C(G,i,j): " + "; ".join(problems))
    if g.n == 2 and g.m == 1:
        raise ValueError("K_2 is not the competition graph of any loopless digraph")
    if b.j == 1 and g.n >= 2 and g.is_complete():
        raise ValueError("a nontrivial complete graph needs j >= 2")
    if g.m == 0 or len(c) < 2:
        raise ValueError("repair needs a graph with an edge and a cover with p >= 2")

    cliques = list(c.cliques)
    weights = [c.weight]
    steps = []
    while True:
        result = find_sdr(g, cliques)
        if isinstance(result, SdrAssignment):
            return RepairResult(CliqueCover(cliques), result, tuple(weights), False, tuple(steps))
        union = result.union
        qs = [cliques[t] & union for t in result.indices]
        r = subsets_lemma_index(qs, union)
        target = result.indices[r]
        replacement = qs[r]
        new = list(cliques)
        if len(replacement) >= 2:
            new[target] = replacement
        else:
            del new[target]
        if not union and len(result.indices) == 1 and not validate_cover(g, new, b):
            # V(G) itself is one of the cliques, so G is complete and the
            # dedicated complete-graph digraph takes over
            cover, sdr = _complete_cover(g.n)
            if not validate_cover(g, cover, b):  # pragma: no cover - i >= n here
                raise RuntimeError("complete-graph cover violates the bounds")
            steps.append(("complete-construction", target))
            return RepairResult(cover, sdr, tuple(weights), True, tuple(steps))
        new_weight = sum(len(q) for q in new)
        if new_weight >= weights[-1] or not validate_cover(g, new, b):
            raise RuntimeError(f"repair step on clique {target} broke the loop invariant")
        steps.append((tuple(result.indices), tuple(sorted(union)), target))
        cliques = new
        weights.append(new_weight)


def candidate_cliques(g: Graph, max_size: int) -> list[tuple[int, ...]]:
    """All cliques with 2..max_size vertices, largest first, then lexicographic."""
    found: list[tuple[int, ...]] = []

    def grow(clique: list[int], cand: int) -> None:
        if len(clique) >= 2:
            found.append(tuple(clique))
            if len(found) > MAX_CANDIDATE_CLIQUES:
                raise SizeGuardError(
                    "search-cover-candidates",
                    f"more than {MAX_CANDIDATE_CLIQUES} candidate cliques; instance too large",
                )
        if len(clique) == max_size:
            return
        for v in bits(cand):
            clique.append(v)
            # only extend with larger vertices so each clique is produced once
            grow(clique, cand & g.adj[v] & ~((1 << (v + 1)) - 1))
            clique.pop()

    grow([], (1 << g.n) - 1)
    found.sort(key=lambda k: (-len(k), k))
    return found


def search_cover(g: Graph, b) -> CliqueCover | None:
    """Exhaustive search for a member of ``C(G, i, j)``; ``None`` proves none exists.

    Always branches on the lexicographically least uncovered edge, trying
    the cliques through it in canonical order, so the answer is
    deterministic.
    """
    b = as_bounds(b)
    if g.n > MAX_SEARCH_VERTICES:
        raise SizeGuardError(
            "search-cover-vertices", f"search refuses n={g.n} > {MAX_SEARCH_VERTICES}; instance too large"
        )
    if g.m == 0:
        return CliqueCover(())
    if b.i < 2:
        return None
    cands = candidate_cliques(g, b.i)
    cand_masks = [mask_of(k) for k in cands]
    through: dict[tuple[int, int], list[int]] = {e: [] for e in g.edges}
    for idx, k in enumerate(cands):
        for e in combinations(k, 2):
            through[e].append(idx)

    need = list(g.adj)
    usage = [0] * g.n
    chosen: list[int] = []
    failed: set = set()
    room = b.i - 1

    def dfs() -> bool:
        u = next((x for x in range(g.n) if need[x]), -1)
        if u < 0:
            return True
        if len(chosen) >= g.n:
            return False
        for x in range(u, g.n):
            if need[x] and -(-need[x].bit_count() // room) > b.j - usage[x]:
                return False
        key = (tuple(need), tuple(usage), len(chosen))
        if key in failed:
            return False
        v = (need[u] & -need[u]).bit_length() - 1
        for idx in through[(u, v)]:
            k = cands[idx]
            if any(usage[x] >= b.j for x in k):
                continue
            km = cand_masks[idx]
            saved = [need[x] for x in k]
            for x in k:
                need[x] &= ~km
                usage[x] += 1
            chosen.append(idx)
            if dfs():
                return True
            chosen.pop()
            for x, old in zip(k, saved):
                need[x] = old
                usage[x] -= 1
        failed.add(key)
        return False

    if not dfs():
        return None
    return CliqueCover([cands[idx] for idx in chosen])
