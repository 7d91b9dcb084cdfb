"""Deciding membership in the family of ``<i,j>`` competition graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .cover import CliqueCover, repair_cover, search_cover, witness_digraph
from .graphs import (
    Digraph,
    Graph,
    as_bounds,
    competition_graph,
    complete_graph_digraph,
    is_ij_digraph,
    necessary_conditions,
)

MEMBER = "member"
NON_MEMBER = "non-member"

IS_K2 = "IsK2"
COMPLETE_WITH_J1 = "CompleteWithJ1"
NO_COVER = "NoCoverExists"


def necessary_condition_failed(name: str) -> str:
    return f"NecessaryConditionFailed({name})"


@dataclass(frozen=True)
class RecognitionCertificate:
    verdict: str
    witness: Digraph | None = None
    obstruction: str | None = None
    cover: CliqueCover | None = None

    @property
    def is_member(self) -> bool:
        return self.verdict == MEMBER


def _member(g: Graph, b, d: Digraph, cover: CliqueCover | None = None) -> RecognitionCertificate:
    # soundness is checked on every positive answer, not only in tests
    if not is_ij_digraph(d, b):
        raise RuntimeError(f"witness digraph violates bounds {b}")
    if competition_graph(d) != g:
        raise RuntimeError("witness digraph does not reproduce the input graph")
    return RecognitionCertificate(MEMBER, witness=d, cover=cover)


def _non_member(obstruction: str) -> RecognitionCertificate:
    return RecognitionCertificate(NON_MEMBER, obstruction=obstruction)


def recognize(g: Graph, b) -> RecognitionCertificate:
    """Decide whether ``g`` is the competition graph of some ``<i,j>`` digraph.

    Raises ``SizeGuardError`` when the exhaustive cover search is needed on
    an instance beyond its limits.
    """
    b = as_bounds(b)
    n = g.n
    if n == 2 and g.m == 1:
        return _non_member(IS_K2)
    complete = n >= 2 and g.is_complete()
    if b.j == 1 and complete:
        return _non_member(COMPLETE_WITH_J1)
    failed = necessary_conditions(g, b)
    if failed:
        return _non_member(necessary_condition_failed(failed[0]))

    if g.m == 0:
        return _member(g, b, Digraph(n, ()), CliqueCover(()))

    touched = [v for v in range(n) if g.adj[v]]
    isolated = [v for v in range(n) if not g.adj[v]]
    if isolated and len(touched) <= b.i and g.m == len(touched) * (len(touched) - 1) // 2:
        # the edges form one clique; point all of it at an isolated vertex
        sink = isolated[0]
        return _member(g, b, Digraph(n, [(v, sink) for v in touched]), CliqueCover([touched]))
    if complete and b.i >= n - 1:
        # j >= 2 and n >= 3 are guaranteed by the checks above
        return _member(g, b, complete_graph_digraph(n))

    cover = search_cover(g, b)
    if cover is None:
        return _non_member(NO_COVER)
    if len(cover) == 1:  # pragma: no cover - both single-clique shapes are handled above
        raise RuntimeError("single-clique cover escaped the closed-form cases")
    repaired = repair_cover(g, cover, b)
    d = witness_digraph(g, repaired.cover, repaired.sdr)
    return _member(g, b, d, repaired.cover)


def recognize_1j(g: Graph) -> bool:
    """Membership for indegree bound 1: exactly the edgeless graphs."""
    return g.m == 0


def recognize_i1(g: Graph, i: int) -> bool:
    """Membership for outdegree bound 1.

    True iff ``g`` is trivial, or it has at least two components, each a
    complete graph on at most ``i`` vertices.
    """
    if i < 1:
        raise ValueError(f"i must be positive, got {i}")
    if g.n <= 1:
        return True
    comps = g.components()
    if len(comps) < 2:
        return False
    return all(len(c) <= i and g.is_clique(c) for c in comps)
