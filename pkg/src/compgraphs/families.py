"""Separating graphs and the containment relation between ``<i,j>`` families."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .cover import CliqueCover, repair_cover, validate_cover, witness_digraph
from .errors import SizeGuardError
from .graphs import (
    DegreeBounds,
    Digraph,
    Graph,
    as_bounds,
    competition_graph,
    complete_graph,
    disjoint_union,
    is_ij_digraph,
)
from .recognition import recognize, recognize_i1

EQUAL = "Equal"
PROPER_SUBSET = "ProperSubset"
NOT_CONTAINED = "NotContained"
UNKNOWN = "Unknown"

MAX_HAMMING_K = 4


def star_of_cliques_cover(i: int, j: int) -> tuple[Graph, CliqueCover]:
    if i < 2 or j < 2:
        raise ValueError(f"star of cliques needs i, j >= 2, got ({i}, {j})")
    cliques = [[0] + list(range(1 + t * (i - 1), 1 + (t + 1) * (i - 1))) for t in range(j)]
    edges = [e for c in cliques for e in combinations(c, 2)]
    return Graph(j * (i - 1) + 1, edges), CliqueCover(cliques)


def star_of_cliques(i: int, j: int) -> Graph:
    """Hub 0 shared by ``j`` cliques of size ``i``, otherwise disjoint."""
    return star_of_cliques_cover(i, j)[0]


def hamming_graph(k: int) -> tuple[Graph, CliqueCover]:
    """Tuples in ``[k+1]^k``, adjacent when they differ in one coordinate.

    The cover consists of the axis-parallel lines: ``k (k+1)^(k-1)`` cliques
    of size ``k+1``, each vertex on exactly ``k`` of them.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if k > MAX_HAMMING_K:
        raise SizeGuardError("hamming-order", f"hamming_graph refuses k={k} > {MAX_HAMMING_K}")
    m = k + 1
    points = list(product(range(m), repeat=k))
    index = {p: t for t, p in enumerate(points)}
    lines = []
    for axis in range(k):
        for p in points:
            if p[axis] == 0:
                lines.append([index[p[:axis] + (x,) + p[axis + 1 :]] for x in range(m)])
    edges = {e for line in lines for e in combinations(line, 2)}
    return Graph(len(points), edges), CliqueCover(lines)


def double_clique_cover(i: int) -> tuple[Graph, CliqueCover]:
    if i < 1:
        raise ValueError(f"i must be positive, got {i}")
    g = disjoint_union(complete_graph(i), complete_graph(i))
    cover = CliqueCover([range(i), range(i, 2 * i)] if i >= 2 else [])
    return g, cover


def double_clique(i: int) -> Graph:
    """Two disjoint copies of ``K_i``."""
    return double_clique_cover(i)[0]


def certify_member(g: Graph, b, cover: CliqueCover | None = None) -> Digraph:
    """A verified ``<i,j>`` digraph whose competition graph is ``g``.

    With a cover in ``C(G,i,j)`` the witness comes from the repair loop and
    no search is needed, which keeps large gadgets cheap.
    """
    b = as_bounds(b)
    if cover is not None and len(cover) >= 2:
        if not validate_cover(g, cover, b):
            raise RuntimeError(f"gadget cover is not in C(G,{b.i},{b.j})")
        repaired = repair_cover(g, cover, b)
        d = witness_digraph(g, repaired.cover, repaired.sdr)
    else:
        cert = recognize(g, b)
        if not cert.is_member:
            raise RuntimeError(f"expected membership in {b}, got {cert.obstruction}")
        d = cert.witness
    if not is_ij_digraph(d, b) or competition_graph(d) != g:
        raise RuntimeError("member witness failed verification")
    if b.j == 1 and not recognize_i1(g, b.i):
        raise RuntimeError("outdegree-1 characterization rejects a certified member")
    return d


def certify_non_member(g: Graph, b) -> str:
    """The obstruction proving ``g`` is outside the ``<i,j>`` family."""
    b = as_bounds(b)
    cert = recognize(g, b)
    if cert.is_member:
        raise RuntimeError(f"separating graph is a member of {b}")
    if b.j == 1 and recognize_i1(g, b.i):
        raise RuntimeError("outdegree-1 characterization accepts a rejected graph")
    return cert.obstruction


@dataclass(frozen=True)
class Separation:
    graph: Graph
    gadget: str
    obstruction: str
    # verified digraph realizing ``graph`` on the member side
    certificate: Digraph


@lru_cache(maxsize=None)
def _separate(i: int, j: int, k: int, l: int) -> Separation | None:
    inside, outside = DegreeBounds(i, j), DegreeBounds(k, l)
    if (i, j, k, l) == (5, 1, 3, 2):
        g, cover = double_clique_cover(5)
        gadget = "double_clique(5)"
    elif i <= k and j <= l:
        return None
    elif i >= 2 and j >= 2 and (j > l or (i - 1) * j > (k - 1) * l):
        g, cover = star_of_cliques_cover(i, j)
        gadget = f"star_of_cliques({i},{j})"
    elif i >= 2 and (i > k * k - k + 1 or (i - 1) * j > (k - 1) * l or (l == 1 and i > k)):
        g, cover = double_clique_cover(i)
        gadget = f"double_clique({i})"
    elif j >= k >= 2 and i > k:
        g, cover = hamming_graph(k)
        gadget = f"hamming_graph({k})"
    else:
        return None
    d = certify_member(g, inside, cover)
    obstruction = certify_non_member(g, outside)
    return Separation(g, gadget, obstruction, d)


def separation_witness(b1, b2) -> Graph | None:
    """A verified graph in the ``b1`` family but not the ``b2`` family, if a gadget applies."""
    sep = find_separation(b1, b2)
    return None if sep is None else sep.graph


def find_separation(b1, b2) -> Separation | None:
    b1, b2 = as_bounds(b1), as_bounds(b2)
    return _separate(b1.i, b1.j, b2.i, b2.j)


@dataclass(frozen=True)
class Claim:
    """``family`` is (or is not) contained in ``other``."""

    family: DegreeBounds
    other: DegreeBounds
    contained: bool
    witness: Graph | None
    reason: str
    certificate: Digraph | None = None


@dataclass(frozen=True)
class ContainmentVerdict:
    relation: str
    witness: Graph | None
    rationale: str
    claims: tuple = ()


def _subset(small: DegreeBounds, big: DegreeBounds, reason: str) -> Claim:
    return Claim(small, big, True, None, reason)


def _not_subset(fam: DegreeBounds, other: DegreeBounds) -> Claim:
    sep = find_separation(fam, other)
    if sep is None:
        raise RuntimeError(f"no verified gadget separates {fam} from {other}")
    reason = f"{sep.gadget} is in {fam}, not in {other}: {sep.obstruction}"
    return Claim(fam, other, False, sep.graph, reason, sep.certificate)


def _in_open_region(i: int, j: int, k: int, l: int) -> bool:
    return k * k - k + 1 >= i > k >= 2 and j < min(k, l) and (i - 1) * j <= (k - 1) * l


def containment(b1, b2) -> ContainmentVerdict:
    """Relation between the ``b1`` and ``b2`` competition-graph families.

    The pair is first ordered so the first has the larger indegree bound
    (ties: larger outdegree bound); each entry of ``claims`` names its own
    direction.  ``Unknown`` means one non-containment is proved and the
    other direction is open.
    """
    b1, b2 = as_bounds(b1), as_bounds(b2)
    if b1 == b2:
        return ContainmentVerdict(EQUAL, None, "identical bounds", (_subset(b1, b2, "identical bounds"),))
    big, small = (b1, b2) if (b1.i, b1.j) > (b2.i, b2.j) else (b2, b1)
    i, j, k, l = big.i, big.j, small.i, small.j
    mono = "bounds are componentwise smaller"

    if i == k:
        if i == 1:
            reason = "indegree bound 1 gives exactly the edgeless graphs"
            return ContainmentVerdict(
                EQUAL, None, f"indegree bounds both 1: {reason}", (_subset(small, big, reason), _subset(big, small, reason))
            )
        claims = (_subset(small, big, mono), _not_subset(big, small))
        return ContainmentVerdict(PROPER_SUBSET, claims[1].witness, f"equal indegree bounds above 1: {small} inside {big}", claims)
    if j >= l:
        case = "(2)" if j > l else "(3)"
        claims = (_subset(small, big, mono), _not_subset(big, small))
        return ContainmentVerdict(PROPER_SUBSET, claims[1].witness, f"case {case}: {small} inside {big}", claims)

    # remaining pairs: i > k and j < l
    if k == 1:
        claims = (_subset(small, big, "edgeless graphs lie in every family"), _not_subset(big, small))
        return ContainmentVerdict(PROPER_SUBSET, claims[1].witness, f"smaller indegree bound is 1: {small} inside {big}", claims)
    small_out = _not_subset(small, big)
    if (i, j, k) in ((3, 1, 2), (4, 1, 3)) and l >= 2:
        reason = "disjoint unions of small cliques are covered within the smaller indegree bound"
        claims = (_subset(big, small, reason), small_out)
        return ContainmentVerdict(
            PROPER_SUBSET, small_out.witness, f"settled small instance: {big} inside {small}", claims
        )
    if (i, j, k, l) == (5, 1, 3, 2):
        claims = (small_out, _not_subset(big, small))
        return ContainmentVerdict(NOT_CONTAINED, claims[1].witness, "settled small instance: K5 u K5 separates", claims)
    if i > k * k - k + 1 or (i - 1) * j > (k - 1) * l or j >= k >= 2:
        claims = (small_out, _not_subset(big, small))
        return ContainmentVerdict(NOT_CONTAINED, claims[1].witness, "gadgets separate both ways: incomparable", claims)
    assert _in_open_region(i, j, k, l)
    return ContainmentVerdict(
        UNKNOWN, small_out.witness, f"open region: whether {big} lies inside {small} is undecided", (small_out,)
    )
