"""Balanced incomplete block designs and extremal clique numbers.

A ``(b, v, r, k, lambda)`` design with ``lambda = 1`` turns into a bipartite
``<k, r>`` digraph whose varieties form a clique of size ``v`` in the
competition graph; when ``v = k*r - r + 1`` that clique meets the upper
bound ``ij - j + 1`` on the clique number of an ``<i,j>`` competition graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import SizeGuardError
from .graphs import Digraph, as_bounds, competition_graph, is_ij_digraph

MAX_STEINER_ORDER = 15


@dataclass(frozen=True)
class Bibd:
    b: int
    v: int
    r: int
    k: int
    lam: int
    blocks: tuple = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(tuple(sorted(B)) for B in self.blocks))

    @property
    def params(self) -> tuple[int, int, int, int, int]:
        return self.b, self.v, self.r, self.k, self.lam

    def canonical(self) -> Bibd:
        return Bibd(self.b, self.v, self.r, self.k, self.lam, sorted(self.blocks))

    def as_dict(self) -> dict:
        return {
            "b": self.b,
            "v": self.v,
            "r": self.r,
            "k": self.k,
            "lambda": self.lam,
            "blocks": [list(B) for B in self.blocks],
        }


def bibd_violation(d: Bibd) -> str | None:
    """The first failed design axiom, or None for a valid design."""
    if len(d.blocks) != d.b:
        return f"expected b={d.b} blocks, found {len(d.blocks)}"
    # the one-block design on all varieties is admitted as a degenerate case
    # so that pair_design(1) and the 3-point triple system verify
    if not (d.k < d.v or (d.k == d.v and d.b == 1)):
        return f"block size k={d.k} is not below v={d.v}"
    for idx, B in enumerate(d.blocks):
        if len(set(B)) != len(B) or any(not 0 <= x < d.v for x in B):
            return f"block {idx} is not a subset of 0..{d.v - 1}"
        if len(B) != d.k:
            return f"block {idx} has {len(B)} varieties, expected k={d.k}"
    counts = [0] * d.v
    for B in d.blocks:
        for x in B:
            counts[x] += 1
    for x, c in enumerate(counts):
        if c != d.r:
            return f"replication: variety {x} appears in {c} blocks, expected r={d.r}"
    pairs = {}
    for B in d.blocks:
        for pair in combinations(B, 2):
            pairs[pair] = pairs.get(pair, 0) + 1
    for pair in combinations(range(d.v), 2):
        if pairs.get(pair, 0) != d.lam:
            return f"pair {pair} appears in {pairs.get(pair, 0)} blocks, expected lambda={d.lam}"
    if d.b * d.k != d.v * d.r:
        return "bk != vr"  # pragma: no cover - implied by the replication count
    return None


def verify_bibd(d: Bibd) -> bool:
    return bibd_violation(d) is None


def pair_design(j: int) -> Bibd:
    """All 2-subsets of ``{0..j}``: a ``(j(j+1)/2, j+1, j, 2, 1)`` design."""
    if j < 1:
        raise ValueError(f"j must be positive, got {j}")
    blocks = list(combinations(range(j + 1), 2))
    return Bibd(len(blocks), j + 1, j, 2, 1, blocks)


def fano_plane() -> Bibd:
    """Lines ``{t, t+1, t+3} mod 7``."""
    return Bibd(7, 7, 3, 3, 1, [sorted({t, (t + 1) % 7, (t + 3) % 7}) for t in range(7)])


def _projective_triples(dim: int) -> list[list[int]]:
    # points: nonzero vectors of F_2^dim; lines: {a, b, a^b}
    n = 2**dim - 1
    lines = {tuple(sorted((a - 1, b - 1, (a ^ b) - 1))) for a, b in combinations(range(1, n + 1), 2)}
    return sorted(list(t) for t in lines)


def _affine_plane_3() -> list[list[int]]:
    pts = list(product(range(3), repeat=2))
    index = {p: t for t, p in enumerate(pts)}
    lines = set()
    for p, q in combinations(pts, 2):
        third = tuple((-p[c] - q[c]) % 3 for c in range(2))
        lines.add(tuple(sorted((index[p], index[q], index[third]))))
    return sorted(list(t) for t in lines)


def _cyclic_13() -> list[list[int]]:
    # base blocks with pairwise differences covering Z_13 \ {0} once
    base = [(0, 1, 4), (0, 2, 7)]
    return sorted(sorted((x + s) % 13 for x in blk) for blk in base for s in range(13))


def steiner_triple(n: int) -> Bibd | None:
    """A Steiner triple system on ``n`` points, or None when none exists.

    Constructions are kept for n in {3, 7, 9, 13, 15}; other n up to 15 fail
    the residue condition n = 1 or 3 mod 6.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if n > MAX_STEINER_ORDER:
        raise SizeGuardError("steiner-order", f"Steiner triple systems are only built for n <= {MAX_STEINER_ORDER}")
    if n % 6 not in (1, 3):
        return None
    if n == 3:
        blocks = [[0, 1, 2]]
    elif n == 7:
        blocks = list(fano_plane().blocks)
    elif n == 9:
        blocks = _affine_plane_3()
    elif n == 13:
        blocks = _cyclic_13()
    else:
        blocks = _projective_triples(4)
    b = n * (n - 1) // 6
    return Bibd(b, n, (n - 1) // 2, 3, 1, blocks)


def clique_bound(b) -> int:
    """Largest possible clique number of an ``<i,j>`` competition graph."""
    b = as_bounds(b)
    return b.i * b.j - b.j + 1


def fisher_check(d: Bibd) -> bool:
    """Fisher's inequality ``b >= v`` on the stated parameters.

    Only meaningful when ``k < v``; the degenerate one-block design fails it.
    """
    return d.b >= d.v


def bibd_to_digraph(d: Bibd) -> Digraph:
    """Varieties ``0..v-1`` point to block vertices ``v..v+b-1`` containing them."""
    if d.lam != 1:
        raise ValueError(f"the digraph correspondence needs lambda = 1, got {d.lam}")
    arcs = [(x, d.v + idx) for idx, B in enumerate(d.blocks) for x in B]
    return Digraph(d.v + len(d.blocks), arcs)


def extract_bibd(d: Digraph, b, clique) -> Bibd:
    """Read the design off a clique of size ``ij - j + 1`` in the competition graph.

    Varieties are the clique vertices in increasing order, relabelled
    ``0..v-1``; blocks are the in-neighbourhoods of their out-neighbours,
    sorted.  Three identities must hold on the way: any two clique vertices
    share exactly one out-neighbour (pair condition), every such prey has
    exactly ``i`` in-neighbours, all in the clique (prey condition), and
    every clique vertex has outdegree ``j`` (outdegree condition).  Raises
    ``ValueError`` naming the first one that fails.
    """
    b = as_bounds(b)
    K = sorted(set(clique))
    size = clique_bound(b)
    if not is_ij_digraph(d, b):
        raise ValueError(f"digraph is not an {b} digraph")
    if len(K) != size:
        raise ValueError(f"clique has {len(K)} vertices, extremal size is {size}")
    if not competition_graph(d).is_clique(K):
        raise ValueError("vertex set is not a clique of the competition graph")
    kmask = 0
    for u in K:
        kmask |= 1 << u
    for u, w in combinations(K, 2):
        shared = (d.out_masks[u] & d.out_masks[w]).bit_count()
        if shared != 1:
            raise ValueError(f"pair condition fails: {u} and {w} share {shared} out-neighbours")
    prey = sorted({w for u in K for w in d.out_neighbors(u)})
    for w in prey:
        if d.in_masks[w] & ~kmask:
            raise ValueError(f"prey condition fails: in-neighbours of {w} leave the clique")
        if d.indegree(w) != b.i:
            raise ValueError(f"prey condition fails: indegree of {w} is {d.indegree(w)} != {b.i}")
    for u in K:
        if d.outdegree(u) != b.j:
            raise ValueError(f"outdegree condition fails: outdegree of {u} is {d.outdegree(u)} != {b.j}")
    label = {u: t for t, u in enumerate(K)}
    blocks = sorted({tuple(sorted(label[x] for x in d.in_neighbors(w))) for w in prey})
    design = Bibd(len(blocks), size, b.j, b.i, 1, blocks)
    if design.b * b.i != b.j * size:
        raise ValueError("block count disagrees with bk = vr")
    problem = bibd_violation(design)
    if problem is not None:
        raise ValueError(f"extracted blocks are not a design: {problem}")
    return design
