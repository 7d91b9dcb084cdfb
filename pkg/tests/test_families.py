from itertools import combinations_with_replacement

import pytest

from compgraphs.cover import MAX_SEARCH_VERTICES, validate_cover
from compgraphs.errors import SizeGuardError
from compgraphs.families import (
    EQUAL,
    NOT_CONTAINED,
    PROPER_SUBSET,
    UNKNOWN,
    containment,
    double_clique,
    hamming_graph,
    separation_witness,
    star_of_cliques,
    star_of_cliques_cover,
)
from compgraphs.graphs import (
    EDGE_COUNT,
    Graph,
    competition_graph,
    is_ij_digraph,
    complete_graph,
    disjoint_union,
    graph_stats,
    is_k1t_free,
    necessary_conditions,
)
from compgraphs.recognition import recognize, recognize_i1
from oracles import expected_relation


def in_family(g, b):
    return recognize(g, b).is_member


def check_claims(verdict):
    for claim in verdict.claims:
        if claim.contained:
            continue
        g = claim.witness
        assert g is not None
        d = claim.certificate
        assert is_ij_digraph(d, claim.family) and competition_graph(d) == g
        if g.n <= MAX_SEARCH_VERTICES:
            assert in_family(g, claim.family)
        if claim.family.j == 1:
            assert recognize_i1(g, claim.family.i)
        assert not in_family(g, claim.other)


def test_star_of_cliques_examples():
    g = star_of_cliques(5, 3)
    assert g.n == 13 and g.degree(0) == 12
    assert graph_stats(g) == (12, 5)
    assert star_of_cliques(2, 2) == Graph(3, [(0, 1), (0, 2)])
    bowtie = star_of_cliques(3, 2)
    assert bowtie.n == 5 and bowtie.m == 6 and bowtie.degree(0) == 4
    with pytest.raises(ValueError):
        star_of_cliques(1, 3)


@pytest.mark.parametrize("i, j", [(2, 2), (3, 2), (2, 3), (4, 3), (5, 3), (3, 4)])
def test_star_of_cliques_properties(i, j):
    g, cover = star_of_cliques_cover(i, j)
    assert g.n == j * (i - 1) + 1 and g.degree(0) == (i - 1) * j
    assert validate_cover(g, cover, (i, j))
    assert not is_k1t_free(g, j)
    assert in_family(g, (i, j))


def test_hamming_examples():
    g, cover = hamming_graph(2)
    assert (g.n, g.m, len(cover)) == (9, 18, 6)
    assert all(len(c) == 3 for c in cover)
    assert validate_cover(g, cover, (3, 2))
    assert g.m / g.n == 2 > 1
    g3, cover3 = hamming_graph(3)
    assert (g3.n, g3.m, len(cover3)) == (64, 288, 48)
    assert all(g3.degree(v) == 9 for v in range(64))
    with pytest.raises(SizeGuardError):
        hamming_graph(5)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_hamming_identities(k):
    g, cover = hamming_graph(k)
    assert (k + 1) * len(cover) == k * g.n
    assert 2 * g.m == k * k * g.n
    assert validate_cover(g, cover, (k + 1, k))
    assert EDGE_COUNT in necessary_conditions(g, (k, 99))


def test_double_clique_examples():
    assert double_clique(1) == Graph(2, [])
    g = double_clique(5)
    assert recognize_i1(g, 5) and in_family(g, (5, 1))
    assert not in_family(g, (3, 2))
    four = double_clique(4)
    assert four.m == 12 and EDGE_COUNT in necessary_conditions(four, (2, 3))


def test_containment_examples():
    assert containment((1, 5), (1, 2)).relation == EQUAL
    v = containment((3, 3), (2, 2))
    assert v.relation == PROPER_SUBSET and v.witness == star_of_cliques(3, 3)
    v = containment((5, 1), (3, 2))
    assert v.relation == NOT_CONTAINED
    assert double_clique(5) in [c.witness for c in v.claims]
    check_claims(v)


def test_separation_witness_examples():
    assert separation_witness((3, 2), (2, 2)) == star_of_cliques(3, 2)
    assert separation_witness((3, 2), (2, 5)) == hamming_graph(2)[0]
    assert separation_witness((5, 1), (3, 2)) == double_clique(5)
    assert separation_witness((2, 2), (3, 3)) is None


def test_open_region_is_unknown():
    v = containment((3, 1), (3, 2)), containment((4, 1), (4, 5))
    assert [x.relation for x in v] == [PROPER_SUBSET, PROPER_SUBSET]
    assert containment((4, 1), (3, 3)).relation == PROPER_SUBSET
    assert containment((5, 1), (3, 3)).relation == UNKNOWN
    assert containment((3, 3), (5, 1)).relation == UNKNOWN
    assert containment((6, 2), (3, 5)).relation == UNKNOWN


def test_table_and_witnesses():
    for a in range(1, 6):
        for b in range(1, 6):
            for c in range(1, 6):
                for d in range(1, 6):
                    v = containment((a, b), (c, d))
                    assert v.relation == expected_relation((a, b), (c, d)), (a, b, c, d)
                    check_claims(v)


def test_antisymmetric_and_monotone():
    for a in range(1, 6):
        for b in range(1, 6):
            for c in range(1, 6):
                for d in range(1, 6):
                    forward, backward = containment((a, b), (c, d)), containment((c, d), (a, b))
                    assert forward.relation == backward.relation
                    subs = {(cl.family, cl.other) for cl in forward.claims if cl.contained}
                    if forward.relation == PROPER_SUBSET:
                        assert len(subs) == 1
                    if a >= c and b >= d:
                        assert not any(
                            not cl.contained and (cl.family.i, cl.family.j) == (c, d) for cl in forward.claims
                        )


def _clique_unions(max_size, parts):
    for count in range(2, parts + 1):
        for sizes in combinations_with_replacement(range(1, max_size + 1), count):
            yield disjoint_union(*[complete_graph(s) for s in sizes])


@pytest.mark.parametrize("i, k, l", [(3, 2, 2), (4, 3, 2)])
def test_resolved_instances_desk_scale(i, k, l):
    # every <i,1> graph with up to three components lies in <k,l>
    for g in _clique_unions(i, 3):
        assert recognize_i1(g, i)
        assert in_family(g, (k, l)), sorted(g.edges)
