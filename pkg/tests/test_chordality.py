import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compgraphs.chordality import (
    P22,
    TRIANGLE_PATTERNS,
    chordal_iff_no_good,
    find_good_subdigraph,
    find_hole,
    good_subdigraph_problems,
    induces_triangle,
    interval_22,
    is_chordal,
    is_irredundant,
    perfect_elimination_order,
)
from compgraphs.errors import SizeGuardError
from compgraphs.graphs import (
    Digraph,
    Graph,
    competition_graph,
    complete_graph,
    complete_graph_digraph,
    cycle_graph,
    path_graph,
)
from oracles import brute_is_chordal, has_triangle, is_induced_cycle, random_ij_digraph


def c4_witness():
    # v_t = 0..3 feed u_t = 4..7; u_t is shared by v_t and v_{t+1}
    return Digraph(8, [(t, 4 + t) for t in range(4)] + [((t + 1) % 4, 4 + t) for t in range(4)])


def all_digraphs(n):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for bits in product((0, 1), repeat=len(pairs)):
        yield Digraph(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    return Graph(n, draw(st.sets(st.sampled_from(pairs))) if pairs else set())


def test_pattern_shapes():
    shapes = {name: (p.n, len(p.arcs)) for name, p in TRIANGLE_PATTERNS.items()}
    assert shapes == {"a": (6, 6), "b": (4, 3), "c": (5, 6), "d": (3, 6), "e": (4, 6)}
    assert sum(P22.has_arc(v, u) and P22.has_arc(u, v) for u, v in combinations(range(3), 2)) == 0
    assert sum(TRIANGLE_PATTERNS["e"].has_arc(u, v) and TRIANGLE_PATTERNS["e"].has_arc(v, u) for u, v in combinations(range(4), 2)) == 1
    assert (P22.n, len(P22.arcs)) == (4, 4)


@pytest.mark.parametrize("name", sorted(TRIANGLE_PATTERNS))
def test_each_pattern_makes_a_triangle(name):
    assert has_triangle(competition_graph(TRIANGLE_PATTERNS[name]))
    assert induces_triangle(TRIANGLE_PATTERNS[name])


def test_chordal_examples():
    assert not is_chordal(cycle_graph(4))
    assert find_hole(cycle_graph(4)) == (0, 1, 2, 3)
    tree = Graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert is_chordal(tree) and find_hole(tree) is None
    c5_chord = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    hole = find_hole(c5_chord)
    assert len(hole) == 4 and is_induced_cycle(c5_chord, hole)


def test_hole_is_canonical():
    g = Graph(5, [(3, 1), (1, 4), (4, 2), (2, 3)])
    assert find_hole(g) == (1, 3, 2, 4)


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_chordality_matches_induced_cycle_scan(g):
    assert is_chordal(g) == brute_is_chordal(g)
    hole = find_hole(g)
    if hole is None:
        order = perfect_elimination_order(g)
        assert sorted(order) == list(range(g.n))
        for pos, v in enumerate(order):
            later = [u for u in order[pos + 1 :] if g.has_edge(u, v)]
            assert g.is_clique(later)
    else:
        assert is_induced_cycle(g, hole)


def test_induces_triangle_examples():
    assert induces_triangle(TRIANGLE_PATTERNS["b"])
    assert not induces_triangle(Digraph(5, []))
    assert induces_triangle(complete_graph_digraph(3))


def test_triangle_patterns_exhaustive_three_vertices():
    for n in range(1, 4):
        for d in all_digraphs(n):
            assert induces_triangle(d) == has_triangle(competition_graph(d))


def test_irredundant_examples():
    assert not is_irredundant(P22)
    assert is_irredundant(Digraph(4, [(0, 1), (1, 2), (2, 3)]))
    assert not is_irredundant(complete_graph_digraph(4))


def test_good_subdigraph_examples():
    report = find_good_subdigraph(c4_witness())
    assert report.found and good_subdigraph_problems(c4_witness(), report.arcs) == []
    assert not find_good_subdigraph(Digraph(4, [])).found
    assert not find_good_subdigraph(TRIANGLE_PATTERNS["b"]).found


def test_good_subdigraph_exhaustive_on_c4_witness():
    report = find_good_subdigraph(c4_witness(), method="exhaustive")
    assert report.found and report.method == "exhaustive"
    assert set(report.arcs) == set(c4_witness().arcs)


def test_good_report_json():
    report = find_good_subdigraph(c4_witness())
    data = report.as_dict()
    assert data["found"] and len(data["arcs"]) == 8 and data["vertices"] == list(range(8))


def test_good_subdigraph_guard():
    big = Digraph(11, [(0, 1), (2, 1)])
    with pytest.raises(SizeGuardError) as info:
        find_good_subdigraph(big)
    assert info.value.guard == "good-subdigraph-fallback"
    assert not find_good_subdigraph(big, max_vertices=11).found


def test_chordal_iff_no_good_examples():
    chordal, report = chordal_iff_no_good(complete_graph_digraph(5), 4)
    assert chordal and not report.found
    chordal, report = chordal_iff_no_good(c4_witness(), 2)
    assert not chordal and report.found
    chordal, report = chordal_iff_no_good(Digraph(3, []), 1)
    assert chordal and not report.found


def test_chordal_iff_no_good_precondition():
    with pytest.raises(ValueError):
        chordal_iff_no_good(TRIANGLE_PATTERNS["b"], 2)  # indegree 3
    with pytest.raises(ValueError):
        chordal_iff_no_good(Digraph(4, [(0, 1), (0, 2), (0, 3)]), 3)  # outdegree 3


def test_interval_examples():
    assert interval_22(Digraph(4, []))
    assert not interval_22(c4_witness())
    # competition graph: paths 0-1-2 and 3-4
    d = Digraph(7, [(0, 5), (1, 5), (1, 6), (2, 6), (3, 0), (4, 0)])
    assert competition_graph(d) == Graph(7, [(0, 1), (1, 2), (3, 4)])
    assert interval_22(d)
    with pytest.raises(ValueError):
        interval_22(TRIANGLE_PATTERNS["b"])


def test_good_subdigraph_sound_for_general_bounds():
    # no good subdigraph => chordal, for any outdegree bound
    rng = random.Random(21)
    for _ in range(400):
        n = rng.randint(1, 9)
        d = random_ij_digraph(rng, n, rng.randint(1, 4), rng.randint(1, 4))
        report = find_good_subdigraph(d)
        if not report.found:
            assert is_chordal(competition_graph(d))
        else:
            assert good_subdigraph_problems(d, report.arcs) == []


def test_interval_random():
    rng = random.Random(22)
    for _ in range(300):
        d = random_ij_digraph(rng, rng.randint(1, 10), 2, 2)
        assert interval_22(d) == brute_is_chordal(competition_graph(d))


def test_paths_are_chordal():
    assert is_chordal(path_graph(7)) and is_chordal(complete_graph(6))
