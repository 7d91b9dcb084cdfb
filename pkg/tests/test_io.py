import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compgraphs import io
from compgraphs.cover import CliqueCover, SdrAssignment
from compgraphs.designs import fano_plane
from compgraphs.errors import ParseError
from compgraphs.families import containment
from compgraphs.graphs import Digraph, Graph, complete_graph, complete_graph_digraph
from compgraphs.recognition import recognize


@st.composite
def graphs(draw):
    n = draw(st.integers(0, 8))
    pairs = list(combinations(range(n), 2))
    return Graph(n, draw(st.sets(st.sampled_from(pairs))) if pairs else set())


@st.composite
def digraphs(draw):
    n = draw(st.integers(0, 8))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    return Digraph(n, draw(st.sets(st.sampled_from(pairs))) if pairs else set())


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_graph_round_trips(g):
    assert io.parse_graph(io.to_text(g)) == g
    assert io.parse_graph(json.dumps(io.to_json(g))) == g


@settings(max_examples=100, deadline=None)
@given(digraphs())
def test_digraph_round_trips(d):
    assert io.parse_digraph(io.to_text(d)) == d
    assert io.parse_digraph(json.dumps(io.to_json(d))) == d


def test_text_with_comments():
    text = "# a triangle\n3 3\n0 1\n1 2  # second\n\n0 2\n"
    assert io.parse_graph(text) == complete_graph(3)


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("", 1, "empty"),
        ("3\n", 1, "header"),
        ("3 2\n0 1\n", 1, "announces"),
        ("3 1\n0 x\n", 2, "not an integer"),
        ("3 1\n1 1\n", 2, "loop"),
        ("3 1\n0 3\n", 2, "out of range"),
        ("3 2\n0 1\n1 0\n", 3, "duplicate"),
        ("3 1\n0 1 2\n", 2, "two vertex"),
    ],
)
def test_text_errors_carry_position(text, line, fragment):
    with pytest.raises(ParseError) as info:
        io.parse_graph(text)
    assert info.value.line == line
    assert fragment in str(info.value)
    assert str(info.value).startswith(f"line {line}, column")


def test_column_of_bad_token():
    with pytest.raises(ParseError) as info:
        io.parse_graph("3 1\n0   y\n")
    assert info.value.column == 5


def test_digraph_allows_digons_but_not_duplicates():
    assert io.parse_digraph("2 2\n0 1\n1 0\n").arcs == {(0, 1), (1, 0)}
    with pytest.raises(ParseError):
        io.parse_digraph("2 2\n0 1\n0 1\n")


def test_json_errors():
    with pytest.raises(ParseError) as info:
        io.parse_graph('{"n": 3, "edges": [[0, 1],\n ]')
    assert info.value.line == 2
    with pytest.raises(ParseError):
        io.parse_graph('{"n": 3}')
    with pytest.raises(ParseError):
        io.parse_graph('{"n": -1, "edges": []}')
    with pytest.raises(ParseError):
        io.parse_graph('{"n": 3, "edges": [[0, 0]]}')
    with pytest.raises(ParseError):
        io.parse_digraph('{"n": 3, "arcs": [[0, 1, 2]]}')


def test_parse_any():
    assert isinstance(io.parse_any('{"n": 2, "arcs": [[0, 1]]}'), Digraph)
    assert isinstance(io.parse_any('{"n": 2, "edges": [[0, 1]]}'), Graph)
    assert isinstance(io.parse_any("2 1\n0 1\n", directed=True), Digraph)


def test_dot():
    g_dot = io.to_dot(Graph(2, [(0, 1)]))
    assert g_dot.startswith("graph G {") and "0 -- 1;" in g_dot
    d_dot = io.to_dot(Digraph(2, [(1, 0)]), labels=["a", "b"])
    assert d_dot.startswith("digraph G {") and "1 -> 0;" in d_dot and 'label="b"' in d_dot


def test_cover_and_sdr_json():
    cover = CliqueCover([{0, 1}, {1, 2}])
    assert io.parse_cover(json.dumps(io.cover_to_json(cover))) == cover
    sdr = SdrAssignment((2, 0))
    assert io.parse_sdr(json.dumps(io.sdr_to_json(sdr))) == sdr
    with pytest.raises(ParseError):
        io.parse_cover('{"cliques": [[0, 0]]}')
    with pytest.raises(ParseError):
        io.parse_sdr('{"reps": []}')


def test_bibd_json():
    fano = fano_plane()
    data = io.bibd_to_json(fano)
    assert data["lambda"] == 1
    assert io.parse_bibd(json.dumps(data)) == fano
    with pytest.raises(ParseError):
        io.parse_bibd('{"b": 1}')
    with pytest.raises(ParseError):
        io.parse_bibd('{"b": 1, "v": 2, "r": 1, "k": 2, "lambda": true, "blocks": [[0, 1]]}')


def test_certificate_json():
    member = io.certificate_to_json(recognize(complete_graph(4), (3, 2)))
    assert member["verdict"] == "member"
    assert io.parse_digraph(json.dumps(member["witness"])) == complete_graph_digraph(4)
    rejected = io.certificate_to_json(recognize(complete_graph(2), (2, 2)))
    assert rejected == {"verdict": "non-member", "obstruction": "IsK2"}


def test_verdict_json():
    data = io.verdict_to_json(containment((5, 1), (3, 2)))
    assert data["relation"] == "NotContained"
    assert {tuple(c["family"]) for c in data["claims"]} == {(5, 1), (3, 2)}
    assert all("witness" in c for c in data["claims"])
    json.dumps(data)
