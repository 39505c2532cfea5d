from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxicity.errors import InputError, ParseError
from boxicity.graph import (
    Graph,
    LineVertex,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    kneser_2,
    line_graph,
    parse_edge_list,
    path_graph,
    serialize_edge_list,
    star_graph,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@pytest.mark.parametrize("n, m", [(0, 0), (1, 0), (5, 10)])
def test_complete_graph_sizes(n, m):
    g = complete_graph(n)
    assert (g.n, g.m) == (n, m)


def test_complement_examples():
    assert complement(complete_graph(5)) == empty_graph(5)
    assert complement(empty_graph(3)) == complete_graph(3)
    assert complement(cycle_graph(4)).edge_set() == {(0, 2), (1, 3)}


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_edge_list_round_trip(g):
    text = serialize_edge_list(g)
    assert parse_edge_list(text) == g
    assert serialize_edge_list(parse_edge_list(text)) == text


def test_line_graph_small():
    lk4 = line_graph(complete_graph(4))
    assert (lk4.n, lk4.m) == (6, 12)
    assert line_graph(path_graph(3)).edge_set() == {(0, 1)}
    lk5 = line_graph(complete_graph(5))
    assert (lk5.n, lk5.m) == (10, 30)


@pytest.mark.parametrize("n", range(4, 10))
def test_line_graph_of_complete_counts(n):
    g = complete_graph(n)
    lg = line_graph(g)
    assert lg.n == comb(n, 2)
    # count pairs of base edges sharing exactly one endpoint directly
    base = g.edges()
    direct = sum(1 for i in range(len(base)) for j in range(i + 1, len(base)) if len(set(base[i]) & set(base[j])) == 1)
    assert lg.m == direct == n * comb(n - 1, 2)


def test_line_graph_labels_are_lexicographic():
    lg = line_graph(complete_graph(4))
    assert lg.labels == tuple(LineVertex(u, v) for u in range(4) for v in range(u + 1, 4))
    assert lg.vertex_of(LineVertex(2, 3)) == 5


def test_line_vertex_normalises():
    assert LineVertex.of(3, 1) == LineVertex(1, 3)
    with pytest.raises(InputError):
        LineVertex.of(2, 2)


def test_induced_subgraph():
    assert induced_subgraph(complete_graph(5), {0, 1, 2}) == complete_graph(3)
    assert induced_subgraph(complete_graph(5), set()).n == 0
    sub = induced_subgraph(cycle_graph(5), {1, 2, 3, 4})
    assert sub.edge_set() == path_graph(4).edge_set()
    assert sub.labels == (1, 2, 3, 4)
    with pytest.raises(InputError):
        induced_subgraph(cycle_graph(5), {0, 7})


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_kneser_regular(n):
    k = kneser_2(n)
    assert k.n == comb(n, 2)
    assert {k.degree(v) for v in range(k.n)} == {comb(n - 2, 2)}
    assert k == complement(line_graph(complete_graph(n)))


def test_petersen_shape():
    p = kneser_2(5)
    assert (p.n, p.m) == (10, 15)


def test_kneser_small_rejected():
    with pytest.raises(InputError):
        kneser_2(4)


def test_star_and_cycle():
    s = star_graph(4)
    assert s.degree(0) == 4 and s.m == 4
    assert cycle_graph(5).m == 5


def test_parse_examples():
    assert parse_edge_list("3 2\n0 1\n1 2") == path_graph(3)
    assert parse_edge_list("2 0") == empty_graph(2)
    assert parse_edge_list("# comment\n3 3\n0 1\n1 0\n1 2\n") == path_graph(3)


@pytest.mark.parametrize(
    "text, line",
    [("2 1\n0 0", 2), ("2 1\n0 5", 2), ("3 1\n0 x", 2), ("3 1\n0 1 2", 2)],
)
def test_parse_errors_report_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parse_edge_count_mismatch():
    with pytest.raises(ParseError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_edge_list("")


def test_graph_invariants_enforced():
    with pytest.raises(InputError):
        Graph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(InputError):
        Graph(1, [0b1])  # loop
    with pytest.raises(InputError):
        Graph(2, [0, 0], labels=["x", "x"])


@settings(max_examples=50)
@given(graphs(max_n=7))
def test_degrees_sum(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
