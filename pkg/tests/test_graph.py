from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from polyfree import corpus
from polyfree.errors import GraphParseError, InputError, ResourceError
from polyfree.graph import (Coloring, Graph, chromatic_number, classify_shape,
                            clique_number, coloring_with, connected_components,
                            format_graph, has_triangle, induced_subgraph,
                            is_forest, is_independent, is_proper, max_clique,
                            parse_graph, simple_cycles)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    vs = [chr(ord("a") + i) for i in range(n)]
    pairs = list(combinations(vs, 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges([p for p, keep in zip(pairs, chosen) if keep], vs)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(tuple(e) for e in g.edges)
    return h


def brute_chromatic(g):
    vs = g.vertices
    for k in range(1, len(vs) + 1):
        for colors in product(range(k), repeat=len(vs)):
            a = dict(zip(vs, colors))
            if all(a[u] != a[v] for u, v in map(tuple, g.edges)):
                return k


def test_parse_and_format_round_trip():
    g = parse_graph("""
        # a path with an isolated vertex
        vertex z
        edge a b   # trailing comment
        edge b c
    """)
    assert g.vertices == ("z", "a", "b", "c")
    assert g.sorted_edges() == [("a", "b"), ("b", "c")]
    assert parse_graph(format_graph(g)) == g


def test_parse_errors_carry_line_numbers():
    cases = [
        ("edge a b\nedge b a\n", 2, "duplicate edge"),
        ("edge a a\n", 1, "loop"),
        ("vertex a\n\nvertex a\n", 3, "declared twice"),
        ("edge a b\nnode c\n", 2, "unknown directive"),
        ("edge a\n", 1, "expected"),
        ("edge a^1 b\n", 1, ""),
    ]
    for text, lineno, fragment in cases:
        with pytest.raises(GraphParseError) as info:
            parse_graph(text)
        assert info.value.lineno == lineno
        assert str(info.value).startswith(f"line {lineno}:")
        assert fragment in str(info.value)
    with pytest.raises(GraphParseError):
        parse_graph("# nothing here\n")


def test_unknown_vertex_is_an_input_error():
    g = corpus.pentagon()
    with pytest.raises(InputError):
        g.index("q")
    with pytest.raises(InputError):
        induced_subgraph(g, ["a", "q"])


def test_pentagon_solvers():
    g = corpus.pentagon()
    assert clique_number(g) == 2
    k, col = chromatic_number(g)
    assert k == 3
    assert col.classes(g) == [("a", "c"), ("b", "d"), ("e",)]
    assert is_proper(g, col)


def test_prism_and_triangle():
    p = corpus.prism()
    assert (clique_number(p), chromatic_number(p)[0]) == (2, 3)
    t = corpus.fixture("triangle")
    assert (clique_number(t), chromatic_number(t)[0]) == (3, 3)
    assert has_triangle(t) and not has_triangle(p)


def test_solver_caps():
    g = corpus.cycle(8)
    with pytest.raises(ResourceError) as info:
        chromatic_number(g, max_vertices=5)
    assert info.value.cap == 5
    with pytest.raises(ResourceError):
        simple_cycles(g, max_vertices=7)


def test_coloring_with_extra_colors():
    g = corpus.complete_bipartite(2, 3)
    for k in range(2, 6):
        col = coloring_with(g, k)
        assert is_proper(g, col)
        assert all(col.classes(g))
    with pytest.raises(InputError):
        coloring_with(g, 1)
    with pytest.raises(InputError):
        coloring_with(g, 6)


def test_improper_coloring_detected():
    g = corpus.path(3)
    assert not is_proper(g, Coloring({"p0": 0, "p1": 0, "p2": 1}, 2))
    assert not is_proper(g, Coloring({"p0": 0, "p1": 1}, 2))


def test_components_and_forests():
    g = Graph.from_edges([("a", "b"), ("c", "d"), ("d", "e")], ["e", "a", "b", "c", "d"])
    assert connected_components(g) == [("e", "c", "d"), ("a", "b")]
    assert is_forest(g)
    assert not is_forest(corpus.pentagon())
    assert is_independent(corpus.pentagon(), ["a", "c"])
    assert not is_independent(corpus.pentagon(), ["a", "b"])


def test_cycles_of_small_graphs():
    assert simple_cycles(corpus.pentagon()) == [("a", "b", "c", "d", "e")]
    assert len(simple_cycles(corpus.complete(4))) == 7
    assert simple_cycles(corpus.path(5)) == []
    p = corpus.prism()
    assert len(simple_cycles(p)) == len(list(nx.simple_cycles(to_nx(p))))


def test_shapes():
    assert str(classify_shape(corpus.complete_bipartite(2, 3))) == "complete_bipartite(2,3)"
    star = classify_shape(corpus.star(4))
    assert star.kind == "complete_bipartite" and star.is_tree and star.parts == (1, 4)
    edge = classify_shape(corpus.path(2))
    assert edge.parts == (1, 1) and edge.is_tree
    assert classify_shape(corpus.path(5)).kind == "tree"
    assert classify_shape(corpus.pentagon()).kind == "other"
    assert classify_shape(corpus.edgeless(2)).kind == "other"
    assert classify_shape(corpus.edgeless(1)).kind == "tree"


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_clique_matches_networkx(g):
    clq = max_clique(g)
    assert all(g.adjacent(u, v) for u, v in combinations(clq, 2))
    best = max(len(c) for c in nx.find_cliques(to_nx(g)))
    assert len(clq) == best


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_chromatic_matches_brute_force(g):
    k, col = chromatic_number(g)
    assert k == brute_chromatic(g)
    assert is_proper(g, col) and col.color_count == k
    assert clique_number(g) <= k


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_cycles_match_networkx(g):
    ours = simple_cycles(g)
    assert len(set(ours)) == len(ours)
    assert len(ours) == len(list(nx.simple_cycles(to_nx(g))))
    assert is_forest(g) == (ours == [])


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_components_match_networkx(g):
    ours = {frozenset(c) for c in connected_components(g)}
    assert ours == {frozenset(c) for c in nx.connected_components(to_nx(g))}
