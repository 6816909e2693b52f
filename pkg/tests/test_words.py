import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from polyfree import corpus
from polyfree.checks import rewrite_randomly
from polyfree.errors import InputError, ResourceError
from polyfree.freegroup import free_reduce
from polyfree.graph import Graph
from polyfree.words import (Letter, brute_force_equal, geodesic_representatives,
                            identity, initial_letters, letter_key, multiply,
                            normalize, parse_word, word)

C5 = corpus.pentagon()
EXAMPLE = corpus.worked_example()
GRAPHS = [C5, EXAMPLE, corpus.path(4), corpus.complete(4), corpus.edgeless(3),
          corpus.complete_bipartite(2, 3)]


def letters_over(g, max_size=8):
    return st.lists(st.tuples(st.sampled_from(g.vertices), st.sampled_from((1, -1))),
                    max_size=max_size)


@st.composite
def graph_and_words(draw, count=1, max_size=8):
    g = draw(st.sampled_from(GRAPHS))
    return (g,) + tuple(draw(letters_over(g, max_size)) for _ in range(count))


def test_basic_normal_forms():
    assert str(word(C5, "b a")) == "a b"
    assert str(word(C5, "c a")) == "c a"
    assert str(word(C5, "a a^-1")) == "ε"
    assert len(word(C5, "a a^-1")) == 0
    assert str(word(C5, "a^1 b^-1 b")) == "a"
    assert initial_letters(word(C5, "c a")) == {Letter("c", 1)}
    assert initial_letters(word(C5, "b a")) == {Letter("a", 1), Letter("b", 1)}


def test_letter_order_follows_vertex_order():
    g = Graph.from_edges([("b", "a")])
    assert g.vertices == ("b", "a")
    assert str(word(g, "a b")) == "b a"
    assert str(word(g, "a^-1 b^-1")) == "b^-1 a^-1"
    assert letter_key(g, Letter("b", -1)) < letter_key(g, Letter("a", 1))


def test_cancellation_across_commuting_letters():
    # a commutes with b, so a b a^-1 collapses; a and c do not commute
    assert str(word(C5, "a b a^-1")) == "b"
    assert str(word(C5, "a c a^-1")) == "a c a^-1"
    assert str(word(C5, "e^-1 a b a^-1 e")) == "e^-1 b e"


def test_bad_tokens():
    with pytest.raises(InputError):
        parse_word(C5, "a^2")
    with pytest.raises(InputError):
        parse_word(C5, "z")
    with pytest.raises(InputError):
        parse_word(C5, "^-1")
    with pytest.raises(InputError):
        normalize(C5, [("a", 2)])


def test_words_over_different_graphs_do_not_mix():
    with pytest.raises(InputError):
        multiply(word(C5, "a"), word(EXAMPLE, "a"))


def test_brute_force_budget():
    w = "a b c d e a b"
    with pytest.raises(ResourceError):
        brute_force_equal(C5, w, w)


def test_edgeless_graph_is_free_reduction():
    g = corpus.edgeless(3)
    rng = random.Random(3)
    for _ in range(200):
        raw = [(rng.choice(g.vertices), rng.choice((1, -1))) for _ in range(rng.randint(0, 10))]
        free = free_reduce(raw)
        assert [tuple(x) for x in normalize(g, raw)] == list(free.letters)


def test_complete_graph_is_exponent_vector():
    g = corpus.complete(4)
    rng = random.Random(4)
    for _ in range(200):
        raw = [(rng.choice(g.vertices), rng.choice((1, -1))) for _ in range(rng.randint(0, 10))]
        exps = Counter()
        for v, s in raw:
            exps[v] += s
        expected = []
        for v in g.vertices:
            expected += [(v, 1 if exps[v] > 0 else -1)] * abs(exps[v])
        assert [tuple(x) for x in normalize(g, raw)] == expected


@settings(max_examples=150, deadline=None)
@given(graph_and_words())
def test_normalize_is_idempotent(gw):
    g, w = gw
    u = normalize(g, w)
    assert normalize(g, u) == u
    assert len(u) <= len(w)


@settings(max_examples=150, deadline=None)
@given(graph_and_words(count=3, max_size=5))
def test_multiplication_is_associative(gw):
    g, a, b, c = gw
    x, y, z = (normalize(g, w) for w in (a, b, c))
    assert (x * y) * z == x * (y * z)
    assert x * identity(g) == x == identity(g) * x
    assert x * x.inverse() == identity(g)


@settings(max_examples=150, deadline=None)
@given(graph_and_words(max_size=6))
def test_normal_form_is_shortlex_least_geodesic(gw):
    g, w = gw
    u = normalize(g, w)
    reps = geodesic_representatives(u)
    assert min(reps, key=lambda r: [letter_key(g, x) for x in r]) == u.letters
    firsts = {r[0] for r in reps if r}
    assert firsts == initial_letters(u)


@settings(max_examples=200, deadline=None)
@given(graph_and_words(count=2, max_size=6))
def test_agrees_with_rewriting_oracle(gw):
    g, a, b = gw
    assert (normalize(g, a) == normalize(g, b)) == brute_force_equal(g, a, b)


@settings(max_examples=200, deadline=None)
@given(graph_and_words(max_size=4), st.randoms(use_true_random=False))
def test_rewritten_words_are_equal(gw, rng):
    g, w = gw
    w = tuple(Letter(*x) for x in w)
    v = rewrite_randomly(rng, g, w, 6)
    assert normalize(g, w) == normalize(g, v)
    assert brute_force_equal(g, w, v)
