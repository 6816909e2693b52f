"""Named graphs and fixed, seeded graph collections used by tests and demos."""

from __future__ import annotations

import random
from importlib import resources
from itertools import combinations

from .graph import Graph, parse_graph


def fixture_path(name: str):
    """Path of a bundled ``.graph`` file, e.g. ``fixture_path("prism")``."""
    return resources.files("polyfree") / "data" / f"{name}.graph"


def fixture(name: str) -> Graph:
    return parse_graph(fixture_path(name).read_text(encoding="utf-8"))


def pentagon() -> Graph:
    return fixture("pentagon")


def prism() -> Graph:
    return fixture("prism")


def worked_example() -> Graph:
    return fixture("example6")


def cycle(n: int) -> Graph:
    vs = [f"c{i}" for i in range(n)]
    return Graph.from_edges([(vs[i], vs[(i + 1) % n]) for i in range(n)], vs)


def path(n: int) -> Graph:
    vs = [f"p{i}" for i in range(n)]
    return Graph.from_edges(zip(vs, vs[1:]), vs)


def star(leaves: int) -> Graph:
    return Graph.from_edges([("hub", f"l{i}") for i in range(leaves)], ["hub"])


def complete(n: int) -> Graph:
    vs = [f"k{i}" for i in range(n)]
    return Graph.from_edges(combinations(vs, 2), vs)


def complete_bipartite(k: int, q: int) -> Graph:
    us = [f"u{i}" for i in range(k)]
    ws = [f"w{j}" for j in range(q)]
    return Graph.from_edges([(u, w) for u in us for w in ws], us + ws)


def edgeless(n: int) -> Graph:
    return Graph(tuple(f"v{i}" for i in range(n)), frozenset())


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    vs = [chr(ord("a") + i) if n <= 26 else f"v{i}" for i in range(n)]
    return Graph.from_edges([e for e in combinations(vs, 2) if rng.random() < p], vs)


def random_tree(rng: random.Random, n: int) -> Graph:
    vs = [f"t{i}" for i in range(n)]
    return Graph.from_edges([(vs[i], vs[rng.randrange(i)]) for i in range(1, n)], vs)


def small_corpus() -> list:
    """Fifty graphs on at most five vertices: named shapes, then seeded
    random graphs."""
    named = [
        edgeless(1), edgeless(3), path(2), path(3), path(4), path(5),
        star(3), star(4), cycle(4), pentagon(), complete(3), complete(4),
        complete(5), complete_bipartite(2, 2), complete_bipartite(2, 3),
        complete_bipartite(1, 4),
        Graph.from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]),
        Graph.from_edges([("a", "b"), ("c", "d")], ["a", "b", "c", "d", "e"]),
    ]
    rng = random.Random(20240501)
    out = list(named)
    while len(out) < 50:
        n = rng.randint(2, 5)
        out.append(random_graph(rng, n, rng.choice([0.3, 0.5, 0.7])))
    return out


def medium_corpus() -> list:
    """Graphs of up to twelve vertices for the breaking-set oracle."""
    grid = Graph.from_edges(
        [((f"g{i}{j}"), f"g{i}{j + 1}") for i in range(3) for j in range(2)]
        + [((f"g{i}{j}"), f"g{i + 1}{j}") for i in range(2) for j in range(3)])
    petersen_outer = [f"o{i}" for i in range(5)]
    petersen_inner = [f"i{i}" for i in range(5)]
    petersen = Graph.from_edges(
        [(petersen_outer[i], petersen_outer[(i + 1) % 5]) for i in range(5)]
        + [(petersen_inner[i], petersen_inner[(i + 2) % 5]) for i in range(5)]
        + [(petersen_outer[i], petersen_inner[i]) for i in range(5)])
    out = [pentagon(), prism(), worked_example(), cycle(6), cycle(8),
           complete_bipartite(3, 3), complete_bipartite(2, 4), grid, petersen,
           path(7), star(6)]
    rng = random.Random(7)
    for n in (6, 7, 8, 9, 10, 11, 12, 12):
        out.append(random_graph(rng, n, 2.2 / n))
    for n in (9, 12):
        out.append(random_tree(rng, n))
    return out
