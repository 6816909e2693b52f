"""Finite simplicial graphs and the exact combinatorial searches run on them.

A :class:`Graph` remembers the order in which its vertices were given; that
order is the canonical total order used for every tie-break, witness and
rendering in the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import GraphParseError, InputError, ResourceError

CYCLE_CAP = 20
SOLVER_CAP = 25

_NAME = re.compile(r"^[!-~]+$")


def check_name(name: str) -> str:
    if not _NAME.match(name) or "^" in name or "#" in name or "," in name:
        raise InputError(f"invalid vertex name {name!r}")
    return name


@dataclass(frozen=True, eq=False)
class Graph:
    """A finite simple graph with an ordered vertex list.

    ``edges`` is a frozenset of 2-element frozensets.
    """

    vertices: tuple
    edges: frozenset
    _adj: dict = field(init=False, repr=False)
    _pos: dict = field(init=False, repr=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise InputError("duplicate vertex")
        adj = {v: set() for v in vertices}
        edges = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise InputError(f"loop or malformed edge {sorted(e)}")
            u, v = tuple(e)
            if u not in adj or v not in adj:
                raise InputError(f"edge {u}-{v} has an undeclared endpoint")
            adj[u].add(v)
            adj[v].add(u)
            edges.add(e)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(vertices)})

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable = ()) -> "Graph":
        """Build a graph; vertices are ordered by first mention."""
        order = list(dict.fromkeys(vertices))
        seen = set(order)
        pairs = []
        for u, v in edges:
            for w in (u, v):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
            pairs.append(frozenset((u, v)))
        return cls(tuple(order), frozenset(pairs))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._pos

    def __repr__(self):
        es = " ".join("-".join(self.sorted(e)) for e in self.sorted_edges())
        return f"Graph([{' '.join(self.vertices)}]; {es})"

    def index(self, v) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def sorted(self, vs: Iterable) -> tuple:
        """``vs`` in canonical vertex order."""
        return tuple(sorted(vs, key=self.index))

    def sorted_edges(self) -> list:
        return sorted((self.sorted(e) for e in self.edges),
                      key=lambda p: (self._pos[p[0]], self._pos[p[1]]))

    def neighbors(self, v) -> frozenset:
        self.index(v)
        return self._adj[v]

    def adjacent(self, u, v) -> bool:
        return v in self._adj.get(u, ())

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def masks(self) -> list:
        """Adjacency as integer bitmasks indexed by vertex position."""
        out = []
        for v in self.vertices:
            m = 0
            for w in self._adj[v]:
                m |= 1 << self._pos[w]
            out.append(m)
        return out


@dataclass(frozen=True)
class Coloring:
    """A vertex colouring; colours are ``0 .. color_count - 1``."""

    assignment: dict
    color_count: int

    def classes(self, g: Graph) -> list:
        """Colour classes, colour 0 first, members in vertex order."""
        out = [[] for _ in range(self.color_count)]
        for v in g.vertices:
            out[self.assignment[v]].append(v)
        return [tuple(c) for c in out]


def is_proper(g: Graph, coloring: Coloring) -> bool:
    a = coloring.assignment
    if set(a) != set(g.vertices):
        return False
    if any(not 0 <= c < coloring.color_count for c in a.values()):
        return False
    return all(a[u] != a[v] for u, v in map(tuple, g.edges))


# -- text format ---------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the line-oriented ``vertex``/``edge`` format."""
    order = []
    declared = set()
    known = set()
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        try:
            args = [check_name(a) for a in args]
        except InputError as exc:
            raise GraphParseError(str(exc), lineno) from None
        if kind == "vertex":
            if len(args) != 1:
                raise GraphParseError("expected 'vertex NAME'", lineno)
            (v,) = args
            if v in declared:
                raise GraphParseError(f"vertex {v} declared twice", lineno)
            declared.add(v)
            if v not in known:
                known.add(v)
                order.append(v)
        elif kind == "edge":
            if len(args) != 2:
                raise GraphParseError("expected 'edge NAME NAME'", lineno)
            u, v = args
            if u == v:
                raise GraphParseError(f"loop at {u}", lineno)
            e = frozenset((u, v))
            if e in edges:
                raise GraphParseError(f"duplicate edge {u} {v}", lineno)
            edges.add(e)
            for w in (u, v):
                if w not in known:
                    known.add(w)
                    order.append(w)
        else:
            raise GraphParseError(f"unknown directive {kind!r}", lineno)
    if not order:
        raise GraphParseError("graph has no vertices")
    return Graph(tuple(order), frozenset(edges))


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: Graph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# -- basic structure -----------------------------------------------------

def neighbors(g: Graph, v) -> frozenset:
    return g.neighbors(v)


def induced_subgraph(g: Graph, s: Iterable) -> Graph:
    s = set(s)
    for v in s:
        g.index(v)
    vs = tuple(v for v in g.vertices if v in s)
    return Graph(vs, frozenset(e for e in g.edges if e <= s))


def connected_components(g: Graph) -> list:
    """Components as vertex tuples, ordered by their least vertex."""
    seen = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        seen.add(v)
        stack, comp = [v], [v]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(g.sorted(comp))
    return comps


def is_forest(g: Graph) -> bool:
    return g.edge_count == len(g) - len(connected_components(g))


def is_independent(g: Graph, s: Iterable) -> bool:
    s = list(s)
    for v in s:
        g.index(v)
    return not any(g.adjacent(u, v) for i, u in enumerate(s) for v in s[i + 1:])


def has_triangle(g: Graph) -> bool:
    return any(g.neighbors(u) & g.neighbors(v) for u, v in map(tuple, g.edges))


def simple_cycles(g: Graph, max_vertices: int = CYCLE_CAP) -> list:
    """Every simple cycle once, up to rotation and reflection.

    A cycle is reported starting at its least vertex and heading towards the
    smaller of that vertex's two cycle-neighbours.
    """
    if len(g) > max_vertices:
        raise ResourceError(
            f"cycle enumeration capped at {max_vertices} vertices "
            f"(graph has {len(g)})", cap=max_vertices)
    pos = g._pos
    out = []
    for s in g.vertices:
        si = pos[s]
        path = [s]
        on_path = {s}

        def extend(u):
            for w in g.sorted(g.neighbors(u)):
                if pos[w] < si:
                    continue
                if w == s:
                    if len(path) >= 3 and pos[path[1]] < pos[path[-1]]:
                        out.append(tuple(path))
                elif w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    return out


# -- exact solvers -------------------------------------------------------

def _check_cap(g, cap, what):
    if not len(g):
        raise InputError(f"{what} of an empty graph")
    if len(g) > cap:
        raise ResourceError(f"{what} solver capped at {cap} vertices "
                            f"(graph has {len(g)})", cap=cap)


def max_clique(g: Graph, max_vertices: int = SOLVER_CAP) -> tuple:
    """A maximum clique, via Bron-Kerbosch with Tomita pivoting on bitmasks."""
    _check_cap(g, max_vertices, "clique")
    adj = g.masks()
    best = [0]

    def bits(m):
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def expand(r, p, x):
        if not p and not x:
            if bin(r).count("1") > bin(best[0]).count("1"):
                best[0] = r
            return
        if bin(r).count("1") + bin(p).count("1") <= bin(best[0]).count("1"):
            return
        pivot = max(bits(p | x), key=lambda u: bin(p & adj[u]).count("1"))
        for v in list(bits(p & ~adj[pivot])):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, (1 << len(g)) - 1, 0)
    return tuple(v for i, v in enumerate(g.vertices) if best[0] >> i & 1)


def clique_number(g: Graph, max_vertices: int = SOLVER_CAP) -> int:
    return len(max_clique(g, max_vertices))


def _k_coloring(adj, n, k):
    colors = [-1] * n
    # forbidden[v] is a bitmask of colours already used by neighbours of v
    forbidden = [0] * n

    def pick():
        best, best_sat = -1, -1
        for v in range(n):
            if colors[v] < 0:
                sat = bin(forbidden[v]).count("1")
                if sat > best_sat:
                    best, best_sat = v, sat
        return best

    def solve(done, used):
        if done == n:
            return True
        v = pick()
        for c in range(min(used + 1, k)):
            if forbidden[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            for w in range(n):
                if adj[v] >> w & 1 and colors[w] < 0 and not forbidden[w] >> c & 1:
                    forbidden[w] |= 1 << c
                    touched.append(w)
            if solve(done + 1, max(used, c + 1)):
                return True
            for w in touched:
                forbidden[w] &= ~(1 << c)
            colors[v] = -1
        return False

    return list(colors) if solve(0, 0) else None


def chromatic_number(g: Graph, max_vertices: int = SOLVER_CAP) -> tuple:
    """Exact chromatic number and a witness :class:`Coloring`.

    Tries k = clq, clq + 1, ... with DSATUR-ordered backtracking (ties broken
    by vertex order, smallest colour first), so the witness is deterministic.
    """
    _check_cap(g, max_vertices, "chromatic")
    adj = g.masks()
    k = clique_number(g, max_vertices)
    while True:
        colors = _k_coloring(adj, len(g), k)
        if colors is not None:
            return k, Coloring(dict(zip(g.vertices, colors)), k)
        k += 1


def coloring_with(g: Graph, k: int, max_vertices: int = SOLVER_CAP) -> Coloring:
    """A proper colouring that uses exactly ``k`` colours.

    Starts from the chromatic witness and splits off the last vertex of the
    largest class into a fresh colour until ``k`` colours are in use.
    """
    chi, col = chromatic_number(g, max_vertices)
    if not chi <= k <= len(g):
        raise InputError(f"no proper colouring with exactly {k} colours "
                         f"(need {chi} <= k <= {len(g)})")
    assignment = dict(col.assignment)
    for fresh in range(chi, k):
        classes = Coloring(assignment, fresh).classes(g)
        biggest = max(range(fresh), key=lambda c: (len(classes[c]), -c))
        assignment[classes[biggest][-1]] = fresh
    return Coloring(assignment, k)


@dataclass(frozen=True)
class Shape:
    """Result of :func:`classify_shape`.

    ``kind`` is ``"complete_bipartite"``, ``"tree"`` or ``"other"``.  A star
    is both a tree and complete bipartite; it is reported as complete
    bipartite with ``is_tree`` set.
    """

    kind: str
    parts: tuple = ()
    is_tree: bool = False

    def __str__(self):
        if self.kind == "complete_bipartite":
            return f"complete_bipartite({self.parts[0]},{self.parts[1]})"
        return self.kind


def bipartition(g: Graph):
    """Two colour classes of a connected bipartite graph, else None."""
    if len(connected_components(g)) != 1:
        return None
    side = {g.vertices[0]: 0}
    stack = [g.vertices[0]]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in side:
                side[w] = 1 - side[u]
                stack.append(w)
            elif side[w] == side[u]:
                return None
    return tuple(g.sorted(v for v in side if side[v] == s) for s in (0, 1))


def classify_shape(g: Graph) -> Shape:
    if not len(g):
        raise InputError("empty graph")
    tree = len(connected_components(g)) == 1 and is_forest(g)
    parts = bipartition(g) if g.edges else None
    if parts is not None and g.edge_count == len(parts[0]) * len(parts[1]):
        k, q = sorted((len(parts[0]), len(parts[1])))
        return Shape("complete_bipartite", (k, q), tree)
    if tree:
        return Shape("tree", (), True)
    return Shape("other")
