"""Shortlex normal forms in right-angled Artin groups.

Letters are ``(vertex, sign)`` pairs.  Signed letters are totally ordered by
``v1 < v1^-1 < v2 < v2^-1 < ...`` following the graph's vertex order, and a
:class:`TraceWord` always holds the shortlex-least geodesic representative of
its element.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, NamedTuple

from .errors import InputError, ResourceError
from .graph import Graph

BRUTE_FORCE_BUDGET = 12


class Letter(NamedTuple):
    vertex: str
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.vertex, -self.sign)

    def __str__(self):
        return self.vertex if self.sign > 0 else f"{self.vertex}^-1"


def letter_key(g: Graph, x: Letter) -> int:
    return 2 * g.index(x.vertex) + (0 if x.sign > 0 else 1)


def commute(g: Graph, x: Letter, y: Letter) -> bool:
    """Distinct generators that span an edge commute; nothing else does."""
    return x.vertex != y.vertex and g.adjacent(x.vertex, y.vertex)


def as_letters(g: Graph, raw) -> tuple:
    """Coerce ``raw`` (text, TraceWord, or iterable of pairs) to letters."""
    if isinstance(raw, str):
        return parse_word(g, raw)
    if isinstance(raw, TraceWord):
        return raw.letters
    out = []
    for item in raw:
        v, s = item
        g.index(v)
        if s not in (1, -1):
            raise InputError(f"letter sign must be +1 or -1, got {s!r}")
        out.append(Letter(v, s))
    return tuple(out)


def parse_word(g: Graph, text: str) -> tuple:
    """Parse whitespace-separated ``a`` / ``a^-1`` tokens."""
    out = []
    for tok in text.split():
        if tok.endswith("^-1"):
            v, s = tok[:-3], -1
        elif tok.endswith("^1"):
            v, s = tok[:-2], 1
        else:
            v, s = tok, 1
        if not v or "^" in v:
            raise InputError(f"bad word token {tok!r}")
        if v not in g:
            raise InputError(f"unknown vertex {v!r} in word")
        out.append(Letter(v, s))
    return tuple(out)


def format_letters(letters: Iterable) -> str:
    s = " ".join(str(Letter(*x)) for x in letters)
    return s or "ε"


class TraceWord:
    """An element of the RAAG on ``graph`` in shortlex normal form.

    Build these with :func:`normalize`; the constructor trusts its input.
    """

    __slots__ = ("letters", "graph", "_hash")

    def __init__(self, letters: tuple, graph: Graph):
        self.letters = letters
        self.graph = graph
        self._hash = hash(letters)

    def __eq__(self, other):
        if not isinstance(other, TraceWord):
            return NotImplemented
        return self.letters == other.letters and (
            self.graph is other.graph or self.graph == other.graph)

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __str__(self):
        return format_letters(self.letters)

    def __repr__(self):
        return f"TraceWord({str(self)!r})"

    def __mul__(self, other):
        return multiply(self, other)

    def inverse(self) -> "TraceWord":
        return invert(self)


def identity(g: Graph) -> TraceWord:
    return TraceWord((), g)


def _reduce(g: Graph, letters) -> list:
    # Each incoming letter slides left past the letters it commutes with and
    # cancels the first inverse it meets; anything else blocks it.
    adj = g._adj
    out = []
    for x in letters:
        near = adj[x.vertex]
        i = len(out) - 1
        while i >= 0:
            y = out[i]
            if y.vertex == x.vertex:
                break
            if y.vertex not in near:
                i = -1
                break
            i -= 1
        if i >= 0 and out[i].sign == -x.sign:
            del out[i]
        else:
            out.append(x)
    return out


def _straighten(g: Graph, letters: list) -> tuple:
    # Lexicographically least linearisation of the dependence order: a heap
    # of letters whose blockers (earlier, non-commuting letters) are all out.
    # Two available letters never share a vertex, so keys never tie.
    n = len(letters)
    if n < 2:
        return tuple(letters)
    adj, pos = g._adj, g._pos
    keys = [2 * pos[x.vertex] + (x.sign < 0) for x in letters]
    blockers = [0] * n
    after = [[] for _ in range(n)]
    for j in range(n):
        near = adj[letters[j].vertex]
        for i in range(j):
            if letters[i].vertex not in near:
                blockers[j] += 1
                after[i].append(j)
    ready = [(keys[j], j) for j in range(n) if not blockers[j]]
    heapq.heapify(ready)
    out = []
    while ready:
        _, i = heapq.heappop(ready)
        out.append(letters[i])
        for j in after[i]:
            blockers[j] -= 1
            if not blockers[j]:
                heapq.heappush(ready, (keys[j], j))
    return tuple(out)


def _normal(g: Graph, letters) -> TraceWord:
    # For letters already known to be valid over ``g``.
    return TraceWord(_straighten(g, _reduce(g, letters)), g)


def normalize(g: Graph, raw) -> TraceWord:
    return _normal(g, as_letters(g, raw))


def word(g: Graph, text: str) -> TraceWord:
    return normalize(g, text)


def _ambient(u: TraceWord, v: TraceWord) -> Graph:
    if u.graph is not v.graph and u.graph != v.graph:
        raise InputError("words live over different graphs")
    return u.graph


def multiply(u: TraceWord, v: TraceWord) -> TraceWord:
    g = _ambient(u, v)
    if not v.letters:
        return u
    if not u.letters:
        return v
    return _normal(g, u.letters + v.letters)


def invert(u: TraceWord) -> TraceWord:
    return _normal(u.graph, tuple(x.inverse() for x in reversed(u.letters)))


def initial_letters(u: TraceWord) -> frozenset:
    """Letters that begin at least one geodesic representative of ``u``."""
    g = u.graph
    ls = u.letters
    return frozenset(x for i, x in enumerate(ls)
                     if all(commute(g, y, x) for y in ls[:i]))


def all_letters_adjacent_to(u: TraceWord, v) -> bool:
    g = u.graph
    g.index(v)
    return all(g.adjacent(x.vertex, v) for x in u.letters)


# -- independent oracles ------------------------------------------------------

def geodesic_representatives(u: TraceWord, limit: int = 100_000) -> set:
    """All geodesic words for ``u``: the closure of its normal form under
    swaps of adjacent commuting letters."""
    g = u.graph
    start = u.letters
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            if commute(g, w[i], w[i + 1]):
                s = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if s not in seen:
                    if len(seen) >= limit:
                        raise ResourceError("too many geodesic representatives",
                                            cap=limit)
                    seen.add(s)
                    queue.append(s)
    return seen


def _reduces_to_identity(g: Graph, w: tuple) -> bool:
    # Explore the commutation class of w; as soon as some member exposes a
    # cancelling pair, delete it and restart from the shorter word.  Any
    # representative of the identity can still reach the empty word.
    while w:
        seen = {w}
        queue = deque([w])
        shorter = None
        while queue and shorter is None:
            cur = queue.popleft()
            for i in range(len(cur) - 1):
                x, y = cur[i], cur[i + 1]
                if x.vertex == y.vertex and x.sign == -y.sign:
                    shorter = cur[:i] + cur[i + 2:]
                    break
                if commute(g, x, y):
                    s = cur[:i] + (y, x) + cur[i + 2:]
                    if s not in seen:
                        seen.add(s)
                        queue.append(s)
        if shorter is None:
            return False
        w = shorter
    return True


def brute_force_equal(g: Graph, w1, w2, budget: int = BRUTE_FORCE_BUDGET) -> bool:
    """Decide ``w1 == w2`` by raw rewriting of ``w1 w2^-1``.

    Uses only free cancellation and swaps of commuting neighbours, with no
    normal form involved; meant as a test oracle for :func:`normalize`.
    """
    a, b = as_letters(g, w1), as_letters(g, w2)
    if len(a) + len(b) > budget:
        raise ResourceError(f"brute-force word check capped at {budget} letters",
                            cap=budget)
    w = a + tuple(x.inverse() for x in reversed(b))
    return _reduces_to_identity(g, w)
