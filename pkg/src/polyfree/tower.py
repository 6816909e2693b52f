"""Free-by-RAAG splittings over a colour class, and the towers they stack into.

Peeling an independent set ``D`` off ``Γ`` leaves the living graph ``Γ_L`` on
``L = V - D``.  The kernel of ``AΓ -> AΓ_L`` (kill ``D``) is free on symbols
``d_t``, one for each ``d ∈ D`` and each ``t ∈ AΓ_L`` none of whose geodesics
starts with a neighbour of ``d`` (either sign).  A letter ``a`` of ``Γ_L``
sends ``d_t`` to ``d_{ta}`` when that is again such a symbol and fixes it
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, ResourceError
from .freegroup import FreeWord, KernelSymbol
from .graph import (SOLVER_CAP, Coloring, Graph, chromatic_number,
                    clique_number, induced_subgraph, is_independent, is_proper)
from .semidirect import CheckResult, SemidirectProduct
from .words import (Letter, TraceWord, _normal, all_letters_adjacent_to,
                    identity, initial_letters, normalize)

DEFAULT_DEPTH = 4


class ColorClassSplitting(SemidirectProduct):
    """``AΓ ≅ F ⋊ AΓ_L`` for an independent vertex set ``dead``."""

    def __init__(self, g: Graph, dead):
        dead = set(dead)
        for v in dead:
            g.index(v)
        if not is_independent(g, dead):
            raise InputError("peeled vertex set is not independent")
        self.graph = g
        self.dead = g.sorted(dead)
        self.living = tuple(v for v in g.vertices if v not in dead)
        self.living_graph = induced_subgraph(g, self.living)
        self._blocked = {d: g.neighbors(d) for d in self.dead}
        self._steps = {}
        self._starts = {}

    def quotient_identity(self) -> TraceWord:
        return identity(self.living_graph)

    def quotient_word(self, raw) -> TraceWord:
        return normalize(self.living_graph, raw)

    def _check_dead(self, d):
        if d not in self._blocked:
            raise InputError(f"{d!r} is not in the peeled set {list(self.dead)}")

    def _initial_vertices(self, t: TraceWord) -> frozenset:
        out = self._starts.get(t)
        if out is None:
            out = self._starts[t] = frozenset(x.vertex for x in initial_letters(t))
        return out

    def _step(self, t: TraceWord, a: Letter) -> TraceWord:
        key = (t, a)
        out = self._steps.get(key)
        if out is None:
            out = self._steps[key] = _normal(self.living_graph, t.letters + (a,))
        return out

    def is_kernel_symbol(self, d, t: TraceWord) -> bool:
        """Whether ``d_t`` is a free generator of the kernel."""
        self._check_dead(d)
        return not (self._initial_vertices(t) & self._blocked[d])

    def symbol(self, d, t=None) -> KernelSymbol:
        t = self.quotient_identity() if t is None else self.quotient_word(t)
        if not self.is_kernel_symbol(d, t):
            raise InputError(f"{d}_{{{t}}} is not a kernel generator")
        return KernelSymbol(d, t)

    def act_letter(self, a, s: KernelSymbol) -> KernelSymbol:
        a = Letter(*a)
        if a.vertex not in self.living_graph or a.sign not in (1, -1):
            raise InputError(f"{a} is not a letter of the living graph")
        ta = self._step(s.index, a)
        return KernelSymbol(s.base, ta) if self.is_kernel_symbol(s.base, ta) else s

    def act_symbol(self, u, s: KernelSymbol) -> KernelSymbol:
        for a in u:
            s = self.act_letter(a, s)
        return s

    def act(self, u, w: FreeWord) -> FreeWord:
        """Action of the quotient word ``u`` (letters applied left to right)."""
        u = tuple(u)
        if not u:
            return w
        return FreeWord((self.act_symbol(u, s), e) for s, e in w)

    def generator_image(self, v):
        if v in self._blocked:
            return self.element(FreeWord([(KernelSymbol(v, self.quotient_identity()), 1)]))
        return self.element(quotient=normalize(self.living_graph, [(v, 1)]))

    # -- enumeration and checks ------------------------------------------

    def ball(self, depth: int) -> list:
        """Normal forms of ``AΓ_L`` of length at most ``depth``, shortlex sorted."""
        letters = [Letter(v, s) for v in self.living for s in (1, -1)]
        layer = [self.quotient_identity()]
        out = list(layer)
        seen = {layer[0].letters}
        for n in range(depth):
            nxt = []
            for t in layer:
                for a in letters:
                    ta = self._step(t, a)
                    if len(ta) == n + 1 and ta.letters not in seen:
                        seen.add(ta.letters)
                        nxt.append(ta)
            out.extend(nxt)
            layer = nxt
        return out

    def symbols(self, depth: int = DEFAULT_DEPTH) -> list:
        ball = self.ball(depth)
        return [KernelSymbol(d, t) for d in self.dead for t in ball
                if self.is_kernel_symbol(d, t)]

    def inverse_check(self, depth: int = DEFAULT_DEPTH) -> CheckResult:
        result = CheckResult("inverse pairs")
        for s in self.symbols(depth):
            for v in self.living:
                a, b = Letter(v, 1), Letter(v, -1)
                result.record(self.act_letter(b, self.act_letter(a, s)) == s,
                              lambda: f"{v}^-1 after {v} moves {s}")
                result.record(self.act_letter(a, self.act_letter(b, s)) == s,
                              lambda: f"{v} after {v}^-1 moves {s}")
        return result

    def commutation_check(self, depth: int = DEFAULT_DEPTH) -> CheckResult:
        result = CheckResult("commutation")
        edges = self.living_graph.sorted_edges()
        if not edges:
            return result
        for s in self.symbols(depth):
            for u, v in edges:
                for e in (1, -1):
                    for f in (1, -1):
                        a, b = Letter(u, e), Letter(v, f)
                        result.record(self.act_symbol((a, b), s) == self.act_symbol((b, a), s),
                                      lambda: f"{a},{b} disagree on {s}")
        return result

    def fixed_point_check(self, depth: int = DEFAULT_DEPTH) -> CheckResult:
        """A letter fixes ``d_t`` exactly when it is adjacent to ``d`` and to
        every letter of ``t``."""
        result = CheckResult("fixed-point criterion")
        g = self.graph
        for s in self.symbols(depth):
            for v in self.living:
                for e in (1, -1):
                    a = Letter(v, e)
                    leaves = not self.is_kernel_symbol(s.base, self._step(s.index, a))
                    predicted = g.adjacent(v, s.base) and all_letters_adjacent_to(s.index, v)
                    result.record(leaves == predicted, lambda: f"{a} on {s}")
        return result


@lru_cache(maxsize=256)
def splitting(g: Graph, dead: frozenset) -> ColorClassSplitting:
    return ColorClassSplitting(g, dead)


# -- towers ----------------------------------------------------------------

@dataclass(frozen=True)
class TowerLevel:
    color: int
    dead: tuple
    graph: Graph
    living: Graph

    @property
    def is_free_top(self) -> bool:
        return not self.living.vertices

    def kernel_schema(self) -> str:
        ds = ", ".join(self.dead)
        if self.is_free_top:
            return f"free on {{{ds}}}"
        return (f"free on z_t for z in {{{ds}}} and t in A({' '.join(self.living.vertices)}) "
                f"with no geodesic of t starting with a neighbour of z")

    def action_rule(self) -> str:
        if self.is_free_top:
            return "none (top of the tower)"
        return "letter u: z_t -> z_{tu} if z_{tu} is a kernel generator, else z_t"

    def to_dict(self) -> dict:
        return {
            "color": self.color,
            "dead": list(self.dead),
            "graph_vertices": list(self.graph.vertices),
            "living_vertices": list(self.living.vertices),
            "living_edges": [list(e) for e in self.living.sorted_edges()],
            "kernel": self.kernel_schema(),
            "action": self.action_rule(),
        }


@dataclass(frozen=True)
class TowerDescription:
    """Level ``i`` splits ``A(graph_i) = F_i ⋊ A(living_i)``; the last level
    is the free group on the final colour class.  ``F_0`` is the bottom of
    the normal series."""

    levels: tuple
    coloring: Coloring

    def __len__(self):
        return len(self.levels)

    def to_dict(self) -> dict:
        return {"length": len(self), "levels": [lv.to_dict() for lv in self.levels]}

    def render(self) -> str:
        lines = [f"poly-free tower of length {len(self)}"]
        for i, lv in enumerate(self.levels):
            lines.append(f"  level {i + 1}: colour {lv.color}, D = {{{', '.join(lv.dead)}}}")
            lines.append(f"    kernel: {lv.kernel_schema()}")
            lines.append(f"    action: {lv.action_rule()}")
        return "\n".join(lines)


def build_tower(g: Graph, coloring: Coloring) -> TowerDescription:
    if not is_proper(g, coloring):
        raise InputError("colouring is not proper")
    classes = coloring.classes(g)
    if not all(classes):
        raise InputError("colouring leaves a colour unused")
    levels = []
    current = g
    for color, dead in enumerate(classes):
        living = induced_subgraph(current, [v for v in current.vertices if v not in dead])
        levels.append(TowerLevel(color, dead, current, living))
        current = living
    return TowerDescription(tuple(levels), coloring)


@dataclass(frozen=True)
class PflBounds:
    lo: int
    hi: int
    reasons: tuple

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def __str__(self):
        return f"exact {self.lo}" if self.exact else f"[{self.lo}, {self.hi}]"

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "exact": self.exact,
                "reasons": list(self.reasons)}


def pfl_bounds(g: Graph, max_vertices: int = SOLVER_CAP) -> PflBounds:
    """Bounds on the poly-free length of ``AΓ``."""
    from .breakable import find_breaking_set

    if not g.edges:
        return PflBounds(1, 1, ("edgeless graph: the group is free",))
    lo = clique_number(g, max_vertices)
    hi, _ = chromatic_number(g, max_vertices)
    reasons = [f"clique number {lo} bounds the length below",
               f"chromatic number {hi} bounds the length above"]
    try:
        cert = find_breaking_set(g, max_vertices=max_vertices)
    except ResourceError as exc:
        reasons.append(f"breaking-set search skipped: {exc}")
        return PflBounds(lo, hi, tuple(reasons))
    if cert is not None:
        reasons.append(f"D = {{{', '.join(cert.dead)}}} breaks every cycle twice: length 2")
        return PflBounds(2, 2, tuple(reasons))
    if lo < 3:
        lo = 3
        reasons.append("no set breaks every cycle twice: length at least 3")
    return PflBounds(lo, hi, tuple(reasons))
