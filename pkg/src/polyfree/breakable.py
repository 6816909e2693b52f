"""Breaking sets and the free-by-free splitting they produce.

A *breaking set* is an independent vertex set ``D`` such that every cycle
passes through ``D`` at least twice.  Equivalently ``Γ - D`` is a forest and
no vertex of ``D`` has two neighbours in the same tree.  Given one,
``AΓ ≅ F ⋊ F(C)`` where ``C`` holds one representative per tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BreakingSetRefused, InputError, ResourceError
from .freegroup import (FreeWord, KernelSymbol, SubgroupPresentation,
                        free_reduce, subgroup_index)
from .graph import (CYCLE_CAP, Graph, Shape, classify_shape,
                    connected_components, has_triangle, induced_subgraph,
                    simple_cycles)
from .semidirect import CheckResult, SemidirectProduct
from .words import Letter

DEFAULT_DEPTH = 4


@dataclass(frozen=True)
class BreakingCertificate:
    """``dead`` is the breaking set; ``components`` the trees of ``Γ - D``.

    ``rep`` maps each living vertex to its tree's representative (the tree's
    first vertex) and ``paths[y]`` lists the tree path from ``y`` towards its
    representative, representative excluded: ``(y, y^(n-1), ..., y^(1))``.
    """

    graph: Graph
    dead: tuple
    components: tuple
    rep: dict
    paths: dict

    @property
    def representatives(self) -> tuple:
        return tuple(comp[0] for comp in self.components)

    def to_dict(self) -> dict:
        return {
            "D": list(self.dead),
            "components": [list(c) for c in self.components],
            "representatives": list(self.representatives),
        }


def _tree_paths(g: Graph, comp: tuple) -> dict:
    root = comp[0]
    parent = {root: None}
    order = [root]
    for u in order:
        for w in g.sorted(g.neighbors(u)):
            if w not in parent:
                parent[w] = u
                order.append(w)
    paths = {}
    for y in comp:
        p, cur = [], y
        while cur != root:
            p.append(cur)
            cur = parent[cur]
        paths[y] = tuple(p)
    return paths


def certify_breaking_set(g: Graph, dead) -> BreakingCertificate:
    """Certificate for ``dead``, or :class:`BreakingSetRefused` naming the
    reason."""
    dead = set(dead)
    for v in dead:
        g.index(v)
    if not g.edges:
        raise BreakingSetRefused("the property needs at least one edge")
    for u, v in g.sorted_edges():
        if u in dead and v in dead:
            raise BreakingSetRefused(f"D is not independent: edge {u}-{v}", (u, v))
    living = induced_subgraph(g, [v for v in g.vertices if v not in dead])
    comps = connected_components(living)
    where = {}
    for i, comp in enumerate(comps):
        for y in comp:
            where[y] = i
    if living.edge_count != len(living) - len(comps):
        for comp in comps:
            sub = induced_subgraph(living, comp)
            if sub.edge_count >= len(comp):
                raise BreakingSetRefused(
                    f"V - D is not a forest: cycle through {{{', '.join(comp)}}}", comp)
    dead = g.sorted(dead)
    for d in dead:
        hit = {}
        for y in g.sorted(g.neighbors(d)):
            i = where[y]
            if i in hit:
                raise BreakingSetRefused(
                    f"{d} has two neighbours {hit[i]} and {y} in one tree of V - D",
                    (d, hit[i], y))
            hit[i] = y
    rep, paths = {}, {}
    for comp in comps:
        for y in comp:
            rep[y] = comp[0]
        paths.update(_tree_paths(living, comp))
    return BreakingCertificate(g, dead, tuple(comps), rep, paths)


def is_breaking_set(g: Graph, dead) -> bool:
    try:
        certify_breaking_set(g, dead)
    except BreakingSetRefused:
        return False
    return True


def breaks_cycles_twice(g: Graph, dead, cycles=None) -> bool:
    """Cycle-enumeration form of the property (the test oracle)."""
    dead = set(dead)
    if not g.edges:
        return False
    if any(g.adjacent(u, v) for u in dead for v in dead):
        return False
    if cycles is None:
        cycles = simple_cycles(g)
    return all(len(dead.intersection(c)) >= 2 for c in cycles)


def independent_sets(g: Graph):
    """All independent sets, in lexicographic order of vertex positions."""
    adj = g.masks()
    n = len(g)

    def grow(chosen, blocked, start):
        yield chosen
        for j in range(start, n):
            if not blocked >> j & 1:
                yield from grow(chosen + (j,), blocked | adj[j] | 1 << j, j + 1)

    for idx in grow((), 0, 0):
        yield tuple(g.vertices[i] for i in idx)


def find_breaking_set(g: Graph, max_vertices: int = CYCLE_CAP):
    """Lexicographically least breaking set, or ``None``.

    Depth-first over independent sets in lexicographic order.  Vertices
    already passed over are living for good, so a cycle among them, or a
    chosen vertex with two neighbours in one of their trees, prunes the
    branch.
    """
    if len(g) > max_vertices:
        raise ResourceError(f"breaking-set search capped at {max_vertices} vertices "
                            f"(graph has {len(g)})", cap=max_vertices)
    if not g.edges:
        return None
    n = len(g)
    vs = g.vertices
    adj = g.masks()

    def doomed(chosen, upto):
        # union-find over the settled living vertices 0..upto-1
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        chosen_set = set(chosen)
        settled = [i for i in range(upto) if i not in chosen_set]
        settled_mask = sum(1 << i for i in settled)
        for i in settled:
            m = adj[i] & settled_mask & ((1 << i) - 1)
            while m:
                low = m & -m
                j = low.bit_length() - 1
                m ^= low
                a, b = find(i), find(j)
                if a == b:
                    return True
                parent[a] = b
        for d in chosen:
            roots = set()
            m = adj[d] & settled_mask
            while m:
                low = m & -m
                r = find(low.bit_length() - 1)
                m ^= low
                if r in roots:
                    return True
                roots.add(r)
        return False

    def search(chosen, blocked, start):
        if doomed(chosen, start):
            return None
        if is_breaking_set(g, [vs[i] for i in chosen]):
            return chosen
        for j in range(start, n):
            if not blocked >> j & 1:
                found = search(chosen + (j,), blocked | adj[j] | 1 << j, j + 1)
                if found is not None:
                    return found
        return None

    found = search((), 0, 0)
    if found is None:
        return None
    return certify_breaking_set(g, [vs[i] for i in found])


# -- the free-by-free splitting ----------------------------------------------

def free_ball(alphabet, depth: int) -> list:
    """Reduced words of length at most ``depth``, in shortlex order."""
    letters = [(c, e) for c in alphabet for e in (1, -1)]
    layer = [FreeWord()]
    out = list(layer)
    for _ in range(depth):
        nxt = []
        for w in layer:
            for s, e in letters:
                if w.letters and w.letters[-1] == (s, -e):
                    continue
                nxt.append(FreeWord(w.letters + ((s, e),)))
        out.extend(nxt)
        layer = nxt
    return out


class Length2Splitting(SemidirectProduct):
    """``AΓ ≅ F ⋊ F(C)`` built from a breaking-set certificate.

    ``F`` is free on symbols ``z_t`` where ``z`` is a vertex of ``D`` or a
    non-representative living vertex, and ``t ∈ F(C)`` is reduced and does
    not start with a blocked letter: for ``d ∈ D`` the representatives of
    the neighbours of ``d``; for a living ``x`` its own representative.
    """

    def __init__(self, cert: BreakingCertificate, overrides=None):
        g = cert.graph
        self.graph = g
        self.cert = cert
        self.dead = cert.dead
        self.reps = cert.representatives
        self.rep = cert.rep
        self.paths = cert.paths
        self.others = tuple(v for v in g.vertices if v in cert.rep and v not in self.reps)
        self.neighbors = {d: g.neighbors(d) for d in self.dead}
        self.blocked_reps = {d: frozenset(cert.rep[y] for y in self.neighbors[d])
                             for d in self.dead}
        # the neighbour of d inside c's tree, when it is not c itself
        self.via = {}
        for d in self.dead:
            for y in self.neighbors[d]:
                if y != cert.rep[y]:
                    self.via[(d, cert.rep[y])] = y
        self.overrides = dict(overrides or {})
        self._cache = {}

    def quotient_identity(self) -> FreeWord:
        return FreeWord()

    def root(self, z) -> KernelSymbol:
        return KernelSymbol(z, FreeWord())

    def _blocked(self, z) -> frozenset:
        if z in self.blocked_reps:
            return self.blocked_reps[z]
        if z in self.others:
            return frozenset((self.rep[z],))
        raise InputError(f"{z!r} does not index kernel generators")

    def is_kernel_symbol(self, z, t: FreeWord) -> bool:
        blocked = self._blocked(z)
        return not t.letters or t.letters[0][0] not in blocked

    def symbol(self, z, t=()) -> KernelSymbol:
        t = t if isinstance(t, FreeWord) else free_reduce(t)
        if not self.is_kernel_symbol(z, t):
            raise InputError(f"{z}_{{{t}}} is not a kernel generator")
        return KernelSymbol(z, t)

    def _path_word(self, x, e: int) -> FreeWord:
        # chain = (x(n), ..., x(1)); r(z) is the root symbol z_1
        #   c:    [r(x(n-1))^-1 r(x(n))] ... [r(x(1))^-1 r(x(2))] r(x(1))
        #   c^-1: r(x(1)) [r(x(2)) r(x(1))^-1] ... [r(x(n)) r(x(n-1))^-1]
        chain = self.paths[x]
        raw = []
        if e > 0:
            for hi, lo in zip(chain, chain[1:]):
                raw += [(self.root(lo), -1), (self.root(hi), 1)]
            raw.append((self.root(chain[-1]), 1))
        else:
            raw.append((self.root(chain[-1]), 1))
            for hi, lo in reversed(list(zip(chain, chain[1:]))):
                raw += [(self.root(hi), 1), (self.root(lo), -1)]
        return free_reduce(raw)

    def act_letter_case(self, a, s: KernelSymbol):
        """Image of ``s`` under the letter ``a = (c, ±1)``, with the rule
        that produced it: ``shift``, ``fixed``, ``path`` or ``conjugate``."""
        c, e = a
        if (a, s) in self.overrides:
            return self.overrides[(a, s)], "override"
        key = (a, s)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        z, t = s.base, s.index
        if c not in self.reps:
            raise InputError(f"{c!r} is not a component representative")
        if z in self.blocked_reps:
            if t or c not in self.blocked_reps[z]:
                out = (FreeWord([(KernelSymbol(z, t * FreeWord([(c, e)])), 1)]), "shift")
            elif c in self.neighbors[z]:
                out = (FreeWord([(s, 1)]), "fixed")
            else:
                x1 = self.root(self.via[(z, c)])
                if e > 0:
                    h = FreeWord([(x1, 1)])
                else:
                    h = self.act_letter(a, x1)
                # conjugate s^h = h^-1 s h, with h = x_1 or (act_{c^-1}(x_1))^-1
                if e < 0:
                    h = h.inverse()
                out = (h.inverse() * FreeWord([(s, 1)]) * h, "conjugate")
        else:
            if t or c != self.rep[z]:
                out = (FreeWord([(KernelSymbol(z, t * FreeWord([(c, e)])), 1)]), "shift")
            else:
                out = (self._path_word(z, e), "path")
        self._cache[key] = out
        return out

    def act_letter(self, a, s: KernelSymbol) -> FreeWord:
        return self.act_letter_case(a, s)[0]

    def act(self, u, w: FreeWord) -> FreeWord:
        for a in u:
            w = w.substitute(lambda s, a=a: self.act_letter(a, s))
        return w

    def generator_image(self, v):
        if v in self.blocked_reps:
            return self.element(FreeWord([(self.root(v), 1)]))
        if v in self.reps:
            return self.element(quotient=FreeWord([(v, 1)]))
        # inverse of the substitution root(x) = x^-1 rep(x):  x = rep(x) root(x)^-1
        rep = self.element(quotient=FreeWord([(self.rep[v], 1)]))
        return self.multiply(rep, self.element(FreeWord([(self.root(v), -1)])))

    def with_override(self, letter, symbol, image: FreeWord) -> "Length2Splitting":
        """A copy whose action is deliberately wrong on one generator."""
        return Length2Splitting(self.cert, {**self.overrides, (letter, symbol): image})

    # -- enumeration and checks ------------------------------------------

    def bases(self) -> tuple:
        return tuple(v for v in self.graph.vertices if v in self.blocked_reps or v in self.others)

    def symbols(self, depth: int = DEFAULT_DEPTH) -> list:
        ball = free_ball(self.reps, depth)
        return [KernelSymbol(z, t) for z in self.bases() for t in ball
                if self.is_kernel_symbol(z, t)]

    def letters(self) -> list:
        return [(c, e) for c in self.reps for e in (1, -1)]

    def inverse_check(self, depth: int = DEFAULT_DEPTH) -> CheckResult:
        result = CheckResult("inverse pairs")
        one = FreeWord
        for s in self.symbols(depth):
            w = one([(s, 1)])
            for c in self.reps:
                for first, second in (((c, 1), (c, -1)), ((c, -1), (c, 1))):
                    back = self.act((first, second), w)
                    result.record(back == w,
                                  lambda: f"{Letter(*second)} after {Letter(*first)} sends {s} to {back}")
        return result

    def abelian_permutation_check(self, depth: int = DEFAULT_DEPTH) -> CheckResult:
        """Each letter must induce a permutation of the abelianised basis
        with all signs positive."""
        result = CheckResult("abelianised permutation")
        syms = self.symbols(depth)
        for a in self.letters():
            images = {}
            for s in syms:
                ab = self.act_letter(a, s).abelianize()
                ok = len(ab) == 1 and next(iter(ab.values())) == 1
                result.record(ok, lambda: f"{Letter(*a)} sends {s} to {ab}")
                if ok:
                    (t,) = ab
                    result.record(t not in images,
                                  lambda: f"{Letter(*a)} sends {s} and {images.get(t)} to {t}")
                    images[t] = s
        return result

    def action_table(self, depth: int = 1) -> "ActionTable":
        return action_table(self, depth)


@dataclass(frozen=True)
class TableEntry:
    word: FreeWord | None
    text: str
    rule: str

    def to_dict(self) -> dict:
        out = {"text": self.text, "rule": self.rule}
        if self.word is not None:
            out["word"] = [[str(s), e] for s, e in self.word]
        return out


@dataclass(frozen=True)
class TableRow:
    label: str
    symbol: KernelSymbol | None
    entries: tuple


@dataclass(frozen=True)
class ActionTable:
    """Rows are kernel generators, columns the representatives; the entry in
    row ``σ``, column ``c`` is the conjugate ``σ^c``."""

    columns: tuple
    rows: tuple

    def entry(self, label: str, column) -> TableEntry:
        for row in self.rows:
            if row.label == label:
                return row.entries[self.columns.index(column)]
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {"columns": list(self.columns),
                "rows": [{"label": r.label, "entries": [e.to_dict() for e in r.entries]}
                         for r in self.rows]}

    def render(self) -> str:
        head = [""] + list(self.columns)
        body = [[r.label] + [e.text for e in r.entries] for r in self.rows]
        widths = [max(len(row[i]) for row in [head] + body) for i in range(len(head))]

        def line(cells):
            return " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

        sep = "-+-".join("-" * w for w in widths)
        return "\n".join([line(head), sep] + [line(r) for r in body])


def _render(split: Length2Splitting, a, s: KernelSymbol, word: FreeWord, rule: str) -> str:
    if rule == "conjugate":
        (h_sym, h_e), = word.letters[-1:]
        if a[1] > 0:
            return f"{s}^{{{h_sym}}}"
        inner = split.act_letter(a, split.root(split.via[(s.base, a[0])]))
        return f"{s}^{{({inner})^-1}}"
    if len(word) == 1 and word.letters[0][1] == 1:
        return str(word.letters[0][0])
    return str(word)


def action_table(split: Length2Splitting, depth: int = 1) -> ActionTable:
    """Concrete rows for generators whose index has fewer than ``depth``
    letters, followed per base by a generic ``z_t`` row when deeper
    generators exist; every deeper generator just shifts its index."""
    if depth < 1:
        raise InputError("table depth must be at least 1")
    ball = free_ball(split.reps, depth - 1)
    rows = []
    for z in split.bases():
        for t in ball:
            if not split.is_kernel_symbol(z, t):
                continue
            s = KernelSymbol(z, t)
            entries = []
            for c in split.reps:
                word, rule = split.act_letter_case((c, 1), s)
                entries.append(TableEntry(word, _render(split, (c, 1), s, word, rule), rule))
            rows.append(TableRow(str(s), s, tuple(entries)))
        if len(split._blocked(z)) < len(split.reps):
            entries = tuple(TableEntry(None, f"{z}_{{t{c}}}", "shift") for c in split.reps)
            rows.append(TableRow(f"{z}_t", None, entries))
    return ActionTable(tuple(split.reps), tuple(rows))


def verify_splitting(split: Length2Splitting, depth: int = DEFAULT_DEPTH) -> list:
    return [split.inverse_check(depth),
            split.abelian_permutation_check(depth),
            split.relator_check()]


# -- Euler characteristics and the finitely generated classification -------

@dataclass
class EulerReport:
    v: int
    e: int
    triangle_free: bool
    from_counts: int | None = None          # 1 - v + e
    dead_count: int | None = None
    component_count: int | None = None
    degrees: tuple = ()
    from_breaking_set: int | None = None    # 1 - c + sum(g_i - 1)
    ranks: tuple | None = None
    from_ranks: int | None = None           # (k - 1)(q - 1)
    notes: list = field(default_factory=list)

    @property
    def agreement(self) -> dict:
        vals = {"counts": self.from_counts, "breaking_set": self.from_breaking_set,
                "ranks": self.from_ranks}
        present = {k: v for k, v in vals.items() if v is not None}
        keys = sorted(present)
        return {f"{a}={b}": present[a] == present[b]
                for i, a in enumerate(keys) for b in keys[i + 1:]}

    def to_dict(self) -> dict:
        out = {"v": self.v, "e": self.e, "triangle_free": self.triangle_free,
               "chi_counts": self.from_counts}
        if self.from_breaking_set is not None:
            out.update({"delta": self.dead_count, "c": self.component_count,
                        "degrees": list(self.degrees),
                        "chi_breaking_set": self.from_breaking_set})
        if self.from_ranks is not None:
            out.update({"k": self.ranks[0], "q": self.ranks[1], "chi_ranks": self.from_ranks})
        out["agreement"] = self.agreement
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def euler_from_counts(g: Graph) -> int:
    """``1 - v + e``; valid only for triangle-free graphs."""
    if has_triangle(g):
        raise InputError("vertex/edge Euler formula needs a triangle-free graph")
    return 1 - len(g) + g.edge_count


def euler_from_ranks(k: int, q: int) -> int:
    return (k - 1) * (q - 1)


def euler_report(g: Graph, cert: BreakingCertificate | None = None,
                 ranks: tuple | None = None) -> EulerReport:
    rep = EulerReport(len(g), g.edge_count, not has_triangle(g))
    if rep.triangle_free:
        rep.from_counts = euler_from_counts(g)
    else:
        rep.notes.append("graph has a triangle: 1 - v + e not applicable")
    if cert is not None:
        rep.dead_count = len(cert.dead)
        rep.component_count = len(cert.components)
        rep.degrees = tuple(g.degree(d) for d in cert.dead)
        rep.from_breaking_set = 1 - rep.component_count + sum(x - 1 for x in rep.degrees)
    if ranks is not None:
        rep.ranks = tuple(ranks)
        rep.from_ranks = euler_from_ranks(*ranks)
    return rep


def neighbor_image_index(split: Length2Splitting, d) -> tuple:
    """Index and rank of the subgroup of ``F(C)`` generated by the images of
    the neighbours of ``d`` (each living vertex maps to its representative)."""
    gens = tuple(FreeWord([(split.rep[y], 1)]) for y in split.graph.sorted(split.neighbors[d]))
    res = subgroup_index(SubgroupPresentation(split.reps, gens))
    return res.index, res.rank


@dataclass(frozen=True)
class FgFreeVerdict:
    """Whether ``AΓ`` is an extension of one finitely generated free group by
    another, and in which forms."""

    length2: bool
    forms: tuple
    shape: Shape
    pfl_two: bool | None
    summary: str

    def to_dict(self) -> dict:
        return {"poly_fg_free_length_2": self.length2, "forms": list(self.forms),
                "shape": str(self.shape), "pfl_2": self.pfl_two, "summary": self.summary}


def classify_poly_fg_free(g: Graph, max_vertices: int = CYCLE_CAP) -> FgFreeVerdict:
    shape = classify_shape(g)
    n = len(g)
    forms = []
    if shape.kind == "complete_bipartite":
        k, q = shape.parts
        forms.append(f"F_{k} × F_{q}")
    if shape.is_tree and n >= 2:
        forms.append(f"F_{n - 1} ⋊ ℤ")
    if forms:
        return FgFreeVerdict(True, tuple(forms), shape, True,
                             "poly-fg-free of length 2: " + ", ".join(forms))
    if shape.is_tree:
        return FgFreeVerdict(False, ("ℤ",), shape, False,
                             "infinite cyclic: poly-fg-free of length 1")
    try:
        pfl_two = find_breaking_set(g, max_vertices) is not None
        note = "poly-free length 2 via a breaking set" if pfl_two else \
            "poly-free length is not 2"
    except ResourceError:
        pfl_two = None
        note = "poly-free length 2 undecided (search cap)"
    return FgFreeVerdict(False, (), shape, pfl_two,
                         f"not poly-fg-free of length 2; {note}")
