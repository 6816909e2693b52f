"""Free groups over arbitrary hashable alphabets, and subgroup index by folding."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable


class FreeWord:
    """A freely reduced word; letters are ``(symbol, sign)`` with sign ±1."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = tuple(letters)

    @classmethod
    def of(cls, *symbols) -> "FreeWord":
        """Word from symbols; a symbol given as ``(s, -1)`` is inverted."""
        raw = []
        for s in symbols:
            if isinstance(s, tuple) and len(s) == 2 and s[1] in (1, -1):
                raw.append(s)
            else:
                raw.append((s, 1))
        return free_reduce(raw)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return free_reduce(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord((s, -e) for s, e in reversed(self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(str(s) if e > 0 else f"{s}^-1" for s, e in self.letters)

    def __repr__(self):
        return f"FreeWord({str(self)!r})"

    def substitute(self, image) -> "FreeWord":
        """Apply the endomorphism sending each symbol ``s`` to ``image(s)``."""
        out = []
        for s, e in self.letters:
            w = image(s)
            out.extend(w.letters if e > 0 else w.inverse().letters)
        return free_reduce(out)

    def abelianize(self) -> dict:
        counts = {}
        for s, e in self.letters:
            counts[s] = counts.get(s, 0) + e
        return {s: n for s, n in counts.items() if n}


def free_reduce(raw: Iterable) -> FreeWord:
    out = []
    for s, e in raw:
        if out and out[-1][0] == s and out[-1][1] == -e:
            out.pop()
        else:
            out.append((s, e))
    return FreeWord(out)


def conjugate(w: FreeWord, by: FreeWord) -> FreeWord:
    """``by^-1 w by``."""
    return free_reduce(by.inverse().letters + w.letters + by.letters)


@dataclass(frozen=True)
class KernelSymbol:
    """A free generator ``base_t`` of a kernel: a base vertex and an index word.

    The index is whatever element type the quotient uses (a RAAG normal form
    or a free word); only its letters and its text form matter here.
    """

    base: str
    index: object

    def __str__(self):
        if not self.index:
            return f"{self.base}_1"
        text = str(self.index)
        if len(self.index) == 1 and "^" not in text:
            return f"{self.base}_{text}"
        return f"{self.base}_{{{text}}}"

    @property
    def is_root(self) -> bool:
        return not self.index


# -- folding --------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupPresentation:
    alphabet: tuple
    generators: tuple

    def __post_init__(self):
        letters = set(self.alphabet)
        for w in self.generators:
            for s, _ in w:
                if s not in letters:
                    raise ValueError(f"generator uses symbol {s!r} outside the alphabet")


@dataclass
class FoldedCore:
    """A folded, base-pointed labelled graph; vertex 0 is the base."""

    vertex_count: int
    edges: set = field(default_factory=set)  # (source, symbol, target)

    def outgoing(self):
        out = {}
        for u, s, v in self.edges:
            out.setdefault(u, {})[(s, 1)] = v
            out.setdefault(v, {})[(s, -1)] = u
        return out

    def is_covering(self, alphabet) -> bool:
        out = self.outgoing()
        need = len(alphabet) * 2
        return all(len(out.get(v, {})) == need for v in range(self.vertex_count))

    @property
    def rank(self) -> int:
        return len(self.edges) - self.vertex_count + 1


def fold(presentation: SubgroupPresentation) -> FoldedCore:
    """Stallings folding of the wedge of generator loops."""
    parent = [0]
    edges = []
    for w in presentation.generators:
        if not w:
            continue
        cur = 0
        for i, (s, e) in enumerate(w):
            if i == len(w) - 1:
                nxt = 0
            else:
                nxt = len(parent)
                parent.append(nxt)
            edges.append((cur, s, nxt) if e > 0 else (nxt, s, cur))
            cur = nxt

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    # Merge the targets of equally-labelled edges leaving a common vertex,
    # sweeping until a full pass makes no merge.
    while True:
        seen = {}
        merged = False
        for u, s, v in edges:
            u, v = find(u), find(v)
            for key, target in (((u, s, 1), v), ((v, s, -1), u)):
                other = seen.setdefault(key, target)
                a, b = sorted((find(other), find(target)))
                if a != b:
                    parent[b] = a
                    merged = True
        edges = {(find(u), s, find(v)) for u, s, v in edges}
        if not merged:
            break

    roots = sorted({find(v) for v in range(len(parent))})
    relabel = {r: i for i, r in enumerate(roots)}
    core = FoldedCore(len(roots))
    core.edges = {(relabel[find(u)], s, relabel[find(v)]) for u, s, v in edges}
    return core


@dataclass(frozen=True)
class IndexResult:
    index: float  # an int, or math.inf
    rank: int

    @property
    def finite(self) -> bool:
        return self.index != math.inf


def subgroup_index(presentation: SubgroupPresentation) -> IndexResult:
    core = fold(presentation)
    if core.is_covering(presentation.alphabet):
        return IndexResult(core.vertex_count, core.rank)
    return IndexResult(math.inf, core.rank)


def schreier_check(q: int, index: int, rank: int) -> bool:
    """Schreier's formula ``(q - 1) * index == rank - 1``."""
    if index == math.inf:
        raise ValueError("Schreier's formula needs a finite index")
    return (q - 1) * index == rank - 1


def cyclic_kernel(alphabet: tuple, images: dict, modulus: int) -> SubgroupPresentation:
    """Schreier generators of the kernel of ``F(alphabet) -> Z/modulus``.

    ``images`` gives each symbol's residue.  Cosets are the residues hit by
    the image; the transversal is built breadth-first over the alphabet.
    """
    transversal = {0: FreeWord()}
    order = [0]
    i = 0
    while i < len(order):
        r = order[i]
        i += 1
        for s in alphabet:
            for e in (1, -1):
                t = (r + e * images[s]) % modulus
                if t not in transversal:
                    transversal[t] = transversal[r] * FreeWord([(s, e)])
                    order.append(t)
    gens = []
    for r in order:
        for s in alphabet:
            t = (r + images[s]) % modulus
            w = transversal[r] * FreeWord([(s, 1)]) * transversal[t].inverse()
            if w:
                gens.append(w)
    return SubgroupPresentation(tuple(alphabet), tuple(gens))
