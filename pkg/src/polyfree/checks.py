"""Randomised and exhaustive property checks over a single graph.

Everything here is seeded, so a run is reproducible byte for byte.
"""

from __future__ import annotations

import math
import random

from .breakable import (Length2Splitting, breaks_cycles_twice, euler_report,
                        find_breaking_set, independent_sets, is_breaking_set,
                        neighbor_image_index, verify_splitting)
from .errors import InputError, ResourceError
from .freegroup import KernelSymbol, cyclic_kernel, schreier_check, subgroup_index
from .graph import (CYCLE_CAP, SOLVER_CAP, Graph, chromatic_number,
                    simple_cycles)
from .semidirect import CheckResult
from .tower import ColorClassSplitting
from .words import (Letter, brute_force_equal, commute,
                    geodesic_representatives, initial_letters, normalize)

ORACLE_MAX_VERTICES = 12


def random_word(rng: random.Random, g: Graph, max_len: int) -> tuple:
    n = rng.randint(0, max_len)
    return tuple(Letter(rng.choice(g.vertices), rng.choice((1, -1))) for _ in range(n))


def rewrite_randomly(rng: random.Random, g: Graph, w: tuple, max_len: int) -> tuple:
    """Same element, different spelling: insert a cancelling pair (room
    permitting) and apply a few commuting swaps."""
    w = list(w)
    if len(w) + 2 <= max_len:
        x = Letter(rng.choice(g.vertices), rng.choice((1, -1)))
        i = rng.randint(0, len(w))
        w[i:i] = [x, x.inverse()]
    for _ in range(4):
        if len(w) < 2:
            break
        i = rng.randrange(len(w) - 1)
        if commute(g, w[i], w[i + 1]):
            w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


def word_pairs(rng: random.Random, g: Graph, count: int, max_len: int = 6) -> list:
    """Half unrelated pairs, half a word and a rewriting of it."""
    pairs = []
    for i in range(count):
        if i % 2:
            w1 = random_word(rng, g, max_len - 2)
            pairs.append((w1, rewrite_randomly(rng, g, w1, max_len)))
        else:
            pairs.append((random_word(rng, g, max_len), random_word(rng, g, max_len)))
    return pairs


def word_oracle_check(g: Graph, pairs) -> CheckResult:
    result = CheckResult("normal form vs rewriting oracle")
    for w1, w2 in pairs:
        fast = normalize(g, w1) == normalize(g, w2)
        slow = brute_force_equal(g, w1, w2)
        result.record(fast == slow, lambda: f"{w1} / {w2}: normal forms say {fast}")
    return result


def initial_letters_check(g: Graph, words) -> CheckResult:
    result = CheckResult("initial letters vs geodesic enumeration")
    for w in words:
        u = normalize(g, w)
        firsts = {rep[0] for rep in geodesic_representatives(u) if rep}
        result.record(firsts == set(initial_letters(u)), lambda: f"{u}")
        multisets = {tuple(sorted(rep)) for rep in geodesic_representatives(u)}
        result.record(len(multisets) == 1, lambda: f"letter multiset of {u} not unique")
    return result


def breaking_oracle_check(g: Graph, max_vertices: int = ORACLE_MAX_VERTICES) -> CheckResult:
    result = CheckResult("breaking set: structure vs cycles")
    if len(g) > max_vertices:
        result.skipped = f"more than {max_vertices} vertices"
        return result
    cycles = simple_cycles(g)
    for dead in independent_sets(g):
        structural = is_breaking_set(g, dead)
        result.record(structural == breaks_cycles_twice(g, dead, cycles),
                      lambda: f"D = {set(dead)}: structural test says {structural}")
    return result


def schreier_random_check(rng: random.Random, count: int = 20, max_order: int = 5) -> CheckResult:
    """Kernels of random maps ``F(a, b) -> Z/n``, ``n <= max_order``."""
    result = CheckResult("Schreier formula on cyclic kernels")
    for _ in range(count):
        n = rng.randint(1, max_order)
        images = {"a": rng.randrange(n), "b": rng.randrange(n)}
        res = subgroup_index(cyclic_kernel(("a", "b"), images, n))
        expected = n // math.gcd(images["a"], images["b"], n)
        ok = res.finite and res.index == expected and schreier_check(2, res.index, res.rank)
        result.record(ok, f"Z/{n} with {images}: index {res.index}, rank {res.rank}")
    return result


def mutate(split: Length2Splitting) -> Length2Splitting:
    """Corrupt the action table.

    Take the first kernel base ``z`` and the representative ``c`` whose
    tree holds a neighbour of ``z`` (or ``z`` itself, for a living ``z``);
    in column ``c`` swap the entries of ``z_1`` and of the next root
    generator, for both ``c`` and ``c^-1``.
    """
    bases = split.bases()
    if len(bases) < 2:
        raise InputError("fewer than two kernel generators: nothing to swap")
    z = bases[0]
    if z in split.neighbors:
        c = split.rep[split.graph.sorted(split.neighbors[z])[0]]
    else:
        c = split.rep[z]
    s = KernelSymbol(z, split.quotient_identity())
    other = KernelSymbol(bases[1], split.quotient_identity())
    out = split
    for a in ((c, 1), (c, -1)):
        img_s, img_o = split.act_letter(a, s), split.act_letter(a, other)
        out = out.with_override(a, s, img_o).with_override(a, other, img_s)
    return out


def tower_checks(g: Graph, depth: int, max_vertices: int = SOLVER_CAP) -> list:
    _, coloring = chromatic_number(g, max_vertices)
    results = []
    for dead in coloring.classes(g):
        sp = ColorClassSplitting(g, dead)
        tag = f" [peel {{{', '.join(dead)}}}]"
        for r in (sp.inverse_check(depth), sp.commutation_check(depth),
                  sp.fixed_point_check(depth), sp.relator_check()):
            r.name += tag
            results.append(r)
    return results


def length2_checks(g: Graph, depth: int, mutated: bool = False,
                   max_vertices: int = CYCLE_CAP) -> list:
    cert = find_breaking_set(g, max_vertices)
    if cert is None:
        r = CheckResult("free-by-free splitting")
        r.skipped = "no breaking set"
        return [r]
    split = Length2Splitting(cert)
    if mutated:
        split = mutate(split)
    tag = f" [D = {{{', '.join(cert.dead)}}}]"
    results = verify_splitting(split, depth)
    euler = CheckResult("Euler characteristic agreement")
    rep = euler_report(g, cert)
    for name, ok in rep.agreement.items():
        euler.record(ok, f"{name}: {rep.to_dict()}")
    results.append(euler)
    schreier = CheckResult("Schreier formula on neighbour images")
    q = len(split.reps)
    for d in split.dead:
        index, rank = neighbor_image_index(split, d)
        if index != math.inf:
            schreier.record(schreier_check(q, index, rank), f"{d}: index {index}, rank {rank}")
    results.append(schreier)
    for r in results:
        r.name += tag
    return results


def verify_graph(g: Graph, depth: int = 4, mutated: bool = False, seed: int = 0,
                 max_vertices: int | None = None) -> list:
    """Run every property suite on ``g``; caps turn into skips."""
    rng = random.Random(seed)
    results = []

    def guarded(name, fn):
        try:
            results.extend(fn())
        except ResourceError as exc:
            r = CheckResult(name)
            r.skipped = str(exc)
            results.append(r)

    caps = {} if max_vertices is None else {"max_vertices": max_vertices}
    guarded("normal form vs rewriting oracle",
            lambda: [word_oracle_check(g, word_pairs(rng, g, 100))])
    guarded("initial letters vs geodesic enumeration",
            lambda: [initial_letters_check(g, [random_word(rng, g, 6) for _ in range(50)])])
    guarded("poly-free tower", lambda: tower_checks(g, depth, **caps))
    guarded("free-by-free splitting", lambda: length2_checks(g, depth, mutated, **caps))
    guarded("breaking set: structure vs cycles",
            lambda: [breaking_oracle_check(g, max_vertices or ORACLE_MAX_VERTICES)])
    guarded("Schreier formula on cyclic kernels", lambda: [schreier_random_check(rng)])
    return results
