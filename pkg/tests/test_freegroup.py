import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from polyfree.freegroup import (FreeWord, KernelSymbol, SubgroupPresentation,
                                conjugate, cyclic_kernel, fold, free_reduce,
                                schreier_check, subgroup_index)

AB = ("a", "b")


def fw(text):
    raw = []
    for tok in text.split():
        raw.append((tok[:-3], -1) if tok.endswith("^-1") else (tok, 1))
    return free_reduce(raw)


def free_words(alphabet=AB, max_size=8):
    return st.lists(st.tuples(st.sampled_from(alphabet), st.sampled_from((1, -1))),
                    max_size=max_size).map(free_reduce)


def stabilizer_generators(perms, alphabet):
    """Schreier generators of the stabiliser of point 0 under the action
    given by ``perms`` (one permutation list per symbol), built from a
    spanning tree of the orbit.  Returns (generators, orbit size)."""
    tree = {0: FreeWord()}
    todo = [0]
    while todo:
        p = todo.pop(0)
        for s in alphabet:
            for e in (1, -1):
                perm = perms[s]
                q = perm[p] if e > 0 else perm.index(p)
                if q not in tree:
                    tree[q] = tree[p] * FreeWord([(s, e)])
                    todo.append(q)
    gens = []
    for p in sorted(tree):
        for s in alphabet:
            w = tree[p] * FreeWord([(s, 1)]) * tree[perms[s][p]].inverse()
            if w:
                gens.append(w)
    return gens, len(tree)


def test_free_word_arithmetic():
    w = fw("a b a^-1")
    assert str(w) == "a b a^-1"
    assert str(w * w.inverse()) == "1"
    assert w * fw("a b^-1") == fw("a b b^-1")
    assert conjugate(fw("b"), fw("a^-1")) == w
    assert FreeWord.of("a", ("b", -1)) == fw("a b^-1")
    assert fw("a b a^-1 b b").abelianize() == {"b": 3}


def test_substitution_is_a_homomorphism():
    image = {"a": fw("a b"), "b": fw("b^-1")}
    w = fw("a b a^-1")
    assert w.substitute(image.get) == fw("a b b^-1 b^-1 a^-1")


def test_kernel_symbol_text():
    assert str(KernelSymbol("d", FreeWord())) == "d_1"
    assert str(KernelSymbol("d", fw("b"))) == "d_b"
    assert str(KernelSymbol("d", fw("b a"))) == "d_{b a}"
    assert KernelSymbol("d", FreeWord()).is_root


def test_index_examples():
    res = subgroup_index(SubgroupPresentation(AB, (fw("a"),)))
    assert res.index == math.inf and not res.finite and res.rank == 1
    res = subgroup_index(SubgroupPresentation(AB, (fw("a"), fw("b a b^-1"), fw("b b"))))
    assert (res.index, res.rank) == (2, 3)
    res = subgroup_index(SubgroupPresentation(AB, (fw("a"), fw("b"))))
    assert (res.index, res.rank) == (1, 2)
    res = subgroup_index(SubgroupPresentation(AB, ()))
    assert res.index == math.inf and res.rank == 0


def test_folding_merges_shared_prefixes():
    core = fold(SubgroupPresentation(AB, (fw("a b"), fw("a b^-1"))))
    # the two loops fold together along their common first edge
    assert core.vertex_count == 2
    assert core.rank == 2


def test_bad_presentation():
    with pytest.raises(ValueError):
        SubgroupPresentation(AB, (fw("c"),))
    with pytest.raises(ValueError):
        schreier_check(2, math.inf, 1)


def test_cyclic_kernels_match_image_size():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 7)
        images = {s: rng.randrange(n) for s in AB}
        res = subgroup_index(cyclic_kernel(AB, images, n))
        assert res.index == n // math.gcd(images["a"], images["b"], n)
        assert schreier_check(2, res.index, res.rank)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_stabilisers_of_random_actions(m, rng):
    perms = {}
    for s in AB:
        p = list(range(m))
        rng.shuffle(p)
        perms[s] = p
    gens, orbit = stabilizer_generators(perms, AB)
    res = subgroup_index(SubgroupPresentation(AB, tuple(gens)))
    assert res.index == orbit
    assert res.rank == (len(AB) - 1) * orbit + 1


@settings(max_examples=100, deadline=None)
@given(free_words(), free_words(), free_words())
def test_free_group_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * x.inverse() == FreeWord()
    assert (x * y).inverse() == y.inverse() * x.inverse()


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.randoms(use_true_random=False))
def test_three_generator_kernels(n, rng):
    alphabet = ("a", "b", "c")
    images = {s: rng.randrange(n) for s in alphabet}
    pres = cyclic_kernel(alphabet, images, n)
    res = subgroup_index(pres)
    assert res.finite
    assert schreier_check(3, res.index, res.rank)
    for g in pres.generators:
        assert sum(images[s] * e for s, e in g) % n == 0
