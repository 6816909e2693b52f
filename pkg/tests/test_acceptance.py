"""The acceptance gate: one test per criterion, each recording a PASS/FAIL
line that is repeated in the terminal summary."""

import random
import time

import networkx as nx

from polyfree import corpus
from polyfree.breakable import (Length2Splitting, action_table,
                                breaks_cycles_twice, certify_breaking_set,
                                classify_poly_fg_free, euler_from_ranks,
                                euler_report, find_breaking_set,
                                independent_sets)
from polyfree.checks import (breaking_oracle_check, schreier_random_check,
                             word_oracle_check, word_pairs)
from polyfree.cli import build_parser, run
from polyfree.graph import Graph, chromatic_number
from polyfree.tower import pfl_bounds, splitting

DEPTH = 4

EXAMPLE_TABLE = [
    ("d_1", ["d_1^{y_1}", "d_1", "d_c"]),
    ("d_t", ["d_{ta}", "d_{tb}", "d_{tc}"]),
    ("e_1", ["e_1^{x_1}", "e_1", "e_1"]),
    ("x_1", ["x_1", "x_b", "x_c"]),
    ("x_t", ["x_{ta}", "x_{tb}", "x_{tc}"]),
    ("y_1", ["x_1^-1 y_1 x_1", "y_b", "y_c"]),
    ("y_t", ["y_{ta}", "y_{tb}", "y_{tc}"]),
]


def analyze(name):
    args = build_parser().parse_args(["analyze", str(corpus.fixture_path(name))])
    start = time.perf_counter()
    code, report = run(args)
    return code, report["results"], time.perf_counter() - start


def test_criterion_1_pentagon(criterion):
    code, res, secs = analyze("pentagon")
    ok = (code == 0 and res["clique_number"] == 2 and res["chromatic_number"] == 3
          and res["breaking_set"]["found"] and res["breaking_set"]["D"] == ["a", "c"]
          and res["pfl"]["exact"] and res["pfl"]["lo"] == 2 and secs < 1)
    assert criterion(1, "pentagon: clq 2, chr 3, D = {a, c}, pfl exact 2", ok,
                     f"{secs:.3f} s")


def test_criterion_2_prism(criterion):
    code, res, secs = analyze("prism")
    g = corpus.prism()
    exhaustive = not any(breaks_cycles_twice(g, s) for s in independent_sets(g))
    ok = (code == 0 and res["clique_number"] == 2 and res["chromatic_number"] == 3
          and res["breaking_set"]["found"] is False and exhaustive
          and res["pfl"]["exact"] and res["pfl"]["lo"] == 3 and secs < 5)
    assert criterion(2, "prism: clq 2, chr 3, no breaking set, pfl exact 3", ok,
                     f"{secs:.3f} s")


def test_criterion_3_worked_table(criterion):
    split = Length2Splitting(certify_breaking_set(corpus.worked_example(), ["d", "e"]))
    table = action_table(split, 1)
    got = [(r.label, [e.text for e in r.entries]) for r in table.rows]
    ok = table.columns == ("a", "b", "c") and got == EXAMPLE_TABLE
    wrong = [row for row, want in zip(got, EXAMPLE_TABLE) if row != want]
    assert criterion(3, "worked example table, D = {d, e}, depth 1", ok,
                     f"{len(got)} rows x {len(table.columns)} columns, {len(wrong)} differ")


def test_criterion_4_word_oracle(criterion):
    rng = random.Random(404)
    graphs = corpus.small_corpus()
    assert len(graphs) == 50 and all(len(g) <= 5 for g in graphs)
    checked = agreed = 0
    for g in graphs:
        res = word_oracle_check(g, word_pairs(rng, g, 10, max_len=6))
        checked += res.checked
        agreed += res.checked - (0 if res.passed else len(res.failures))
    ok = checked == 500 and agreed == checked
    assert criterion(4, "normal forms agree with the rewriting oracle", ok,
                     f"{agreed}/{checked} pairs")


def _length2(g):
    cert = find_breaking_set(g)
    return None if cert is None else Length2Splitting(cert)


def test_criterion_5_automorphisms(criterion):
    counts = {"inverse": 0, "commutation": 0, "condition": 0}
    bad = []
    for g in corpus.small_corpus():
        _, col = chromatic_number(g)
        for dead in col.classes(g):
            sp = splitting(g, frozenset(dead))
            for key, check in (("inverse", sp.inverse_check(DEPTH)),
                               ("commutation", sp.commutation_check(DEPTH)),
                               ("condition", sp.fixed_point_check(DEPTH))):
                counts[key] += check.checked
                if not check.passed:
                    bad.append((repr(g), check.to_dict()))
        split = _length2(g)
        if split is not None:
            for check in (split.inverse_check(DEPTH), split.abelian_permutation_check(DEPTH)):
                counts["inverse"] += check.checked
                if not check.passed:
                    bad.append((repr(g), check.to_dict()))
    ok = not bad and all(counts.values())
    detail = ", ".join(f"{k} {v}" for k, v in counts.items())
    assert criterion(5, "inverse pairs, commutation, fixed-point criterion", ok, detail), bad


def test_criterion_6_relators(criterion):
    towers = length2 = 0
    bad = []
    for g in corpus.small_corpus() + [corpus.worked_example(), corpus.prism()]:
        _, col = chromatic_number(g)
        for dead in col.classes(g):
            check = splitting(g, frozenset(dead)).relator_check()
            towers += check.checked
            if not check.passed:
                bad.append((repr(g), check.to_dict()))
        split = _length2(g)
        if split is not None:
            check = split.relator_check()
            length2 += check.checked
            if not check.passed:
                bad.append((repr(g), check.to_dict()))
    ok = not bad and towers and length2
    assert criterion(6, "relator images are trivial", ok,
                     f"{towers} colour-class and {length2} breaking-set relators"), bad


def test_criterion_7_euler(criterion):
    certified = 0
    bad = []
    for g in corpus.small_corpus() + corpus.medium_corpus():
        cert = find_breaking_set(g)
        if cert is None:
            continue
        certified += 1
        rep = euler_report(g, cert)
        if not (rep.triangle_free and rep.from_counts == rep.from_breaking_set):
            bad.append((repr(g), rep.to_dict()))
    for k in range(1, 5):
        for q in range(k, 5):
            g = corpus.complete_bipartite(k, q)
            rep = euler_report(g, find_breaking_set(g), (k, q))
            if rep.from_counts != euler_from_ranks(k, q) or not all(rep.agreement.values()):
                bad.append((repr(g), rep.to_dict()))
    ok = not bad and certified > 0
    assert criterion(7, "Euler characteristics agree", ok,
                     f"{certified} certified graphs, 10 complete bipartite"), bad


def _tree_graph(t):
    names = {v: f"t{v}" for v in t.nodes}
    return Graph.from_edges([(names[u], names[v]) for u, v in t.edges],
                            [names[v] for v in sorted(t.nodes)])


def test_criterion_8_classifier(criterion):
    trees = 0
    bad = []
    for n in range(2, 9):
        for t in nx.nonisomorphic_trees(n):
            trees += 1
            verdict = classify_poly_fg_free(_tree_graph(t))
            if not verdict.length2 or f"F_{n - 1} ⋊ ℤ" not in verdict.forms:
                bad.append(verdict.to_dict())
    for k in range(1, 5):
        for q in range(k, 5):
            verdict = classify_poly_fg_free(corpus.complete_bipartite(k, q))
            if not verdict.length2 or verdict.forms[0] != f"F_{k} × F_{q}":
                bad.append(verdict.to_dict())
    c5 = classify_poly_fg_free(corpus.pentagon())
    c5_ok = not c5.length2 and c5.pfl_two and str(pfl_bounds(corpus.pentagon())) == "exact 2"
    ok = not bad and c5_ok
    assert criterion(8, "trees, complete bipartite graphs and the pentagon", ok,
                     f"{trees} trees, 10 complete bipartite"), bad


def test_criterion_9_schreier(criterion):
    res = schreier_random_check(random.Random(909), count=20, max_order=5)
    ok = res.passed and res.checked == 20
    assert criterion(9, "Schreier formula on kernels onto Z/n, n <= 5", ok,
                     f"{res.checked - len(res.failures)}/{res.checked}"), res.failures


def test_criterion_10_structural_vs_cycles(criterion):
    graphs = [g for g in corpus.small_corpus() + corpus.medium_corpus() if len(g) <= 12]
    checked = 0
    bad = []
    for g in graphs:
        res = breaking_oracle_check(g, max_vertices=12)
        assert not res.skipped
        checked += res.checked
        if not res.passed:
            bad.append((repr(g), res.failures))
    ok = not bad and checked > 0
    assert criterion(10, "structural breaking-set test vs cycle enumeration", ok,
                     f"{checked} independent sets over {len(graphs)} graphs"), bad
