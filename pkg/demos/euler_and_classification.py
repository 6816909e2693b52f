"""
Euler characteristics and the finitely generated case
=====================================================

For triangle-free graphs the group has Euler characteristic 1 - v + e; a
breaking set gives the same number from its own data, and a complete
bipartite graph K_{k,q} gives (k - 1)(q - 1).
"""

from polyfree import corpus, euler_report, find_breaking_set, classify_poly_fg_free

for g in (corpus.pentagon(), corpus.cycle(6), corpus.complete_bipartite(3, 4)):
    print(euler_report(g, find_breaking_set(g)).to_dict())

# Which groups are extensions of one finitely generated free group by another?
for g in (corpus.complete_bipartite(2, 3), corpus.path(5), corpus.star(3),
          corpus.pentagon(), corpus.prism()):
    print(repr(g), "->", classify_poly_fg_free(g).summary)
