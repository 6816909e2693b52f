"""
Clique and chromatic bounds, and towers from colourings
=======================================================

The poly-free length of the group lies between the clique number and the
chromatic number of the graph.  Each colour class peels off as a free kernel.
"""

from polyfree import corpus, chromatic_number, clique_number, build_tower, pfl_bounds

for name in ("pentagon", "prism", "triangle", "k23"):
    g = corpus.fixture(name)
    k, coloring = chromatic_number(g)
    print(f"{name:9s} clq {clique_number(g)}  chr {k}  pfl {pfl_bounds(g)}")

# A tower for the pentagon: three colours, three levels.
g = corpus.pentagon()
_, coloring = chromatic_number(g)
tower = build_tower(g, coloring)
print(tower.render())

# Peeling {a, c}: the kernel symbols d_t and how b moves them.
from polyfree.tower import ColorClassSplitting

sp = ColorClassSplitting(g, ["a", "c"])
print([str(s) for s in sp.symbols(2)][:8])
print(sp.act_letter(("d", 1), sp.symbol("a")), sp.act_letter(("b", 1), sp.symbol("a")))
print(sp.relator_check().to_dict())
