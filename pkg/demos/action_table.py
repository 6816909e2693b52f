"""
The action table of a free-by-free splitting
============================================

On the seven-vertex worked example with D = {d, e} the trees of V - D are
{a, x, y}, {b} and {c}; their first vertices a, b, c generate the quotient.
Each row is a kernel generator, each column a representative.
"""

from polyfree import corpus, certify_breaking_set, Length2Splitting, verify_splitting

g = corpus.worked_example()
split = Length2Splitting(certify_breaking_set(g, ["d", "e"]))
print(split.action_table(1).render())

# one level deeper, the generic rows unfold
print()
print(split.action_table(2).render())

# the splitting passes its own checks
for check in verify_splitting(split, 3):
    print(check.name, check.passed, check.checked)

# corrupt one entry and the relators notice
from polyfree.checks import mutate

print(mutate(split).relator_check().to_dict())
