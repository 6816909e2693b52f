"""
Subgroup index by folding
=========================

Stallings folding decides whether a finitely generated subgroup of a free
group has finite index, and Schreier's formula ties index to rank.
"""

from polyfree import (FreeWord, SubgroupPresentation, subgroup_index,
                      cyclic_kernel, schreier_check)

a, b = FreeWord([("a", 1)]), FreeWord([("b", 1)])

print(subgroup_index(SubgroupPresentation(("a", "b"), (a,))))
print(subgroup_index(SubgroupPresentation(("a", "b"), (a, b * a * b.inverse(), b * b))))

# Kernel of F(a, b) -> Z/4 sending a to 1 and b to 2.
pres = cyclic_kernel(("a", "b"), {"a": 1, "b": 2}, 4)
res = subgroup_index(pres)
print(res, schreier_check(2, res.index, res.rank))
