"""
Independent sets that break every cycle twice
=============================================

When such a set D exists the group is free-by-free.  The pentagon has one;
the pentagonal prism does not, though both have chromatic number three.
"""

from polyfree import (corpus, find_breaking_set, certify_breaking_set,
                      independent_sets, breaks_cycles_twice, BreakingSetRefused)

c5, prism = corpus.pentagon(), corpus.prism()

cert = find_breaking_set(c5)
print("pentagon:", cert.to_dict())

print("prism:", find_breaking_set(prism))
# the cycle oracle agrees on every independent set of the prism
print(sum(1 for s in independent_sets(prism)), "independent sets,",
      sum(breaks_cycles_twice(prism, s) for s in independent_sets(prism)), "work")

# refusals say why
for dead in (["a", "b"], ["a"], ["c"]):
    try:
        certify_breaking_set(c5, dead)
    except BreakingSetRefused as exc:
        print(dead, "->", exc)
