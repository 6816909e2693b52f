"""
Shortlex normal forms
=====================

Words in a right-angled Artin group, reduced to their shortlex-least
geodesic spelling.
"""

from polyfree import corpus, normalize, word, brute_force_equal, initial_letters

# The pentagon: a-b, b-c, c-d, d-e, e-a.  Adjacent generators commute.
g = corpus.pentagon()

# b and a commute, so b a is spelled a b; c and a do not commute.
print(word(g, "b a"), "|", word(g, "c a"))

# Cancellation reaches through commuting letters.
print(word(g, "a b a^-1"), "|", word(g, "a c a^-1"))

# Initial letters: what a geodesic spelling may start with.
u = word(g, "b a e^-1 c")
print(u, "starts with", sorted(map(str, initial_letters(u))))

# Products and inverses stay in normal form.
v = word(g, "c^-1 e")
print(u * v, "|", (u * v).inverse())

# The normal form agrees with blind rewriting (cancel and swap only).
w1, w2 = "a b c b^-1", "a c"
print(normalize(g, w1) == normalize(g, w2), brute_force_equal(g, w1, w2))
