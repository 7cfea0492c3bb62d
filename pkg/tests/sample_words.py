"""Shared fixed words for the test suite."""

CURL = ("a", "a")
TREFOIL = ("a", "b", "c", "a", "b", "c")
FIGURE8 = ("a", "b", "c", "d", "b", "a", "d", "c")

# Interleaved pair and the three chord chain: fine as words, but no
# sphere embedding exists for either.
NONREALIZABLE_2 = ("a", "b", "a", "b")
NONREALIZABLE_3 = ("a", "b", "c", "a", "c", "b")
NONREALIZABLE_4 = ("a", "b", "c", "d", "a", "b", "c", "d")
