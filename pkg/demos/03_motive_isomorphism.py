"""
When are two motives isomorphic?
================================

U(A1) + ... + U(An) and U(B1) + ... + U(Bm) are isomorphic when n = m and
the p-parts match up to a permutation that may change with p. This example
shows a pair where the classes themselves do not match, yet the motives do.
"""

from fractions import Fraction

from ncmotive import LOCAL, BrauerClass, Motive, find_witnesses, is_isomorphic
from ncmotive.motive import compare_primes


def local_motive(*invariants):
    return Motive(LOCAL, tuple(BrauerClass(LOCAL, Fraction(x)) for x in invariants))


left = local_motive(Fraction(1, 6), 0)
right = local_motive(Fraction(1, 2), Fraction(2, 3))
print("left :", left)
print("right:", right)
print("same classes?", left.summands == right.summands)
print("isomorphic?  ", is_isomorphic(left, right))

for p, lp, rp, match in compare_primes(left, right):
    print(f"  p={p}: {[str(x) for x in lp]} vs {[str(x) for x in rp]} -> {match}")

# the explicit permutations; they differ between p = 2 and p = 3
print("witnesses:", find_witnesses(left, right))

# a negative case: no permutation fixes the 2-parts
print(is_isomorphic(local_motive(Fraction(1, 2), Fraction(1, 2)), local_motive(Fraction(1, 2), 0)))
