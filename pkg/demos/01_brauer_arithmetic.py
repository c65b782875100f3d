"""
Arithmetic in Brauer groups
===========================

Classes are exact: local invariants live in Q/Z as fractions, classes over
Q are finite families of Hasse invariants that must sum to zero.
"""

from fractions import Fraction

from ncmotive import GLOBAL, INF, LOCAL, REAL, AbstractAbelian, BrauerClass, InvalidClass, order

# a local field: Br = Q/Z
a = BrauerClass(LOCAL, Fraction(1, 2))
b = BrauerClass(LOCAL, Fraction(2, 3))
print("1/2 + 2/3 =", a + b, " order", order(a + b))

# Hamilton's quaternions generate Br(R) = Z/2
H = BrauerClass(REAL, Fraction(1, 2))
print("[H] + [H] =", H + H)

# over Q, the quaternions ramify at 2 and infinity
HQ = BrauerClass(GLOBAL, {2: Fraction(1, 2), INF: Fraction(1, 2)})
print("[H_Q] =", HQ, " twice:", 2 * HQ)

# reciprocity is checked on construction
try:
    BrauerClass(GLOBAL, {2: Fraction(1, 2)})
except InvalidClass as exc:
    print("rejected:", exc)

# an abstract model when no concrete field is at hand
G = AbstractAbelian((4, 9))
c = BrauerClass(G, (1, 3))
print("(1,3) in Z/4 x Z/9 has order", order(c))
