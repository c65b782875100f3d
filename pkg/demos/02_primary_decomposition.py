"""
Primary decomposition of classes and algebras
=============================================

A class of order n splits uniquely into parts of prime-power order. For a
division algebra this is the tensor factorisation into factors of
prime-power index.
"""

from fractions import Fraction

from ncmotive import LOCAL, BrauerClass, CentralSimpleAlgebra, primary_decomposition
from ncmotive.csa import primary_decomposition_csa, tensor, underlying_division_algebra

c = BrauerClass(LOCAL, Fraction(1, 6))
parts = primary_decomposition(c)
for p, part in parts.items():
    print(f"  {p}-part of {c}: {part}")
print("sum of parts:", sum(parts.values(), BrauerClass(LOCAL, 0)))

# an algebra of degree 12 and index 6, i.e. Mat_2 of a division algebra
A = CentralSimpleAlgebra(c, 12)
D = underlying_division_algebra(A)
print(A, "= Mat_2 of", D)

factors = primary_decomposition_csa(A)
for p, F in factors:
    print(f"  {p}-primary factor: {F} (index {F.index})")
product = tensor(factors[0][1], factors[1][1])
print("tensor of the factors:", product)
