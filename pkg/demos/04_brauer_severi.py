"""
Brauer-Severi varieties and exceptional collections
===================================================

The motive of BS(A) is U(k) + U(A) + ... + U(A^(d-1)). A full étale
exceptional collection would make it U(k)^d, which only happens when A is
split. Here we check a few algebras over R, a local field and Q.
"""

from fractions import Fraction

from ncmotive import GLOBAL, INF, LOCAL, REAL, BrauerClass, CentralSimpleAlgebra
from ncmotive.bs import admits_full_etale_collection, sod_motive, sod_triviality_check

algebras = {
    "M_3(R)": CentralSimpleAlgebra(BrauerClass(REAL, 0), 3),
    "quaternions over R": CentralSimpleAlgebra(BrauerClass(REAL, Fraction(1, 2)), 2),
    "index 3, degree 6, local": CentralSimpleAlgebra(BrauerClass(LOCAL, Fraction(1, 3)), 6),
    "quaternions over Q": CentralSimpleAlgebra(
        BrauerClass(GLOBAL, {2: Fraction(1, 2), INF: Fraction(1, 2)}), 2
    ),
}

for name, A in algebras.items():
    report = admits_full_etale_collection(A)
    print(name)
    print("  SOD motive:", sod_motive(A))
    print("  ~ U(k)^d:  ", sod_triviality_check(A))
    print("  admits a full etale exceptional collection:", report.admits_collection)
    if report.failing_prime is not None:
        print("  obstruction at p =", report.failing_prime)
