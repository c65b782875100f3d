"""Central simple algebras, identified with (Brauer class, degree) pairs.

Every CSA is ``Mat_l(D)`` for a division algebra ``D``; the class fixes
``D`` and the degree fixes ``l = deg / ind``.  Nothing else about the
algebra enters the motive computations, so nothing else is stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import brauer
from .brauer import BrauerClass, FieldModel
from .errors import IndexDegreeViolation, ModelMismatch

__all__ = [
    "CentralSimpleAlgebra",
    "make_csa",
    "matrix_algebra",
    "index",
    "is_split",
    "is_division",
    "tensor",
    "tensor_power",
    "underlying_division_algebra",
    "primary_decomposition_csa",
]


@dataclass(frozen=True)
class CentralSimpleAlgebra:
    brauer_class: BrauerClass
    degree: int
    label: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.brauer_class, BrauerClass):
            raise TypeError(f"expected a BrauerClass, got {self.brauer_class!r}")
        if isinstance(self.degree, bool) or not isinstance(self.degree, int) or self.degree < 1:
            raise IndexDegreeViolation(f"degree must be a positive integer, got {self.degree!r}")
        ind = brauer.class_index(self.brauer_class)
        if self.degree % ind:
            raise IndexDegreeViolation(
                f"index {ind} of class {self.brauer_class} does not divide degree {self.degree}"
            )

    @property
    def model(self) -> FieldModel:
        return self.brauer_class.model

    @property
    def index(self) -> int:
        return brauer.class_index(self.brauer_class)

    def is_split(self) -> bool:
        return self.brauer_class.is_zero()

    def is_division(self) -> bool:
        return self.index == self.degree

    def __matmul__(self, other):
        # A @ B reads as A (x) B
        if not isinstance(other, CentralSimpleAlgebra):
            return NotImplemented
        return tensor(self, other)

    def __str__(self):
        name = f", name={self.label}" if self.label else ""
        return f"csa(class={self.brauer_class}, deg={self.degree}{name})"


def make_csa(
    model: FieldModel, cls: BrauerClass, degree: int, label: Optional[str] = None
) -> CentralSimpleAlgebra:
    """Validated constructor.

    Raises :class:`ModelMismatch` if ``cls`` is not a class of ``model`` and
    :class:`IndexDegreeViolation` if its index does not divide ``degree``.
    """
    if cls.model != model:
        raise ModelMismatch(f"class {cls} belongs to {cls.model}, not {model}")
    return CentralSimpleAlgebra(cls, degree, label)


def matrix_algebra(A: CentralSimpleAlgebra, l: int) -> CentralSimpleAlgebra:
    """``Mat_l(A)``: same class, degree multiplied by ``l``."""
    if l < 1:
        raise ValueError("matrix size must be >= 1")
    return CentralSimpleAlgebra(A.brauer_class, A.degree * l)


def index(A: CentralSimpleAlgebra) -> int:
    return A.index


def is_split(A: CentralSimpleAlgebra) -> bool:
    return A.is_split()


def is_division(A: CentralSimpleAlgebra) -> bool:
    return A.is_division()


def tensor(A: CentralSimpleAlgebra, B: CentralSimpleAlgebra) -> CentralSimpleAlgebra:
    if A.model != B.model:
        raise ModelMismatch(f"cannot tensor algebras over {A.model} and {B.model}")
    return CentralSimpleAlgebra(A.brauer_class + B.brauer_class, A.degree * B.degree)


def tensor_power(A: CentralSimpleAlgebra, j: int) -> CentralSimpleAlgebra:
    """``A^{(x) j}``; ``j = 0`` gives the base field."""
    if j < 0:
        raise ValueError("tensor exponent must be >= 0")
    return CentralSimpleAlgebra(brauer.multiple(A.brauer_class, j), A.degree**j)


def underlying_division_algebra(A: CentralSimpleAlgebra) -> CentralSimpleAlgebra:
    """The division algebra ``D`` with ``A = Mat_l(D)``."""
    return CentralSimpleAlgebra(A.brauer_class, A.index)


def primary_decomposition_csa(A: CentralSimpleAlgebra) -> list[tuple[int, CentralSimpleAlgebra]]:
    """Split the division part of ``A`` into factors of prime-power index.

    Returns ``[(p, A_p), ...]`` with primes ascending.  Each ``A_p`` is a
    division algebra of index ``p**v_p(ind A)``, and tensoring all of them
    gives back :func:`underlying_division_algebra`.  The matrix factor of
    ``A`` is not represented here.
    """
    out = []
    for p, e in brauer.factorize(A.index).items():
        out.append((p, CentralSimpleAlgebra(brauer.p_part(A.brauer_class, p), p**e)))
    return out
