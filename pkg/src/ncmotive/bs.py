"""Brauer-Severi varieties and full étale exceptional collections.

``D^b(BS(A))`` has a semi-orthogonal decomposition with components
``D^b(A^{(x) j})`` for ``j = 0, ..., deg(A) - 1``.  Since ``U`` is additive
on such decompositions, the motive of ``BS(A)`` is
``U(k) + U(A) + ... + U(A^{(x) d-1})``.  A full étale exceptional collection
would force this motive to be ``U(k)^d``, and that happens only for split
``A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import brauer
from .brauer import BrauerClass
from .csa import CentralSimpleAlgebra
from .motive import Motive, compare_primes, is_isomorphic, trivial_motive

__all__ = [
    "BrauerSeveriVariety",
    "ObstructionReport",
    "sod_motive",
    "sod_triviality_check",
    "admits_full_etale_collection",
]


@dataclass(frozen=True)
class BrauerSeveriVariety:
    algebra: CentralSimpleAlgebra

    @property
    def dimension(self) -> int:
        return self.algebra.degree - 1

    def motive(self) -> Motive:
        return sod_motive(self.algebra)

    def admits_full_etale_collection(self) -> "ObstructionReport":
        return admits_full_etale_collection(self.algebra)


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of :func:`admits_full_etale_collection`.

    For a non-split algebra, ``failing_prime`` is the smallest prime at which
    the p-parts of the SOD summands (``sod_parts``) differ from those of
    ``U(k)^d`` (``trivial_parts``).  For a split algebra, ``certificate`` is
    the zero class.
    """

    algebra: CentralSimpleAlgebra
    admits_collection: bool
    sod_classes: tuple[BrauerClass, ...]
    failing_prime: Optional[int] = None
    sod_parts: tuple[BrauerClass, ...] = ()
    trivial_parts: tuple[BrauerClass, ...] = ()
    certificate: Optional[BrauerClass] = None
    note: str = ""


def sod_motive(A: CentralSimpleAlgebra) -> Motive:
    """Motive ``{j [A] : 0 <= j < deg A}`` of ``BS(A)``."""
    c = A.brauer_class
    return Motive(A.model, tuple(brauer.multiple(c, j) for j in range(A.degree)))


def sod_triviality_check(A: CentralSimpleAlgebra) -> bool:
    """Whether the SOD motive of ``BS(A)`` is isomorphic to ``U(k)^deg(A)``.

    Decided through :func:`~ncmotive.motive.is_isomorphic` alone, never by
    looking at whether ``A`` is split.
    """
    return is_isomorphic(sod_motive(A), trivial_motive(A.model, A.degree))


def admits_full_etale_collection(A: CentralSimpleAlgebra) -> ObstructionReport:
    d = A.degree
    sod = sod_motive(A)
    if A.is_split():
        return ObstructionReport(
            algebra=A,
            admits_collection=True,
            sod_classes=sod.summands,
            certificate=A.brauer_class,
            note=(
                f"A is split, so BS(A) is P^{d - 1} and O, O(1), ..., O({d - 1}) is a full "
                "exceptional collection (existence of this collection only)"
            ),
        )
    trivial = trivial_motive(A.model, d)
    for p, left, right, match in compare_primes(sod, trivial):
        if not match:
            return ObstructionReport(
                algebra=A,
                admits_collection=False,
                sod_classes=sod.summands,
                failing_prime=p,
                sod_parts=tuple(left),
                trivial_parts=tuple(right),
                note=(
                    f"the {p}-part {brauer.p_part(A.brauer_class, p)} of [A] is nonzero, so the "
                    f"{p}-parts of the SOD motive cannot be matched with those of U(k)^{d}"
                ),
            )
    raise RuntimeError(f"non-split {A} has an SOD motive isomorphic to U(k)^{d}")
