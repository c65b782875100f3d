"""Noncommutative motives of finite direct sums of central simple algebras.

``U(A1) + ... + U(An)`` is stored as the multiset of Brauer classes
``{[A1], ..., [An]}``.  ``U`` inverts Morita equivalences and
``U(Mat_l(D)) = U(D)``, so the degree of a summand carries no information
and is dropped.

Two such motives are isomorphic exactly when they have the same number of
summands and, for every prime ``p``, the ``p``-primary parts of the summands
agree up to a permutation that may depend on ``p``.  :func:`is_isomorphic`
decides this by comparing sorted multisets; :func:`is_isomorphic_oracle`
searches for the permutations explicitly and is kept as a cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from . import brauer
from .brauer import BrauerClass, FieldModel, canonical_key
from .csa import CentralSimpleAlgebra
from .errors import ModelMismatch, RankTooLarge

__all__ = [
    "Motive",
    "DEFAULT_ORACLE_BOUND",
    "motive_of_csa",
    "motive_of",
    "direct_sum",
    "trivial_motive",
    "rank",
    "relevant_primes",
    "p_parts",
    "compare_primes",
    "is_isomorphic",
    "find_witnesses",
    "is_isomorphic_oracle",
]

DEFAULT_ORACLE_BOUND = 8


@dataclass(frozen=True)
class Motive:
    model: FieldModel
    summands: tuple[BrauerClass, ...] = ()

    def __post_init__(self):
        summands = tuple(self.summands)
        for c in summands:
            if c.model != self.model:
                raise ModelMismatch(f"summand {c} belongs to {c.model}, not {self.model}")
        object.__setattr__(self, "summands", tuple(sorted(summands, key=canonical_key)))

    @property
    def rank(self) -> int:
        return len(self.summands)

    def __add__(self, other):
        if not isinstance(other, Motive):
            return NotImplemented
        return direct_sum(self, other)

    def __len__(self):
        return len(self.summands)

    def __str__(self):
        return "{" + ", ".join(map(str, self.summands)) + "}"


def motive_of_csa(A: CentralSimpleAlgebra) -> Motive:
    return Motive(A.model, (A.brauer_class,))


def motive_of(model: FieldModel, algebras: Iterable[CentralSimpleAlgebra]) -> Motive:
    """``U(A1) + ... + U(An)`` for algebras over ``model``."""
    return Motive(model, tuple(A.brauer_class for A in algebras))


def _check(M1: Motive, M2: Motive) -> None:
    if M1.model != M2.model:
        raise ModelMismatch(f"motives over {M1.model} and {M2.model}")


def direct_sum(M1: Motive, M2: Motive) -> Motive:
    _check(M1, M2)
    return Motive(M1.model, M1.summands + M2.summands)


def trivial_motive(model: FieldModel, n: int) -> Motive:
    """``U(k)^n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Motive(model, (brauer.zero_class(model),) * n)


def rank(M: Motive) -> int:
    return M.rank


def relevant_primes(M1: Motive, M2: Motive) -> set[int]:
    """Primes at which the p-part condition is not vacuous.

    Outside this set every summand on both sides has zero p-part, so any
    permutation works; the condition over all primes reduces to this
    finite set.
    """
    _check(M1, M2)
    out: set[int] = set()
    for c in M1.summands + M2.summands:
        out |= brauer.support_primes(c)
    return out


def p_parts(M: Motive, p: int) -> list[BrauerClass]:
    """Sorted multiset of the ``p``-parts of the summands of ``M``."""
    return sorted((brauer.p_part(c, p) for c in M.summands), key=canonical_key)


def compare_primes(M1: Motive, M2: Motive) -> list[tuple[int, list[BrauerClass], list[BrauerClass], bool]]:
    """Per relevant prime: ``(p, p-parts of M1, p-parts of M2, equal?)``, primes ascending."""
    rows = []
    for p in sorted(relevant_primes(M1, M2)):
        left, right = p_parts(M1, p), p_parts(M2, p)
        rows.append((p, left, right, left == right))
    return rows


def is_isomorphic(M1: Motive, M2: Motive) -> bool:
    _check(M1, M2)
    if M1.rank != M2.rank:
        return False
    return all(match for _, _, _, match in compare_primes(M1, M2))


def find_witnesses(
    M1: Motive, M2: Motive, bound: int = DEFAULT_ORACLE_BOUND
) -> Optional[dict[int, tuple[int, ...]]]:
    """Exhaustive search for the per-prime permutations.

    Returns ``{p: sigma}`` with ``p_part(M2[j], p) == p_part(M1[sigma[j]], p)``
    for every ``j`` (indices into the sorted summand tuples), or ``None``
    when some prime has no such permutation.  Raises :class:`RankTooLarge`
    if the common rank exceeds ``bound``.
    """
    _check(M1, M2)
    n = M1.rank
    if n != M2.rank:
        return None
    if n > bound:
        raise RankTooLarge(n, bound)
    witnesses = {}
    for p in sorted(relevant_primes(M1, M2)):
        a = [brauer.p_part(c, p) for c in M1.summands]
        b = [brauer.p_part(c, p) for c in M2.summands]
        for sigma in itertools.permutations(range(n)):
            if all(b[j] == a[sigma[j]] for j in range(n)):
                witnesses[p] = sigma
                break
        else:
            return None
    return witnesses


def is_isomorphic_oracle(M1: Motive, M2: Motive, bound: int = DEFAULT_ORACLE_BOUND) -> bool:
    return find_witnesses(M1, M2, bound) is not None
