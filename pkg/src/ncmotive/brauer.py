"""Exact arithmetic in Brauer groups of a handful of computable field models.

Every class is stored in canonical form, so equality of classes is plain
structural equality of :class:`BrauerClass` values.  Invariants in ``Q/Z`` are
:class:`fractions.Fraction` objects reduced into ``[0, 1)``.

Supported models:

``TrivialBr``
    algebraically closed or finite fields, ``Br = 0``.
``RealField``
    ``Br(R) = Z/2``, payload ``0`` or ``1/2``.
``LocalField``
    non-archimedean local fields, ``Br = Q/Z``.
``GlobalRationals``
    ``Br(Q)``, a finitely supported map from places to local invariants
    summing to zero, with archimedean invariant in ``{0, 1/2}``.
``AbstractAbelian``
    ``Z/m1 x ... x Z/mk``; index is *assumed* equal to the exponent.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Iterator, Mapping, Union

from sympy import factorint, isprime

from .errors import InvalidClass, ModelMismatch

__all__ = [
    "INF",
    "Place",
    "FieldModel",
    "TrivialBr",
    "RealField",
    "LocalField",
    "GlobalRationals",
    "AbstractAbelian",
    "TRIVIAL",
    "REAL",
    "LOCAL",
    "GLOBAL",
    "BrauerClass",
    "zero_class",
    "add",
    "neg",
    "multiple",
    "order",
    "class_index",
    "index_is_assumed",
    "p_part",
    "primary_decomposition",
    "support_primes",
    "canonical_key",
    "elements",
    "factorize",
    "is_prime",
    "place_key",
]

INF = "inf"
Place = Union[int, str]

_HALF = Fraction(1, 2)


@lru_cache(maxsize=4096)
def _factor_cached(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(factorint(n).items()))


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of a positive integer as ``{p: e}``, primes ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    return dict(_factor_cached(n))


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    return bool(isprime(n))


def place_key(place: Place) -> tuple[int, int]:
    # finite primes ascending, then the archimedean place
    if place == INF:
        return (1, 0)
    return (0, place)


def _mod1(x: Any) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise InvalidClass(f"invariant must be an exact rational, got {x!r}")
    return Fraction(x) % 1


def _lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


class FieldModel:
    """A Brauer-group model.  Subclasses define the payload arithmetic."""

    #: ``True`` when ``class_index`` relies on the index = exponent assumption
    index_assumed = False
    #: ``True`` when :func:`elements` can enumerate the whole group
    finite = False

    def canonical(self, payload: Any) -> Any:
        raise NotImplementedError

    def zero_payload(self) -> Any:
        raise NotImplementedError

    def add_payload(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def neg_payload(self, a: Any) -> Any:
        raise NotImplementedError

    def scale_payload(self, a: Any, n: int) -> Any:
        raise NotImplementedError

    def order_payload(self, a: Any) -> int:
        raise NotImplementedError

    def key_payload(self, a: Any) -> tuple:
        raise NotImplementedError

    def format_payload(self, a: Any) -> str:
        raise NotImplementedError

    def payloads(self) -> Iterator[Any]:
        raise TypeError(f"{self} is not a finite group")

    def __call__(self, payload: Any = None) -> "BrauerClass":
        if payload is None:
            payload = self.zero_payload()
        return BrauerClass(self, payload)


def _format_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class TrivialBr(FieldModel):
    finite = True

    def canonical(self, payload):
        if payload in ((), 0, None):
            return ()
        raise InvalidClass(f"the trivial Brauer group has only the zero class, got {payload!r}")

    def zero_payload(self):
        return ()

    def add_payload(self, a, b):
        return ()

    def neg_payload(self, a):
        return ()

    def scale_payload(self, a, n):
        return ()

    def order_payload(self, a):
        return 1

    def key_payload(self, a):
        return ()

    def format_payload(self, a):
        return "0"

    def payloads(self):
        yield ()

    def __str__(self):
        return "trivial"


@dataclass(frozen=True)
class LocalField(FieldModel):
    def canonical(self, payload):
        return _mod1(payload)

    def zero_payload(self):
        return Fraction(0)

    def add_payload(self, a, b):
        return (a + b) % 1

    def neg_payload(self, a):
        return -a % 1

    def scale_payload(self, a, n):
        return (a * n) % 1

    def order_payload(self, a):
        return a.denominator

    def key_payload(self, a):
        return (a,)

    def format_payload(self, a):
        return _format_fraction(a)

    def __str__(self):
        return "local"


@dataclass(frozen=True)
class RealField(LocalField):
    finite = True

    def canonical(self, payload):
        x = _mod1(payload)
        if x not in (0, _HALF):
            raise InvalidClass(f"Br(R) = Z/2 only contains 0 and 1/2, got {_format_fraction(x)}")
        return x

    def payloads(self):
        yield Fraction(0)
        yield _HALF

    def __str__(self):
        return "real"


@dataclass(frozen=True)
class GlobalRationals(FieldModel):
    """``Br(Q)`` via Hasse invariants.

    Payload is a tuple of ``(place, invariant)`` pairs sorted by place, with
    no zero invariants.  Input may be any mapping or iterable of pairs.
    """

    def canonical(self, payload):
        if isinstance(payload, Mapping):
            items = list(payload.items())
        else:
            items = list(payload)
        seen = set()
        out = []
        total = Fraction(0)
        for pair in items:
            try:
                place, inv = pair
            except (TypeError, ValueError):
                raise InvalidClass(f"expected (place, invariant) pairs, got {pair!r}") from None
            if place != INF:
                if isinstance(place, bool) or not isinstance(place, int) or not is_prime(place):
                    raise InvalidClass(f"place must be a prime or {INF!r}, got {place!r}")
            if place in seen:
                raise InvalidClass(f"place {place} listed twice")
            seen.add(place)
            inv = _mod1(inv)
            if place == INF and inv not in (0, _HALF):
                raise InvalidClass(
                    f"archimedean invariant must be 0 or 1/2, got {_format_fraction(inv)}"
                )
            total += inv
            if inv:
                out.append((place, inv))
        if total % 1:
            raise InvalidClass(
                f"reciprocity violated: invariants sum to {_format_fraction(total % 1)}, not 0 mod 1"
            )
        out.sort(key=lambda pi: place_key(pi[0]))
        return tuple(out)

    def zero_payload(self):
        return ()

    def add_payload(self, a, b):
        acc = dict(a)
        for place, inv in b:
            acc[place] = (acc.get(place, 0) + inv) % 1
        return self._pack(acc)

    def neg_payload(self, a):
        return tuple((place, -inv % 1) for place, inv in a)

    def scale_payload(self, a, n):
        return self._pack({place: (inv * n) % 1 for place, inv in a})

    @staticmethod
    def _pack(acc):
        return tuple(sorted(((p, v) for p, v in acc.items() if v), key=lambda pi: place_key(pi[0])))

    def order_payload(self, a):
        return _lcm(inv.denominator for _, inv in a)

    def key_payload(self, a):
        return (tuple(place_key(p) for p, _ in a), tuple(inv for _, inv in a))

    def format_payload(self, a):
        if not a:
            return "0"
        return " + ".join(f"{_format_fraction(inv)}@{place}" for place, inv in a)

    def __str__(self):
        return "global"


@dataclass(frozen=True)
class AbstractAbelian(FieldModel):
    """``Z/m1 x ... x Z/mk`` standing in for ``Br(k)`` of an unspecified field."""

    orders: tuple[int, ...] = field(default=())
    index_assumed = True
    finite = True

    def __post_init__(self):
        orders = tuple(self.orders)
        if not orders:
            raise ValueError("AbstractAbelian needs at least one cyclic factor")
        for m in orders:
            if isinstance(m, bool) or not isinstance(m, int) or m < 2:
                raise ValueError(f"cyclic factor orders must be integers >= 2, got {m!r}")
        object.__setattr__(self, "orders", orders)

    def canonical(self, payload):
        try:
            residues = tuple(payload)
        except TypeError:
            raise InvalidClass(f"expected a residue vector, got {payload!r}") from None
        if len(residues) != len(self.orders):
            raise InvalidClass(
                f"expected {len(self.orders)} residues for {self}, got {len(residues)}"
            )
        for r in residues:
            if isinstance(r, bool) or not isinstance(r, int):
                raise InvalidClass(f"residues must be integers, got {r!r}")
        return tuple(r % m for r, m in zip(residues, self.orders))

    def zero_payload(self):
        return (0,) * len(self.orders)

    def add_payload(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.orders))

    def neg_payload(self, a):
        return tuple(-x % m for x, m in zip(a, self.orders))

    def scale_payload(self, a, n):
        return tuple((x * n) % m for x, m in zip(a, self.orders))

    def order_payload(self, a):
        return _lcm(m // math.gcd(x, m) for x, m in zip(a, self.orders))

    def key_payload(self, a):
        return a

    def format_payload(self, a):
        return "(" + ",".join(map(str, a)) + ")"

    def payloads(self):
        return itertools.product(*(range(m) for m in self.orders))

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def __str__(self):
        return "abstract " + ",".join(map(str, self.orders))


TRIVIAL = TrivialBr()
REAL = RealField()
LOCAL = LocalField()
GLOBAL = GlobalRationals()


@dataclass(frozen=True)
class BrauerClass:
    """An element of ``Br(k)`` in a given model.

    The payload is canonicalised on construction; invalid payloads raise
    :class:`~ncmotive.errors.InvalidClass`.
    """

    model: FieldModel
    payload: Any

    def __post_init__(self):
        if not isinstance(self.model, FieldModel):
            raise TypeError(f"model must be a FieldModel, got {self.model!r}")
        object.__setattr__(self, "payload", self.model.canonical(self.payload))

    def __add__(self, other):
        if not isinstance(other, BrauerClass):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        if not isinstance(other, BrauerClass):
            return NotImplemented
        return add(self, neg(other))

    def __mul__(self, n):
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        return multiple(self, n)

    __rmul__ = __mul__

    def __bool__(self):
        return self.payload != self.model.zero_payload()

    def is_zero(self) -> bool:
        return not self

    def __str__(self):
        return self.model.format_payload(self.payload)

    def __repr__(self):
        return f"BrauerClass({self.model}, {self})"


def _same_model(c1: BrauerClass, c2: BrauerClass) -> FieldModel:
    if c1.model != c2.model:
        raise ModelMismatch(f"cannot combine classes of {c1.model} and {c2.model}")
    return c1.model


def _raw(model: FieldModel, payload: Any) -> BrauerClass:
    # payload already canonical; skip re-validation on hot paths
    c = object.__new__(BrauerClass)
    object.__setattr__(c, "model", model)
    object.__setattr__(c, "payload", payload)
    return c


def zero_class(model: FieldModel) -> BrauerClass:
    """The identity of the model's Brauer group, i.e. the class of ``k``."""
    return _raw(model, model.zero_payload())


def add(c1: BrauerClass, c2: BrauerClass) -> BrauerClass:
    """Group law: ``[A] + [B] = [A (x) B]``."""
    model = _same_model(c1, c2)
    return _raw(model, model.add_payload(c1.payload, c2.payload))


def neg(c: BrauerClass) -> BrauerClass:
    """Inverse, the class of the opposite algebra."""
    return _raw(c.model, c.model.neg_payload(c.payload))


def multiple(c: BrauerClass, n: int) -> BrauerClass:
    """``n * c`` for any integer ``n``."""
    return _raw(c.model, c.model.scale_payload(c.payload, n))


def order(c: BrauerClass) -> int:
    return c.model.order_payload(c.payload)


def class_index(c: BrauerClass) -> int:
    """Index of the division algebra representing ``c``.

    Equal to the order for every built-in model.  For
    :class:`AbstractAbelian` this is a modelling assumption, see
    :func:`index_is_assumed`.
    """
    return order(c)


def index_is_assumed(model: FieldModel) -> bool:
    return model.index_assumed


def p_part(c: BrauerClass, p: int) -> BrauerClass:
    """The ``p``-primary component of ``c``.

    With ``n = order(c) = p**e * q`` and ``gcd(p, q) = 1``, the component is
    ``(q * (q^-1 mod p**e)) * c``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = order(c)
    pe = 1
    while n % p == 0:
        n //= p
        pe *= p
    if pe == 1:
        return zero_class(c.model)
    q = n
    return multiple(c, q * pow(q, -1, pe))


def primary_decomposition(c: BrauerClass) -> dict[int, BrauerClass]:
    """Map each prime dividing ``order(c)`` to the ``p``-part of ``c``."""
    return {p: p_part(c, p) for p in factorize(order(c))}


def support_primes(c: BrauerClass) -> set[int]:
    return set(factorize(order(c)))


def canonical_key(c: BrauerClass) -> tuple:
    """Sort key giving a total order on the classes of one model."""
    return c.model.key_payload(c.payload)


def elements(model: FieldModel) -> Iterator[BrauerClass]:
    """Enumerate a finite Brauer group (trivial, real and abstract models)."""
    for payload in model.payloads():
        yield _raw(model, payload)
