"""Brute-force oracles and random generators shared by the test modules.

The oracles here deliberately avoid the closed forms used by the library:
orders are found by repeated addition, primary parts by enumeration.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import defaultdict
from fractions import Fraction

from ncmotive import brauer
from ncmotive.brauer import GLOBAL, INF, LOCAL, AbstractAbelian, BrauerClass
from ncmotive.csa import CentralSimpleAlgebra
from ncmotive.motive import Motive

# filled in by test_acceptance, printed by conftest at the end of the session
ACCEPTANCE_LINES: list[str] = []

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def brute_order(c: BrauerClass, limit: int = 10**4) -> int:
    acc = c
    for n in range(1, limit + 1):
        if acc.is_zero():
            return n
        acc = acc + c
    raise AssertionError(f"order of {c} exceeds {limit}")


def prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def brute_decompositions(model: AbstractAbelian) -> dict[BrauerClass, list[dict[int, BrauerClass]]]:
    """Every way to write each element as a sum of parts of p-power order.

    Parts are taken over all primes dividing the group order; zero parts are
    dropped from the returned dicts.
    """
    elems = list(brauer.elements(model))
    primes = prime_divisors(model.size)
    # c has p-power order iff p^e kills it, p^e the full p-part of |G|
    pieces = {}
    for p in primes:
        pe = p ** _valuation(model.size, p)
        pieces[p] = [c for c in elems if brauer.multiple(c, pe).is_zero()]
    out: dict[BrauerClass, list[dict[int, BrauerClass]]] = defaultdict(list)
    for combo in itertools.product(*(pieces[p] for p in primes)):
        total = brauer.zero_class(model)
        for part in combo:
            total = total + part
        out[total].append({p: part for p, part in zip(primes, combo) if not part.is_zero()})
    return out


def brute_local_parts(c: BrauerClass) -> list[dict[int, Fraction]]:
    """All decompositions of a local invariant a/n into sums of k_p / p^e_p."""
    n = c.payload.denominator
    fact = {p: 0 for p in prime_divisors(n)}
    for p in fact:
        m = n
        while m % p == 0:
            m //= p
            fact[p] += 1
    primes = list(fact)
    ranges = [[Fraction(k, p ** fact[p]) for k in range(p ** fact[p])] for p in primes]
    found = []
    for combo in itertools.product(*ranges):
        if sum(combo) % 1 == c.payload:
            found.append({p: x for p, x in zip(primes, combo) if x})
    return found


def _valuation(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def invariant_sum(c: BrauerClass) -> Fraction:
    return sum((inv for _, inv in c.payload), Fraction(0)) % 1


def abelian_groups_up_to(limit: int) -> list[tuple[int, ...]]:
    """Invariant-factor lists m1 | m2 | ... with product <= limit."""
    out = []

    def extend(prefix, prod):
        if prefix:
            out.append(tuple(prefix))
        last = prefix[-1] if prefix else 1
        m = last if prefix else 2
        while prod * m <= limit:
            extend(prefix + [m], prod * m)
            m += last

    extend([], 1)
    return out


# --- random generators -------------------------------------------------------


def random_local_class(rng: random.Random, max_den: int = 30) -> BrauerClass:
    den = rng.randint(1, max_den)
    return BrauerClass(LOCAL, Fraction(rng.randrange(den), den))


def random_global_class(rng: random.Random, max_den: int = 30, max_places: int = 4) -> BrauerClass:
    """All invariants share a denominator n <= max_den; the last finite place absorbs the sum."""
    n = rng.randint(1, max_den)
    places = rng.sample(SMALL_PRIMES, rng.randint(1, max_places))
    inv = {p: Fraction(rng.randrange(n), n) for p in places[:-1]}
    if n % 2 == 0 and rng.random() < 0.5:
        inv[INF] = Fraction(1, 2)
    inv[places[-1]] = -sum(inv.values(), Fraction(0)) % 1
    return BrauerClass(GLOBAL, inv)


def random_violating_map(rng: random.Random, max_den: int = 30) -> dict:
    c = random_global_class(rng, max_den)
    inv = dict(c.payload)
    den = rng.randint(2, max_den)
    bump = Fraction(rng.randrange(1, den), den)
    p = rng.choice([q for q in SMALL_PRIMES])
    inv[p] = (inv.get(p, 0) + bump) % 1
    return inv


def random_algebra(rng: random.Random, cls: BrauerClass, max_deg: int = 30) -> CentralSimpleAlgebra:
    ind = brauer.order(cls)
    assert ind <= max_deg
    return CentralSimpleAlgebra(cls, ind * rng.randint(1, max_deg // ind))


def random_bounded_class(rng: random.Random, model, max_den: int = 30) -> BrauerClass:
    if model == LOCAL:
        return random_local_class(rng, max_den)
    while True:
        c = random_global_class(rng, max_den)
        if brauer.order(c) <= max_den:
            return c


def shuffled_partner(rng: random.Random, M: Motive) -> Motive:
    """A motive isomorphic to ``M`` built by permuting p-parts independently per prime."""
    n = M.rank
    primes = sorted(set().union(*(brauer.support_primes(c) for c in M.summands))) if n else []
    out = [brauer.zero_class(M.model) for _ in range(n)]
    for p in primes:
        parts = [brauer.p_part(c, p) for c in M.summands]
        rng.shuffle(parts)
        out = [a + b for a, b in zip(out, parts)]
    return Motive(M.model, tuple(out))


def all_multisets(elems: list, max_rank: int):
    for r in range(max_rank + 1):
        yield from itertools.combinations_with_replacement(elems, r)


def lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


# --- random programs for the parser round trip --------------------------------


def class_literal(c: BrauerClass):
    from ncmotive.syntax import GlobalLit, RationalLit, VectorLit

    if isinstance(c.model, AbstractAbelian):
        return VectorLit(c.payload)
    if c.model == GLOBAL:
        return GlobalLit(tuple((RationalLit(i.numerator, i.denominator), p) for p, i in c.payload))
    if c.model == brauer.TRIVIAL:
        return RationalLit(0, 1)
    return RationalLit(c.payload.numerator, c.payload.denominator)


def random_class(rng: random.Random, model) -> BrauerClass:
    if model == LOCAL:
        return random_local_class(rng, 30)
    if model == GLOBAL:
        return random_global_class(rng, 12)
    return rng.choice(list(brauer.elements(model)))


MODELS = [brauer.TRIVIAL, brauer.REAL, LOCAL, GLOBAL, AbstractAbelian((2, 3)), AbstractAbelian((4, 9)),
          AbstractAbelian((12,))]


def random_program(rng: random.Random):
    """A random, semantically valid program AST together with its class values."""
    from ncmotive import syntax as S

    model = rng.choice(MODELS)

    def spec(name=None):
        c = random_class(rng, model)
        deg = brauer.order(c) * rng.randint(1, 3)
        return S.AlgebraSpec(class_literal(c), deg, name)

    bindings = []
    for i in range(rng.randint(0, 3)):
        name = rng.choice(["A", "B", "D", "alg", "X_1"]) + str(i)
        bindings.append(S.Binding(name, spec(rng.choice([None, "lbl"]))))

    def ref():
        if bindings and rng.random() < 0.5:
            return S.NameRef(rng.choice(bindings).name)
        return spec(rng.choice([None, None, "named"]))

    def motive_expr():
        terms = []
        for _ in range(rng.randint(1, 3)):
            r = rng.random()
            if r < 0.5:
                terms.append(S.UTerm(ref()))
            elif r < 0.8:
                terms.append(S.UnitTerm(rng.randint(0, 3)))
            else:
                terms.append(S.SodTerm(ref()))
        return S.MotiveExpr(tuple(terms))

    kind = rng.choice(S.COMMANDS)
    if kind == "info":
        query = S.InfoQuery(ref())
    elif kind == "decompose":
        query = S.DecomposeQuery(class_literal(random_class(rng, model)))
    elif kind == "iso":
        query = S.IsoQuery(motive_expr(), motive_expr())
    else:
        query = S.BsCheckQuery(ref())
    return S.Program(model, tuple(bindings), query)
