"""Exact number theory for squared lattice distances.

Everything here works on Python ints, so nothing overflows. Factorization is
plain trial division, which is plenty for radicands up to about 10**10.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt

from .errors import (
    BadParity,
    NoPrimitiveRepresentation,
    NotCoprime,
    NotCoreRadicand,
    NotRealized,
)

__all__ = [
    "Factorization",
    "Radicand",
    "Representation",
    "BezoutPair",
    "factorize",
    "radicand",
    "is_realized",
    "is_core",
    "all_representations",
    "primitive_representation",
    "mandatory_gcd_divisor",
    "core_decompose",
    "solve_unit_bezout",
]


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factor list {self.factors!r}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __iter__(self):
        return iter(self.factors)


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    factors = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    # 6k +- 1 wheel
    p = 5
    step = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


@dataclass(frozen=True)
class Radicand:
    """A squared distance r split as 2^gamma * (1 mod 4 part) * (3 mod 4 part).

    ``q_part`` holds ``(q, beta)`` where q appears in r to the power 2*beta;
    when r is not realized beta is reported as the floor of half the exponent
    and ``realized`` is False.
    """

    r: int
    factorization: Factorization
    gamma: int
    p_part: tuple[tuple[int, int], ...]
    q_part: tuple[tuple[int, int], ...]
    realized: bool
    h: int
    core: int

    @property
    def is_core(self) -> bool:
        return self.realized and self.core == self.r


@lru_cache(maxsize=4096)
def radicand(r: int) -> Radicand:
    fac = factorize(r)
    gamma = 0
    p_part = []
    q_part = []
    realized = True
    for p, e in fac:
        if p == 2:
            gamma = e
        elif p % 4 == 1:
            p_part.append((p, e))
        else:
            if e % 2:
                realized = False
            q_part.append((p, e // 2))
    h = 2 ** (gamma // 2)
    for q, beta in q_part:
        h *= q**beta
    core = 1
    for p, alpha in p_part:
        core *= p**alpha
    return Radicand(r, fac, gamma, tuple(p_part), tuple(q_part), realized, h, core)


def is_realized(r: int) -> bool:
    """True iff r = a^2 + b^2 for some integers a, b."""
    return radicand(r).realized


def is_core(r: int) -> bool:
    """True iff every prime factor of r is 1 mod 4 (r = 1 included)."""
    return r >= 1 and radicand(r).is_core


@dataclass(frozen=True, order=True)
class Representation:
    a: int
    b: int
    r: int = field(compare=False)
    primitive: bool = field(compare=False)

    def __iter__(self):
        yield self.a
        yield self.b


def _rep(a: int, b: int) -> Representation:
    return Representation(a, b, a * a + b * b, gcd(a, b) == 1)


@lru_cache(maxsize=4096)
def _representations(r: int) -> tuple[Representation, ...]:
    out = []
    # a >= b >= 0 means a^2 >= r/2
    a = isqrt(r)
    while 2 * a * a >= r:
        rest = r - a * a
        b = isqrt(rest)
        if b * b == rest:
            out.append(_rep(a, b))
        a -= 1
    return tuple(out)


def all_representations(r: int) -> tuple[Representation, ...]:
    """Every canonical pair a >= b >= 0 with a^2 + b^2 = r, largest a first."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if not is_realized(r):
        return ()
    return _representations(r)


def primitive_representation(r: int) -> Representation:
    """The primitive representation of r with the smallest leading entry.

    Exists exactly when r is 1, 2, or (1 or 2) times a product of primes
    that are 1 mod 4.
    """
    rad = radicand(r)
    if not rad.realized:
        raise NotRealized(r)
    if rad.gamma > 1 or any(beta for _, beta in rad.q_part):
        raise NoPrimitiveRepresentation(
            f"r={r}: every representation has gcd divisible by h={rad.h}"
        )
    prims = [rep for rep in _representations(r) if rep.primitive]
    return min(prims, key=lambda rep: rep.a)


def mandatory_gcd_divisor(r: int) -> int:
    """h = 2^floor(gamma/2) * prod q^beta; divides gcd(a, b) of every representation."""
    return radicand(r).h


def core_decompose(r: int) -> tuple[int, int, tuple[tuple[int, int], ...]]:
    """Return ``(core, gamma, q_part)`` with r = core * 2^gamma * prod q^(2 beta)."""
    rad = radicand(r)
    if not rad.realized:
        raise NotRealized(r)
    return rad.core, rad.gamma, rad.q_part


@dataclass(frozen=True)
class BezoutPair:
    s: int
    t: int
    a: int
    b: int


def solve_unit_bezout(a: int, b: int) -> BezoutPair:
    """Solve s*a - t*b = -1 with the least nonnegative s.

    ``a`` must be even (possibly 0) and ``b`` odd and coprime to it.
    """
    if a < 0 or b < 1:
        raise ValueError(f"need a >= 0 and b >= 1, got ({a}, {b})")
    if a % 2 or b % 2 == 0:
        raise BadParity(f"need a even and b odd, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
    if b == 1:
        s = 0
    else:
        s = -pow(a, -1, b) % b
    t = (s * a + 1) // b
    return BezoutPair(s, t, a, b)


def require_core(r: int) -> Radicand:
    rad = radicand(r) if r >= 1 else None
    if rad is None or not rad.is_core:
        raise NotCoreRadicand(r)
    return rad
