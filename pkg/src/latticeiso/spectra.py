"""Angle spectra of lattice vectors of fixed length, and angle witnesses.

All comparisons are on integer dot products. Two vectors of squared length r
with dot product d meet at an angle whose cosine is d/r, so a cosine c is
realized at r exactly when c*r is one of the dot products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import factorize, is_realized, primitive_representation, require_core
from .errors import IdenticalRadicands, NotRealized
from .lattice import neighbor_vectors

__all__ = [
    "RationalCosine",
    "AngleWitness",
    "dot_spectrum",
    "cosine_spectrum",
    "angle_witness",
    "is_angle_realized",
    "separating_prime_power",
]


@dataclass(frozen=True, order=True)
class RationalCosine:
    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError(f"denominator must be positive, got {self.den}")
        if gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not in lowest terms")
        if abs(self.num) > self.den:
            raise ValueError(f"{self.num}/{self.den} is not a cosine")

    @classmethod
    def of(cls, num: int, den: int) -> "RationalCosine":
        f = Fraction(num, den)
        return cls(f.numerator, f.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self):
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


@lru_cache(maxsize=1024)
def dot_spectrum(r: int) -> frozenset[int]:
    """Every dot product w . w' over pairs of vectors of squared length r."""
    if not is_realized(r):
        raise NotRealized(r)
    vecs = neighbor_vectors(r).vectors
    return frozenset(x1 * x2 + y1 * y2 for x1, y1 in vecs for x2, y2 in vecs)


def cosine_spectrum(r: int) -> frozenset[RationalCosine]:
    return frozenset(RationalCosine.of(d, r) for d in dot_spectrum(r))


def is_angle_realized(c: RationalCosine, r: int) -> bool:
    """True iff some pair of vectors of squared length r meets at cosine c."""
    # c = d / r  <=>  c.num * r == d * c.den
    lhs = c.num * r
    return any(lhs == d * c.den for d in dot_spectrum(r))


@dataclass(frozen=True)
class AngleWitness:
    """Vectors <a,b>, <b,a> of squared length r1 meet at a cosine 2ab/r1 that
    no pair of vectors of squared length r2 realizes.

    ``p**n`` divides r1 but not r2; since p divides neither a nor b, it cannot
    divide 2*a*b*r2 while it divides r1 * d for every dot product d.
    """

    r1: int
    r2: int
    a: int
    b: int
    cosine: RationalCosine
    p: int
    n: int


def separating_prime_power(r1: int, r2: int) -> tuple[int, int]:
    """The largest p**n with p**n | r1 and p**n not dividing r2.

    ``n`` is the full exponent of p in r1. Ties cannot occur since distinct
    prime powers differ.
    """
    best = None
    for p, e in factorize(r1):
        k = 0
        m = r2
        while m % p == 0:
            m //= p
            k += 1
        if e > k and (best is None or p**e > best[0] ** best[1]):
            best = (p, e)
    if best is None:
        raise ValueError(f"{r1} divides {r2}; no separating prime power")
    return best


def angle_witness(r1: int, r2: int) -> AngleWitness:
    """Build and check the witness that some angle at r1 is absent at r2.

    Both radicands must be core (every prime factor 1 mod 4) with r1 > r2.
    """
    if r1 == r2:
        raise IdenticalRadicands(r1)
    if r1 < r2:
        raise ValueError(f"angle witness needs r1 > r2, got ({r1}, {r2})")
    require_core(r1)
    require_core(r2)
    p, n = separating_prime_power(r1, r2)
    rep = primitive_representation(r1)
    a, b = rep.a, rep.b
    w = AngleWitness(r1, r2, a, b, RationalCosine.of(2 * a * b, r1), p, n)
    lhs = 2 * a * b * r2
    if any(lhs == r1 * d for d in dot_spectrum(r2)):
        raise AssertionError(f"angle witness for ({r1}, {r2}) is realized at {r2}")
    return w
