"""Non-isomorphism certificates for pairs of lattice distance graphs.

G(Z^2, sqrt r) splits into r/core(r) components, each isomorphic to
G(Z^2, sqrt core(r)). Two realized radicands therefore either differ in their
component counts, or share a count and have distinct cores; in the second
case an angle realized at the larger core but not the smaller one separates
them.

:func:`verify_certificate` re-derives every claim with its own brute-force
arithmetic and never calls back into the routines that produced the
certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Any

from .arith import is_realized, radicand
from .errors import IdenticalRadicands, NotRealized
from .lattice import component_count
from .spectra import AngleWitness, RationalCosine, angle_witness

__all__ = [
    "FORMAT_VERSION",
    "COMPONENT_COUNT",
    "ANGLE_SPECTRUM",
    "Certificate",
    "certify_nonisomorphic",
    "verify_certificate",
]

FORMAT_VERSION = "1"
COMPONENT_COUNT = "component_count"
ANGLE_SPECTRUM = "angle_spectrum"

_WITNESS_FIELDS = ("r1", "r2", "a", "b", "cosine", "p", "n")


@dataclass(frozen=True)
class Certificate:
    """Facts implying G(Z^2, sqrt r1) and G(Z^2, sqrt r2) are not isomorphic.

    Both kinds record the component counts and cores of r1 and r2. An
    ``angle_spectrum`` certificate also carries an :class:`AngleWitness` on the
    cores, larger core first.
    """

    r1: int
    r2: int
    kind: str
    k1: int
    k2: int
    core1: int
    core2: int
    witness: AngleWitness | None = None

    def to_dict(self) -> dict[str, Any]:
        w = None
        if self.witness is not None:
            w = {
                "r1": self.witness.r1,
                "r2": self.witness.r2,
                "a": self.witness.a,
                "b": self.witness.b,
                "cosine": [self.witness.cosine.num, self.witness.cosine.den],
                "p": self.witness.p,
                "n": self.witness.n,
            }
        return {
            "format_version": FORMAT_VERSION,
            "kind": self.kind,
            "r1": self.r1,
            "r2": self.r2,
            "k1": self.k1,
            "k2": self.k2,
            "core1": self.core1,
            "core2": self.core2,
            "witness": w,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Certificate":
        if d.get("format_version", FORMAT_VERSION) != FORMAT_VERSION:
            raise ValueError(f"unsupported format_version {d.get('format_version')!r}")
        w = d.get("witness")
        witness = None
        if w is not None:
            num, den = w["cosine"]
            witness = AngleWitness(
                _int(w["r1"]), _int(w["r2"]), _int(w["a"]), _int(w["b"]),
                RationalCosine(_int(num), _int(den)), _int(w["p"]), _int(w["n"]),
            )
        return cls(
            _int(d["r1"]), _int(d["r2"]), str(d["kind"]),
            _int(d["k1"]), _int(d["k2"]), _int(d["core1"]), _int(d["core2"]), witness,
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


def _int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise TypeError(f"expected an integer, got {v!r}")
    return v


def certify_nonisomorphic(r1: int, r2: int) -> Certificate:
    """Certificate that the distance graphs at sqrt(r1) and sqrt(r2) differ."""
    if r1 == r2:
        raise IdenticalRadicands(r1)
    for name, r in (("r1", r1), ("r2", r2)):
        if r < 1 or not is_realized(r):
            raise NotRealized(r, which=name)
    k1, k2 = component_count(r1), component_count(r2)
    c1, c2 = radicand(r1).core, radicand(r2).core
    if k1 != k2:
        return Certificate(r1, r2, COMPONENT_COUNT, k1, k2, c1, c2)
    # k = r / core, so equal counts with r1 != r2 force c1 != c2
    hi, lo = max(c1, c2), min(c1, c2)
    return Certificate(r1, r2, ANGLE_SPECTRUM, k1, k2, c1, c2, angle_witness(hi, lo))


# --- independent checker -------------------------------------------------


def _vectors(r):
    out = []
    m = isqrt(r)
    for x in range(-m, m + 1):
        rest = r - x * x
        y = isqrt(rest)
        if y * y == rest:
            out.append((x, y))
            if y:
                out.append((x, -y))
    return out


def _index(vecs):
    # index of the lattice spanned by vecs = gcd of all 2x2 minors
    g = 0
    for i, (x1, y1) in enumerate(vecs):
        for x2, y2 in vecs[i + 1:]:
            g = gcd(g, x1 * y2 - x2 * y1)
    return g


def _core(r):
    core = 1
    m = r
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e and p % 4 == 1:
            core *= p**e
        p += 1
    if m > 1 and m % 4 == 1:
        core *= m
    return core


def _is_prime(n):
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def _largest_separating_prime_power(r1, r2):
    best = 0
    for p in range(2, r1 + 1):
        if r1 % p or not _is_prime(p):
            continue
        q = p
        while r1 % (q * p) == 0:
            q *= p
        if r2 % q and q > best:
            best = q
    return best


def _check_witness(w: AngleWitness, core1: int, core2: int) -> bool:
    if (w.r1, w.r2) != (max(core1, core2), min(core1, core2)):
        return False
    if w.r1 == w.r2:
        return False
    a, b = w.a, w.b
    if not (a >= b >= 1 and a * a + b * b == w.r1 and gcd(a, b) == 1):
        return False
    # canonical choice: smallest leading entry among primitive representations
    for a2 in range(isqrt((w.r1 + 1) // 2), a):
        b2 = isqrt(w.r1 - a2 * a2)
        if a2 >= b2 and a2 * a2 + b2 * b2 == w.r1 and gcd(a2, b2) == 1:
            return False
    g = gcd(2 * a * b, w.r1)
    if (w.cosine.num, w.cosine.den) != (2 * a * b // g, w.r1 // g):
        return False
    if not (_is_prime(w.p) and w.p % 4 == 1 and w.n >= 1):
        return False
    pn = w.p**w.n
    if w.r1 % pn or w.r2 % pn == 0:
        return False
    if w.r1 % (pn * w.p) == 0 or pn != _largest_separating_prime_power(w.r1, w.r2):
        return False
    dots = {x1 * x2 + y1 * y2 for x1, y1 in _vectors(w.r2) for x2, y2 in _vectors(w.r2)}
    if not dots:
        return False
    lhs = 2 * a * b * w.r2
    for d in dots:
        if lhs == w.r1 * d:
            return False
        if (w.r1 * d) % pn:
            return False
    return lhs % pn != 0


def verify_certificate(c) -> bool:
    """Recompute every fact in ``c`` from scratch. Malformed input gives False."""
    try:
        if not isinstance(c, Certificate):
            c = Certificate.from_dict(c)
        return _verify(c)
    except (KeyError, TypeError, ValueError, AttributeError, ZeroDivisionError):
        return False


def _verify(c: Certificate) -> bool:
    if c.r1 < 1 or c.r2 < 1 or c.r1 == c.r2:
        return False
    v1, v2 = _vectors(c.r1), _vectors(c.r2)
    if not v1 or not v2:
        return False
    if (c.k1, c.k2) != (_index(v1), _index(v2)):
        return False
    if (c.core1, c.core2) != (_core(c.r1), _core(c.r2)):
        return False
    if c.kind == COMPONENT_COUNT:
        return c.k1 != c.k2 and c.witness is None
    if c.kind == ANGLE_SPECTRUM:
        if c.k1 != c.k2 or c.core1 == c.core2 or c.witness is None:
            return False
        return _check_witness(c.witness, c.core1, c.core2)
    return False
