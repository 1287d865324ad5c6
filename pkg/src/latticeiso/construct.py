"""Explicit bounded-length paths in G(Z^2, sqrt r) for core radicands r.

The building block is a list of steps of squared length r summing to (0, 1).
Its length is (s+t)(a+b-1)+1 where a^2 + b^2 = r is primitive with a even and
s*a - t*b = -1. Reflections of that list move one unit along any axis, and
concatenating them joins any two lattice points.

Walks built this way have up to ~r**1.5 steps, so they are held as a
:class:`StepSequence`: runs of equal steps nested with repeat counts. Length,
endpoint and the set of distinct steps come from the structure without
expanding it; iteration expands lazily.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterator

from .arith import primitive_representation, require_core, solve_unit_bezout
from .lattice import LatticeVector, as_vector

__all__ = [
    "StepSequence",
    "PathWitness",
    "DIRECTIONS",
    "unit_translation",
    "axis_translation",
    "build_path",
    "loop_erase",
]


class StepSequence(Sequence):
    """Immutable sequence of lattice steps stored as ``(part, repeat)`` pairs.

    A part is either a single :class:`LatticeVector` or another StepSequence.
    """

    def __init__(self, parts=()):
        norm = []
        for part, rep in parts:
            if rep < 0:
                raise ValueError(f"negative repeat count {rep}")
            if rep == 0:
                continue
            if not isinstance(part, StepSequence):
                part = as_vector(part)
            elif len(part) == 0:
                continue
            norm.append((part, int(rep)))
        self._parts = tuple(norm)
        n = 0
        tx = ty = 0
        for part, rep in self._parts:
            if isinstance(part, StepSequence):
                n += rep * len(part)
                px, py = part.total()
            else:
                n += rep
                px, py = part
            tx += rep * px
            ty += rep * py
        self._len = n
        self._total = LatticeVector(tx, ty)

    @classmethod
    def of(cls, vectors) -> "StepSequence":
        return cls((v, 1) for v in vectors)

    @property
    def parts(self):
        return self._parts

    def __len__(self):
        return self._len

    def total(self) -> LatticeVector:
        """Sum of all steps."""
        return self._total

    def __iter__(self) -> Iterator[LatticeVector]:
        for part, rep in self._parts:
            if isinstance(part, StepSequence):
                for _ in range(rep):
                    yield from part
            else:
                for _ in range(rep):
                    yield part

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(self._len))]
        if i < 0:
            i += self._len
        if not 0 <= i < self._len:
            raise IndexError("step index out of range")
        for part, rep in self._parts:
            if not isinstance(part, StepSequence):
                if i < rep:
                    return part
                i -= rep
                continue
            size = len(part)
            if i < size * rep:
                return part[i % size]
            i -= size * rep
        raise AssertionError("unreachable")

    def __eq__(self, other):
        if isinstance(other, StepSequence):
            return len(self) == len(other) and all(a == b for a, b in zip(self, other))
        if isinstance(other, (list, tuple)):
            return len(self) == len(other) and all(a == tuple(b) for a, b in zip(self, other))
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        if self._len <= 8:
            return f"StepSequence({list(self)!r})"
        return f"StepSequence(<{self._len} steps, total={tuple(self._total)}>)"

    @cached_property
    def distinct_steps(self) -> frozenset:
        out = set()
        for part, _ in self._parts:
            if isinstance(part, StepSequence):
                out |= part.distinct_steps
            else:
                out.add(part)
        return frozenset(out)

    def map(self, f: Callable[[LatticeVector], LatticeVector]) -> "StepSequence":
        return StepSequence(
            (part.map(f) if isinstance(part, StepSequence) else f(part), rep)
            for part, rep in self._parts
        )

    def __add__(self, other):
        if isinstance(other, StepSequence):
            return StepSequence([(self, 1), (other, 1)])
        return NotImplemented

    def __mul__(self, k: int):
        return StepSequence([(self, k)])

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class PathWitness:
    r: int
    start: LatticeVector
    steps: StepSequence

    def __post_init__(self):
        object.__setattr__(self, "start", as_vector(self.start))
        if not isinstance(self.steps, StepSequence):
            object.__setattr__(self, "steps", StepSequence.of(self.steps))

    @property
    def end(self) -> LatticeVector:
        return self.start + self.steps.total()

    @property
    def length(self) -> int:
        return len(self.steps)

    def vertices(self) -> Iterator[LatticeVector]:
        p = self.start
        yield p
        for s in self.steps:
            p = p + s
            yield p

    def is_valid(self) -> bool:
        """Every step has squared length r."""
        return all(s.squared_norm == self.r for s in self.steps.distinct_steps)

    def is_vertex_distinct(self) -> bool:
        seen = set()
        for p in self.vertices():
            if p in seen:
                return False
            seen.add(p)
        return True


DIRECTIONS = {
    "+y": lambda v: v,
    "-y": lambda v: -v,
    "+x": lambda v: v.swapped(),
    "-x": lambda v: -v.swapped(),
}


def _even_odd(r: int) -> tuple[int, int]:
    rep = primitive_representation(r)
    a, b = rep.a, rep.b
    # r is odd (or 1), so exactly one entry is even
    return (a, b) if a % 2 == 0 else (b, a)


@lru_cache(maxsize=512)
def unit_translation(r: int) -> StepSequence:
    """Steps of squared length r summing to (0, 1), for a core radicand r.

    With a even, b odd, a^2 + b^2 = r, gcd(a, b) = 1 and s*a - t*b = -1 the
    steps are, in order::

        <a,b>
        (a/2) x [s<a,b>, s<a,-b>, t<-b,a>, t<-b,-a>]
        ((b-1)/2) x [s<b,a>, s<-b,a>, t<a,-b>, t<-a,-b>]
    """
    require_core(r)
    a, b = _even_odd(r)
    bz = solve_unit_bezout(a, b)
    s, t = bz.s, bz.t
    V = LatticeVector
    horizontal = StepSequence([(V(a, b), s), (V(a, -b), s), (V(-b, a), t), (V(-b, -a), t)])
    vertical = StepSequence([(V(b, a), s), (V(-b, a), s), (V(a, -b), t), (V(-a, -b), t)])
    return StepSequence([(V(a, b), 1), (horizontal, a // 2), (vertical, (b - 1) // 2)])


def unit_translation_length(r: int) -> int:
    """(s+t)(a+b-1)+1, computed from the arithmetic alone."""
    require_core(r)
    a, b = _even_odd(r)
    bz = solve_unit_bezout(a, b)
    return (bz.s + bz.t) * (a + b - 1) + 1


def axis_translation(r: int, direction: str) -> StepSequence:
    """Reflected unit translation summing to the unit vector ``direction``."""
    try:
        f = DIRECTIONS[direction]
    except KeyError:
        raise ValueError(f"direction must be one of {sorted(DIRECTIONS)}, got {direction!r}") from None
    return unit_translation(r).map(f)


def build_path(r: int, u, v) -> PathWitness:
    """A walk from ``u`` to ``v`` made of axis translations, x moves first.

    Its length is (unit translation length) * (|dx| + |dy|). The walk may
    revisit vertices; see :func:`loop_erase`.
    """
    require_core(r)
    u = as_vector(u)
    dx, dy = as_vector(v) - u
    parts = []
    if dx:
        parts.append((axis_translation(r, "+x" if dx > 0 else "-x"), abs(dx)))
    if dy:
        parts.append((axis_translation(r, "+y" if dy > 0 else "-y"), abs(dy)))
    return PathWitness(r, u, StepSequence(parts))


def loop_erase(w: PathWitness) -> PathWitness:
    """Chronological loop erasure: on revisiting a vertex, cut the loop."""
    path = [w.start]
    index = {w.start: 0}
    verts = w.vertices()
    next(verts)
    for p in verts:
        if p in index:
            cut = index[p]
            for q in path[cut + 1:]:
                del index[q]
            del path[cut + 1:]
        else:
            index[p] = len(path)
            path.append(p)
    steps = [q - p for p, q in zip(path, path[1:])]
    return PathWitness(w.r, w.start, StepSequence.of(steps))


def path_length_within_bound(length: int, r: int) -> bool:
    """Exact test of length < 8 r^(3/2), i.e. length^2 < 64 r^3."""
    return length * length < 64 * r**3

