"""Lattice vectors, neighbor sets and the component structure of G(Z^2, sqrt r).

Two vertices of G(Z^2, sqrt r) lie in the same component exactly when their
difference is in the subgroup generated by the neighbor vectors, so the
number of components is that subgroup's index in Z^2.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .arith import all_representations, is_realized
from .errors import NotRealized

__all__ = [
    "LatticeVector",
    "ORIGIN",
    "NeighborSet",
    "SublatticeBasis",
    "INFINITE",
    "neighbor_vectors",
    "sublattice_basis",
    "sublattice_index",
    "component_count",
    "same_component",
    "component_count_1d",
    "window_edges",
]

INFINITE = math.inf


class LatticeVector(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return LatticeVector(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return LatticeVector(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return LatticeVector(-self.x, -self.y)

    def __mul__(self, k: int):
        return LatticeVector(k * self.x, k * self.y)

    __rmul__ = __mul__

    @property
    def squared_norm(self) -> int:
        return self.x * self.x + self.y * self.y

    def dot(self, other) -> int:
        return self.x * other[0] + self.y * other[1]

    def swapped(self) -> "LatticeVector":
        return LatticeVector(self.y, self.x)


ORIGIN = LatticeVector(0, 0)


def as_vector(v) -> LatticeVector:
    if isinstance(v, LatticeVector):
        return v
    x, y = v
    return LatticeVector(int(x), int(y))


class NeighborSet(NamedTuple):
    r: int
    vectors: tuple[LatticeVector, ...]

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __contains__(self, v):
        return as_vector(v) in set(self.vectors)


@lru_cache(maxsize=1024)
def _orbit_vectors(r: int) -> tuple[LatticeVector, ...]:
    out = set()
    for rep in all_representations(r):
        a, b = rep.a, rep.b
        for x, y in ((a, b), (b, a)):
            for sx in (1, -1):
                for sy in (1, -1):
                    out.add(LatticeVector(sx * x, sy * y))
    return tuple(sorted(out))


def neighbor_vectors(r: int) -> NeighborSet:
    """All integer vectors of squared length r, in sorted order."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    return NeighborSet(r, _orbit_vectors(r))


class SublatticeBasis(NamedTuple):
    """Row-style Hermite form ``(g, c), (0, e)`` of a generated subgroup.

    ``g == 0`` or ``e == 0`` means rank < 2 and an infinite index.
    """

    generators: tuple[LatticeVector, ...]
    g: int
    c: int
    e: int

    @property
    def index(self):
        if self.g == 0 or self.e == 0:
            return INFINITE
        return self.g * self.e

    def contains(self, v) -> bool:
        x, y = v
        if self.g == 0:
            # rank <= 1 and every generator lies on the y axis
            if x != 0:
                return False
            return y == 0 if self.e == 0 else y % self.e == 0
        if x % self.g:
            return False
        rest = y - (x // self.g) * self.c
        return rest == 0 if self.e == 0 else rest % self.e == 0


def sublattice_basis(vectors: Iterable) -> SublatticeBasis:
    gens = tuple(as_vector(v) for v in vectors)
    # Euclid on the first column, carrying the second along.
    g, c = 0, 0
    e = 0
    for x, y in gens:
        # combine row (x, y) into the pivot row (g, c)
        while x != 0:
            q = g // x
            g, c, x, y = x, y, g - q * x, c - q * y
        e = math.gcd(e, y)
    if g < 0:
        g, c = -g, -c
    if e:
        c %= e
    return SublatticeBasis(gens, g, c, e)


def sublattice_index(vectors: Iterable):
    """Index of the subgroup generated by ``vectors`` in Z^2, or INFINITE."""
    return sublattice_basis(vectors).index


@lru_cache(maxsize=1024)
def _component_basis(r: int) -> SublatticeBasis:
    if not is_realized(r):
        raise NotRealized(r)
    return sublattice_basis(_orbit_vectors(r))


def component_count(r: int) -> int:
    """Number of connected components of G(Z^2, sqrt r)."""
    return _component_basis(r).index


def same_component(r: int, u, v) -> bool:
    return _component_basis(r).contains(as_vector(u) - as_vector(v))


def component_count_1d(d: int) -> int:
    """Components of G(Z, d): the residue classes mod d."""
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    return d


def window_edges(r: int, n: int) -> list[tuple[LatticeVector, LatticeVector]]:
    """Edges of G(Z^2, sqrt r) induced on the square [-n, n]^2.

    Each undirected edge appears once, lower endpoint first.
    """
    if n < 0:
        raise ValueError(f"window radius must be nonnegative, got {n}")
    steps: Sequence[LatticeVector] = [v for v in _orbit_vectors(r) if v > ORIGIN]
    edges = []
    for x in range(-n, n + 1):
        for y in range(-n, n + 1):
            for dx, dy in steps:
                tx, ty = x + dx, y + dy
                if -n <= tx <= n and -n <= ty <= n:
                    edges.append((LatticeVector(x, y), LatticeVector(tx, ty)))
    return edges
