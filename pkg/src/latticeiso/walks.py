"""Exact path and walk counts in G(Z^2, sqrt r).

A *path* never revisits a vertex; a *walk* may. Path counts come from a
depth-first search pruned by the triangle inequality, walk counts from
repeated convolution of the neighbor indicator.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from ._kernels import pure
from .arith import is_realized
from .errors import BudgetExceeded, NotRealized
from .lattice import ORIGIN, LatticeVector, as_vector, neighbor_vectors

__all__ = [
    "DEFAULT_BUDGET",
    "PathCountQuery",
    "count_paths",
    "count_walks",
    "verify_collinear_uniqueness",
]

DEFAULT_BUDGET = 10_000_000

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class PathCountQuery:
    r: int
    l: int  # noqa: E741
    u: LatticeVector = ORIGIN
    v: LatticeVector = ORIGIN

    def __post_init__(self):
        if self.l < 0:
            raise ValueError(f"path length must be nonnegative, got {self.l}")
        object.__setattr__(self, "u", as_vector(self.u))
        object.__setattr__(self, "v", as_vector(self.v))


def count_paths(q: PathCountQuery, budget: int = DEFAULT_BUDGET) -> int:
    """Number of vertex-distinct paths of length ``q.l`` from ``q.u`` to ``q.v``.

    Raises BudgetExceeded rather than returning a partial count.
    """
    if not is_realized(q.r):
        raise NotRealized(q.r)
    t = q.v - q.u
    steps = neighbor_vectors(q.r).vectors
    count, _ = _kernels.count_paths(steps, t.x, t.y, q.l, q.r, budget)
    if count < 0:
        raise BudgetExceeded(budget)
    return count


def count_walks(r: int, l: int, u=ORIGIN, v=ORIGIN) -> int:  # noqa: E741
    """Number of length-``l`` step sequences from ``u`` to ``v``."""
    if not is_realized(r):
        raise NotRealized(r)
    if l < 0:
        raise ValueError(f"walk length must be nonnegative, got {l}")
    steps = neighbor_vectors(r).vectors
    x, y = as_vector(v) - as_vector(u)
    reach = max(abs(c) for s in steps for c in s)
    if max(abs(x), abs(y)) > l * reach:
        return 0
    if len(steps) ** l < _INT64_SAFE:
        grid, off = _kernels.walk_counts(steps, l)
    else:
        grid, off = pure.walk_counts(steps, l, exact_object=True)
    return int(grid[off + x, off + y])


def verify_collinear_uniqueness(r: int, p, n: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the straight path 0, p, 2p, ..., np is the only path of its length."""
    p = as_vector(p)
    if p.squared_norm != r:
        raise ValueError(f"{tuple(p)} does not have squared length {r}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return count_paths(PathCountQuery(r, n, ORIGIN, n * p), budget) == 1
