# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the path DFS and walk convolution.

Counts are int64. The DFS count is bounded by the node budget, and callers
only use ``walk_counts`` when deg**length fits, so neither can overflow.
"""

import numpy as np

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


def count_paths(steps, long long tx, long long ty, int length, long long r,
                long long budget):
    if length == 0:
        return (1 if tx == 0 and ty == 0 else 0), 0

    cdef int nsteps = len(steps)
    cdef long long *sdx = <long long *> malloc(nsteps * sizeof(long long))
    cdef long long *sdy = <long long *> malloc(nsteps * sizeof(long long))
    cdef long long *xs = <long long *> malloc((length + 1) * sizeof(long long))
    cdef long long *ys = <long long *> malloc((length + 1) * sizeof(long long))
    cdef int *nxt = <int *> malloc((length + 1) * sizeof(int))
    if not sdx or not sdy or not xs or not ys or not nxt:
        free(sdx); free(sdy); free(xs); free(ys); free(nxt)
        raise MemoryError()

    cdef int k
    for k in range(nsteps):
        sdx[k] = steps[k][0]
        sdy[k] = steps[k][1]

    cdef long long nodes = 0
    cdef long long count = 0
    cdef int depth = 0
    cdef int i, j, remaining
    cdef long long x, y, ex, ey
    cdef bint clash
    xs[0] = 0
    ys[0] = 0
    nxt[0] = 0
    try:
        while depth >= 0:
            i = nxt[depth]
            if i == nsteps:
                depth -= 1
                continue
            nxt[depth] = i + 1
            x = xs[depth] + sdx[i]
            y = ys[depth] + sdy[i]
            remaining = length - depth - 1
            ex = x - tx
            ey = y - ty
            if ex * ex + ey * ey > <long long> remaining * remaining * r:
                continue
            clash = False
            for j in range(depth + 1):
                if xs[j] == x and ys[j] == y:
                    clash = True
                    break
            if clash:
                continue
            nodes += 1
            if nodes > budget:
                return -1, nodes
            if remaining == 0:
                count += 1
                continue
            depth += 1
            xs[depth] = x
            ys[depth] = y
            nxt[depth] = 0
        return count, nodes
    finally:
        free(sdx); free(sdy); free(xs); free(ys); free(nxt)


def walk_counts(steps, int length, exact_object=False):
    if exact_object:
        from ._pykernels import walk_counts as _py_walk_counts
        return _py_walk_counts(steps, length, True)

    cdef int nsteps = len(steps)
    cdef long long reach = 0
    cdef int k
    for k in range(nsteps):
        reach = max(reach, abs(<long long> steps[k][0]), abs(<long long> steps[k][1]))
    cdef Py_ssize_t offset = length * reach
    cdef Py_ssize_t size = 2 * offset + 1

    cur_arr = np.zeros((size, size), dtype=np.int64)
    new_arr = np.zeros((size, size), dtype=np.int64)
    cdef int64_t[:, ::1] cur = cur_arr
    cdef int64_t[:, ::1] new = new_arr
    cdef int64_t[:, ::1] tmp
    cdef Py_ssize_t lo, hi, nlo, nhi, a, b
    cdef int64_t v
    cur[offset, offset] = 1

    dxs = np.array([s[0] for s in steps], dtype=np.int64)
    dys = np.array([s[1] for s in steps], dtype=np.int64)
    cdef int64_t[::1] sdx = dxs
    cdef int64_t[::1] sdy = dys

    cdef int step
    for step in range(length):
        lo = offset - step * reach
        hi = offset + step * reach + 1
        nlo = lo - reach
        nhi = hi + reach
        for a in range(nlo, nhi):
            for b in range(nlo, nhi):
                new[a, b] = 0
        for a in range(lo, hi):
            for b in range(lo, hi):
                v = cur[a, b]
                if v == 0:
                    continue
                for k in range(nsteps):
                    new[a + sdx[k], b + sdy[k]] += v
        tmp = cur
        cur = new
        new = tmp
    return np.asarray(cur).copy(), offset
