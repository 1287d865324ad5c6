"""Pure-Python kernels. Same signatures and results as ``_ckernels``."""

import numpy as np


def count_paths(steps, tx, ty, length, r, budget):
    """Count self-avoiding paths of ``length`` steps from the origin to (tx, ty).

    Returns ``(count, nodes)``, or ``(-1, nodes)`` once more than ``budget``
    nodes have been expanded.
    """
    if length == 0:
        return (1 if tx == 0 and ty == 0 else 0), 0
    steps = [(int(dx), int(dy)) for dx, dy in steps]
    on_path = {(0, 0)}
    nodes = 0
    count = 0

    # explicit stack of (x, y, depth, next step index)
    xs = [0] * (length + 1)
    ys = [0] * (length + 1)
    nxt = [0] * (length + 1)
    depth = 0
    nsteps = len(steps)
    while depth >= 0:
        i = nxt[depth]
        if i == nsteps:
            on_path.discard((xs[depth], ys[depth]))
            depth -= 1
            continue
        nxt[depth] = i + 1
        dx, dy = steps[i]
        x = xs[depth] + dx
        y = ys[depth] + dy
        remaining = length - depth - 1
        ex = x - tx
        ey = y - ty
        if ex * ex + ey * ey > remaining * remaining * r:
            continue
        if (x, y) in on_path:
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
        on_path.add((x, y))
    return count, nodes


def walk_counts(steps, length, exact_object=False):
    """Walk counts from the origin after ``length`` steps on a dense grid.

    Returns ``(grid, offset)``; ``grid[offset + x, offset + y]`` is the number
    of step sequences ending at (x, y). With ``exact_object`` the grid holds
    Python ints and cannot overflow.
    """
    steps = [(int(dx), int(dy)) for dx, dy in steps]
    reach = max((max(abs(dx), abs(dy)) for dx, dy in steps), default=0)
    offset = length * reach
    size = 2 * offset + 1
    dtype = object if exact_object else np.int64
    cur = np.zeros((size, size), dtype=dtype)
    cur[offset, offset] = 1
    for k in range(length):
        lo = offset - k * reach
        hi = offset + k * reach + 1
        src = cur[lo:hi, lo:hi]
        new = np.zeros((size, size), dtype=dtype)
        for dx, dy in steps:
            new[lo + dx:hi + dx, lo + dy:hi + dy] += src
        cur = new
    return cur, offset
