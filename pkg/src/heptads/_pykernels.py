"""Pure-Python versions of the hot loops; same signatures as ``_ckernels``."""

from __future__ import annotations

from typing import Sequence

import numpy as np


def closure(tables: Sequence[Sequence[int]], n: int, start: int) -> np.ndarray:
    """Breadth-first closure of ``start`` under right multiplication.

    ``tables[g][r]`` is row vector ``r`` times generator ``g``; elements are
    ``n`` x ``n`` matrices packed row-major, first row in the high bits.
    Returns the elements in discovery order.
    """
    mask = (1 << n) - 1
    shifts = [n * (n - 1 - i) for i in range(n)]
    tabs = [list(t) for t in tables]
    seen = {start}
    queue = [start]
    for x in queue:
        rows = [(x >> s) & mask for s in shifts]
        for tb in tabs:
            y = 0
            for r in rows:
                y = (y << n) | tb[r]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return np.array(queue, dtype=np.uint64)


def pentagram_search(
    masks: Sequence[int],
    indptr: Sequence[int],
    indices: Sequence[int],
    start: int,
    stop: int,
) -> np.ndarray:
    """Five-edge configurations whose smallest edge index lies in [start, stop).

    ``masks[e]`` is the point bitmask of edge ``e``; ``indices[indptr[k]:indptr[k+1]]``
    lists the edges through point ``k`` in increasing order.  A hit is five
    edges meeting pairwise in exactly one point and covering ten points.
    """
    masks = [int(m) for m in masks]
    out: list[tuple[int, ...]] = []

    def one(x: int) -> bool:
        return x != 0 and x & (x - 1) == 0

    for i in range(start, stop):
        mi = masks[i]
        cands = []
        m = mi
        while m:
            low = m & -m
            k = low.bit_length() - 1
            m ^= low
            cands.append(
                [j for j in indices[indptr[k]:indptr[k + 1]] if j > i and one(masks[j] & mi)]
            )
        c0, c1, c2, c3 = cands
        for a in c0:
            ma = masks[a]
            for b in c1:
                mb = masks[b]
                if not one(ma & mb):
                    continue
                for c in c2:
                    mc = masks[c]
                    if not (one(ma & mc) and one(mb & mc)):
                        continue
                    u = mi | ma | mb | mc
                    for d in c3:
                        md = masks[d]
                        if one(ma & md) and one(mb & md) and one(mc & md):
                            if bin(u | md).count("1") == 10:
                                out.append(tuple(sorted((i, a, b, c, d))))
    return np.array(out, dtype=np.int64).reshape(-1, 5)
