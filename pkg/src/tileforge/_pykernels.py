"""Pure-Python implementations of the search and geometry kernels.

These are the reference semantics; ``_ckernels`` must agree with them on
every output, including node counts.  Status codes: 0 found, 1 not found,
2 budget exhausted.
"""

from __future__ import annotations

import math
import sys
from contextlib import contextmanager

import numpy as np

FOUND = 0
NOT_FOUND = 1
EXHAUSTED = 2

MODE_MOORE = 0
MODE_AXIS = 1
MODE_INTERIOR = 2


@contextmanager
def _recursion_headroom(depth):
    old = sys.getrecursionlimit()
    if depth + 200 > old:
        sys.setrecursionlimit(depth + 200)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def exact_cover(rows, ncells, budget):
    """Exact cover of ``range(ncells)`` by rows, least-available cell first.

    Returns ``(status, chosen_row_indices, nodes)``.
    """
    rows = [list(map(int, r)) for r in np.asarray(rows, dtype=np.int64)]
    cell_rows = [[] for _ in range(ncells)]
    for r, cells in enumerate(rows):
        for c in cells:
            cell_rows[c].append(r)
    covered = [False] * ncells
    blocked = [0] * len(rows)
    avail = [len(cr) for cr in cell_rows]
    chosen = []
    nodes = 0
    remaining = ncells

    def select(r):
        nonlocal remaining
        for c in rows[r]:
            covered[c] = True
            remaining -= 1
            for r2 in cell_rows[c]:
                blocked[r2] += 1
                if blocked[r2] == 1:
                    for c2 in rows[r2]:
                        avail[c2] -= 1

    def deselect(r):
        nonlocal remaining
        for c in rows[r]:
            for r2 in cell_rows[c]:
                if blocked[r2] == 1:
                    for c2 in rows[r2]:
                        avail[c2] += 1
                blocked[r2] -= 1
            covered[c] = False
            remaining += 1

    def search():
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return EXHAUSTED
        if remaining == 0:
            return FOUND
        best = -1
        best_avail = len(rows) + 1
        for c in range(ncells):
            if not covered[c] and avail[c] < best_avail:
                best = c
                best_avail = avail[c]
                if best_avail == 0:
                    break
        if best_avail == 0:
            return NOT_FOUND
        for r in cell_rows[best]:
            if blocked[r]:
                continue
            select(r)
            chosen.append(r)
            status = search()
            if status != NOT_FOUND:
                return status
            chosen.pop()
            deselect(r)
        return NOT_FOUND

    with _recursion_headroom(ncells):
        status = search()
    return status, (chosen if status == FOUND else []), nodes


def find_clique(adj, target, budget):
    """Lexicographically first clique of size ``target`` in a 0/1 matrix.

    Returns ``(status, members, nodes)``.
    """
    adj = np.asarray(adj, dtype=np.uint8)
    n = adj.shape[0]
    rows = [set(np.flatnonzero(adj[i]).tolist()) for i in range(n)]
    current = []
    nodes = 0

    def extend(cands):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return EXHAUSTED
        if len(current) == target:
            return FOUND
        size = len(cands)
        for i, c in enumerate(cands):
            if len(current) + size - i < target:
                return NOT_FOUND
            nbrs = rows[c]
            nxt = [d for d in cands[i + 1:] if d in nbrs]
            current.append(c)
            status = extend(nxt)
            if status != NOT_FOUND:
                return status
            current.pop()
        return NOT_FOUND

    with _recursion_headroom(target):
        status = extend(list(range(n)))
    return status, (list(current) if status == FOUND else []), nodes


def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def contact_labels(corners, scale, mode):
    """Union-find labels for points/cubes sorted lexicographically.

    ``corners`` is an ``(n, d)`` integer array sorted by rows; ``scale`` is
    the cube side in grid units.  The label of each entry is the smallest
    index in its component.  Returns ``(labels, overlap_i, overlap_j)``;
    in interior mode the first pair of cubes sharing interior points is
    reported (otherwise ``-1, -1``).
    """
    corners = np.asarray(corners, dtype=np.int64)
    n = corners.shape[0]
    parent = list(range(n))
    overlap = (-1, -1)
    if n:
        first = corners[:, 0]
        for i in range(n):
            hi = int(np.searchsorted(first, first[i] + scale, side="right"))
            if hi <= i + 1:
                continue
            delta = np.abs(corners[i + 1:hi] - corners[i])
            within = np.all(delta <= scale, axis=1)
            at_edge = np.count_nonzero(delta == scale, axis=1)
            if mode == MODE_MOORE:
                linked = within
            elif mode == MODE_AXIS:
                linked = (delta.sum(axis=1) == scale) & (at_edge == 1)
            else:
                if overlap[0] < 0:
                    hits = np.flatnonzero(np.all(delta < scale, axis=1))
                    if hits.size:
                        overlap = (i, i + 1 + int(hits[0]))
                linked = within & (at_edge <= 1) & ~np.all(delta < scale, axis=1)
            for off in np.flatnonzero(linked).tolist():
                a = _find(parent, i)
                b = _find(parent, i + 1 + off)
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
    labels = np.array([_find(parent, i) for i in range(n)], dtype=np.int64)
    return labels, overlap[0], overlap[1]


def min_cross_distance(corners, ranks):
    """Closest pair of entries lying in different components.

    ``ranks`` gives each row's component rank.  Returns ``(best_sq, p, q)`` where ``p`` is in the
    lower-ranked component; ties are broken on
    ``(rank_p, rank_q, p, q)``.  ``(-1, -1, -1)`` when all ranks agree.
    """
    corners = np.asarray(corners, dtype=np.int64)
    ranks = np.asarray(ranks, dtype=np.int64)
    n = corners.shape[0]
    best = None
    best_key = None
    if n == 0:
        return -1, -1, -1
    # sweep along the widest axis; ties are decided on original indices
    axis = int(np.argmax(corners.max(axis=0) - corners.min(axis=0)))
    order = np.argsort(corners[:, axis], kind="stable")
    first = corners[order, axis]
    for s_i in range(n):
        i = int(order[s_i])
        if best is None:
            hi = n
        else:
            hi = int(np.searchsorted(first, first[s_i] + math.isqrt(best), side="right"))
        js = order[s_i + 1:hi]
        js = js[ranks[js] != ranks[i]]
        if js.size == 0:
            continue
        diff = corners[js] - corners[i]
        sq = np.einsum("ij,ij->i", diff, diff)
        low = int(sq.min())
        if best is not None and low > best:
            continue
        for j in js[sq == low].tolist():
            if ranks[i] < ranks[j]:
                key = (int(ranks[i]), int(ranks[j]), i, j)
            else:
                key = (int(ranks[j]), int(ranks[i]), j, i)
            if best is None or low < best or key < best_key:
                best = low
                best_key = key
    if best is None:
        return -1, -1, -1
    return best, best_key[2], best_key[3]


def shifted_overlap(corners, ranks, k, shift, scale):
    """Which components meet which shifted components in interior.

    Returns a ``k x k`` uint8 matrix with entry ``[a, b]`` set when some
    row ``x`` of rank ``a`` and row ``y`` of rank ``b`` satisfy
    ``|x - y - shift| < scale`` in every coordinate.
    """
    corners = np.asarray(corners, dtype=np.int64)
    ranks = np.asarray(ranks, dtype=np.int64)
    out = np.zeros((k, k), dtype=np.uint8)
    n = corners.shape[0]
    if n == 0:
        return out
    moved = corners + np.asarray(shift, dtype=np.int64)
    order = np.argsort(moved[:, 0], kind="stable")
    moved = moved[order]
    mranks = ranks[order]
    first = moved[:, 0]
    for i in range(n):
        a = int(ranks[i])
        if out[a].all():
            continue
        lo = int(np.searchsorted(first, corners[i, 0] - scale, side="right"))
        hi = int(np.searchsorted(first, corners[i, 0] + scale, side="left"))
        if lo >= hi:
            continue
        hit = (np.abs(moved[lo:hi] - corners[i]) < scale).all(axis=1)
        if hit.any():
            out[a, np.unique(mranks[lo:hi][hit])] = 1
    return out
