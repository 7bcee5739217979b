# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the routines in ``_pykernels``.

Every function returns exactly what its pure-Python counterpart returns,
node counts included.
"""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

ctypedef cnp.int64_t i64

cdef int FOUND = 0
cdef int NOT_FOUND = 1
cdef int EXHAUSTED = 2


cdef struct CoverState:
    i64 nrows
    i64 k
    i64 ncells
    i64 *rows          # nrows * k
    i64 *cr_start      # ncells + 1
    i64 *cr_rows       # nrows * k
    char *covered
    i64 *blocked
    i64 *avail
    i64 *chosen
    i64 depth
    i64 remaining
    i64 nodes
    i64 budget


cdef inline void _select(CoverState *st, i64 r) nogil:
    cdef i64 a, b, c, r2, c2, t
    for a in range(st.k):
        c = st.rows[r * st.k + a]
        st.covered[c] = 1
        st.remaining -= 1
        for b in range(st.cr_start[c], st.cr_start[c + 1]):
            r2 = st.cr_rows[b]
            st.blocked[r2] += 1
            if st.blocked[r2] == 1:
                for t in range(st.k):
                    c2 = st.rows[r2 * st.k + t]
                    st.avail[c2] -= 1


cdef inline void _deselect(CoverState *st, i64 r) nogil:
    cdef i64 a, b, c, r2, c2, t
    for a in range(st.k):
        c = st.rows[r * st.k + a]
        for b in range(st.cr_start[c], st.cr_start[c + 1]):
            r2 = st.cr_rows[b]
            if st.blocked[r2] == 1:
                for t in range(st.k):
                    c2 = st.rows[r2 * st.k + t]
                    st.avail[c2] += 1
            st.blocked[r2] -= 1
        st.covered[c] = 0
        st.remaining += 1


cdef int _cover_search(CoverState *st) nogil:
    cdef i64 c, best, best_avail, b, r
    cdef int status
    st.nodes += 1
    if st.nodes > st.budget:
        return EXHAUSTED
    if st.remaining == 0:
        return FOUND
    best = -1
    best_avail = st.nrows + 1
    for c in range(st.ncells):
        if not st.covered[c] and st.avail[c] < best_avail:
            best = c
            best_avail = st.avail[c]
            if best_avail == 0:
                break
    if best_avail == 0:
        return NOT_FOUND
    for b in range(st.cr_start[best], st.cr_start[best + 1]):
        r = st.cr_rows[b]
        if st.blocked[r]:
            continue
        _select(st, r)
        st.chosen[st.depth] = r
        st.depth += 1
        status = _cover_search(st)
        if status != NOT_FOUND:
            return status
        st.depth -= 1
        _deselect(st, r)
    return NOT_FOUND


def exact_cover(rows, ncells, budget):
    cdef cnp.ndarray[i64, ndim=2, mode="c"] arr = np.ascontiguousarray(rows, dtype=np.int64)
    cdef i64 nrows = arr.shape[0]
    cdef i64 k = arr.shape[1] if nrows else 0
    cdef i64 nc = ncells
    cdef cnp.ndarray[i64, ndim=1] cr_start = np.zeros(nc + 1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] cr_rows = np.zeros(max(nrows * k, 1), dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] fill
    cdef cnp.ndarray[char, ndim=1] covered = np.zeros(max(nc, 1), dtype=np.int8)
    cdef cnp.ndarray[i64, ndim=1] blocked = np.zeros(max(nrows, 1), dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] avail
    cdef cnp.ndarray[i64, ndim=1] chosen = np.zeros(max(nc, 1), dtype=np.int64)
    cdef CoverState st
    cdef i64 r, a, c
    cdef int status

    for r in range(nrows):
        for a in range(k):
            cr_start[arr[r, a] + 1] += 1
    for c in range(nc):
        cr_start[c + 1] += cr_start[c]
    fill = cr_start[:nc].copy() if nc else np.zeros(1, dtype=np.int64)
    for r in range(nrows):
        for a in range(k):
            c = arr[r, a]
            cr_rows[fill[c]] = r
            fill[c] += 1
    avail = np.diff(cr_start).astype(np.int64) if nc else np.zeros(1, dtype=np.int64)

    st.nrows = nrows
    st.k = k
    st.ncells = nc
    st.rows = <i64 *> arr.data if nrows else NULL
    st.cr_start = <i64 *> cr_start.data
    st.cr_rows = <i64 *> cr_rows.data
    st.covered = <char *> covered.data
    st.blocked = <i64 *> blocked.data
    st.avail = <i64 *> avail.data
    st.chosen = <i64 *> chosen.data
    st.depth = 0
    st.remaining = nc
    st.nodes = 0
    st.budget = budget
    with nogil:
        status = _cover_search(&st)
    if status == FOUND:
        picked = [int(chosen[i]) for i in range(st.depth)]
    else:
        picked = []
    return status, picked, int(st.nodes)


cdef struct CliqueState:
    i64 n
    i64 target
    unsigned char *adj
    i64 *buf          # (target + 1) * n candidate buffers, one per depth
    i64 *current
    i64 depth
    i64 nodes
    i64 budget


cdef int _clique_extend(CliqueState *st, i64 *cands, i64 size) nogil:
    cdef i64 i, j, c, d, m
    cdef i64 *nxt
    cdef int status
    st.nodes += 1
    if st.nodes > st.budget:
        return EXHAUSTED
    if st.depth == st.target:
        return FOUND
    nxt = st.buf + (st.depth + 1) * st.n
    for i in range(size):
        if st.depth + size - i < st.target:
            return NOT_FOUND
        c = cands[i]
        m = 0
        for j in range(i + 1, size):
            d = cands[j]
            if st.adj[c * st.n + d]:
                nxt[m] = d
                m += 1
        st.current[st.depth] = c
        st.depth += 1
        status = _clique_extend(st, nxt, m)
        if status != NOT_FOUND:
            return status
        st.depth -= 1
    return NOT_FOUND


def find_clique(adj, target, budget):
    cdef cnp.ndarray[cnp.uint8_t, ndim=2, mode="c"] a = np.ascontiguousarray(adj, dtype=np.uint8)
    cdef i64 n = a.shape[0]
    cdef i64 t = target
    cdef CliqueState st
    cdef i64 i
    cdef int status
    cdef cnp.ndarray[i64, ndim=1] buf = np.zeros(max((t + 2) * max(n, 1), 1), dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] current = np.zeros(max(t, 1), dtype=np.int64)
    for i in range(n):
        buf[i] = i
    st.n = n
    st.target = t
    st.adj = <unsigned char *> a.data
    st.buf = <i64 *> buf.data
    st.current = <i64 *> current.data
    st.depth = 0
    st.nodes = 0
    st.budget = budget
    with nogil:
        status = _clique_extend(&st, st.buf, n)
    if status == FOUND:
        members = [int(current[i]) for i in range(t)]
    else:
        members = []
    return status, members, int(st.nodes)


cdef inline i64 _find(i64 *parent, i64 i) nogil:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def contact_labels(corners, scale, mode):
    cdef cnp.ndarray[i64, ndim=2, mode="c"] c = np.ascontiguousarray(corners, dtype=np.int64)
    cdef i64 n = c.shape[0]
    cdef i64 d = c.shape[1] if n else 0
    cdef i64 L = scale
    cdef int md = mode
    cdef cnp.ndarray[i64, ndim=1] parent = np.arange(n, dtype=np.int64)
    cdef i64 *par = <i64 *> parent.data
    cdef i64 i, j, t, diff, total, edge, ra, rb
    cdef bint within, inside, linked
    cdef i64 oi = -1, oj = -1
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                if c[j, 0] - c[i, 0] > L:
                    break
                within = True
                inside = True
                total = 0
                edge = 0
                for t in range(d):
                    diff = c[j, t] - c[i, t]
                    if diff < 0:
                        diff = -diff
                    if diff > L:
                        within = False
                        break
                    if diff == L:
                        edge += 1
                        inside = False
                    total += diff
                if not within:
                    continue
                if md == 0:
                    linked = True
                elif md == 1:
                    linked = total == L and edge == 1
                else:
                    if inside:
                        if oi < 0:
                            oi = i
                            oj = j
                        linked = False
                    else:
                        linked = edge <= 1
                if linked:
                    ra = _find(par, i)
                    rb = _find(par, j)
                    if ra != rb:
                        if ra < rb:
                            par[rb] = ra
                        else:
                            par[ra] = rb
        for i in range(n):
            par[i] = _find(par, i)
    return parent, int(oi), int(oj)


def min_cross_distance(corners, ranks):
    cdef cnp.ndarray[i64, ndim=2, mode="c"] c0 = np.ascontiguousarray(corners, dtype=np.int64)
    cdef i64 n = c0.shape[0]
    if n == 0:
        return -1, -1, -1
    # sweep along the widest axis; ties are decided on original indices
    axis = int(np.argmax(c0.max(axis=0) - c0.min(axis=0)))
    order_arr = np.argsort(c0[:, axis], kind="stable").astype(np.int64)
    cdef cnp.ndarray[i64, ndim=2, mode="c"] c = np.ascontiguousarray(c0[order_arr])
    cdef cnp.ndarray[i64, ndim=1] idx = order_arr
    cdef cnp.ndarray[i64, ndim=1] rk = np.ascontiguousarray(np.asarray(ranks, dtype=np.int64)[order_arr])
    cdef i64 d = c.shape[1]
    cdef i64 ax = axis
    cdef i64 i, j, t, gap, diff, sq
    cdef i64 best = -1, bp = -1, bq = -1, br0 = -1, br1 = -1
    cdef i64 p, q, r0, r1
    cdef bint better
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                gap = c[j, ax] - c[i, ax]
                if best >= 0 and gap * gap > best:
                    break
                if rk[i] == rk[j]:
                    continue
                sq = 0
                for t in range(d):
                    diff = c[j, t] - c[i, t]
                    sq += diff * diff
                    if best >= 0 and sq > best:
                        break
                if best >= 0 and sq > best:
                    continue
                if rk[i] < rk[j]:
                    p = idx[i]
                    q = idx[j]
                    r0 = rk[i]
                    r1 = rk[j]
                else:
                    p = idx[j]
                    q = idx[i]
                    r0 = rk[j]
                    r1 = rk[i]
                if best < 0 or sq < best:
                    better = True
                elif r0 != br0:
                    better = r0 < br0
                elif r1 != br1:
                    better = r1 < br1
                elif p != bp:
                    better = p < bp
                else:
                    better = q < bq
                if better:
                    best = sq
                    bp = p
                    bq = q
                    br0 = r0
                    br1 = r1
    return int(best), int(bp), int(bq)


def shifted_overlap(corners, ranks, k, shift, scale):
    cdef cnp.ndarray[i64, ndim=2, mode="c"] c = np.ascontiguousarray(corners, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] rk = np.ascontiguousarray(ranks, dtype=np.int64)
    cdef i64 n = c.shape[0]
    cdef i64 d = c.shape[1] if n else 0
    cdef i64 K = k
    cdef i64 L = scale
    out_arr = np.zeros((K, K), dtype=np.uint8)
    if n == 0:
        return out_arr
    moved_full = c + np.asarray(shift, dtype=np.int64)
    order = np.argsort(moved_full[:, 0], kind="stable")
    cdef cnp.ndarray[i64, ndim=2, mode="c"] m = np.ascontiguousarray(moved_full[order])
    cdef cnp.ndarray[i64, ndim=1] mr = np.ascontiguousarray(rk[order])
    cdef cnp.ndarray[cnp.uint8_t, ndim=2, mode="c"] out = out_arr
    cdef i64 i, j, t, lo, hi, mid, a, b, diff, remaining
    cdef bint ok
    remaining = K * K
    with nogil:
        for i in range(n):
            if remaining == 0:
                break
            a = rk[i]
            # first moved row with m[., 0] > c[i, 0] - L
            lo = 0
            hi = n
            while lo < hi:
                mid = (lo + hi) // 2
                if m[mid, 0] > c[i, 0] - L:
                    hi = mid
                else:
                    lo = mid + 1
            j = lo
            while j < n and m[j, 0] < c[i, 0] + L:
                b = mr[j]
                if out[a, b] == 0:
                    ok = True
                    for t in range(d):
                        diff = c[i, t] - m[j, t]
                        if diff <= -L or diff >= L:
                            ok = False
                            break
                    if ok:
                        out[a, b] = 1
                        remaining -= 1
                j += 1
    return out_arr
