# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: group closure and pentagram search."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, calloc, realloc, free

cnp.import_array()


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil


cdef inline uint64_t _hash(uint64_t x) nogil:
    x ^= x >> 33
    x *= 0xff51afd7ed558ccdULL
    x ^= x >> 33
    x *= 0xc4ceb9fe1a85ec53ULL
    x ^= x >> 33
    return x


cdef struct HashSet:
    uint64_t *slots
    size_t cap
    size_t size


cdef int hs_init(HashSet *h, size_t cap) nogil:
    h.cap = cap
    h.size = 0
    h.slots = <uint64_t *> calloc(cap, sizeof(uint64_t))
    return 0 if h.slots != NULL else -1


cdef int hs_insert(HashSet *h, uint64_t key) nogil:
    # 1 inserted, 0 present, -1 out of memory; key 0 is reserved for empty slots
    cdef size_t i, j, newcap
    cdef uint64_t *old
    cdef uint64_t k
    if 2 * (h.size + 1) > h.cap:
        old = h.slots
        newcap = h.cap * 2
        h.slots = <uint64_t *> calloc(newcap, sizeof(uint64_t))
        if h.slots == NULL:
            h.slots = old
            return -1
        for i in range(h.cap):
            k = old[i]
            if k != 0:
                j = _hash(k) & (newcap - 1)
                while h.slots[j] != 0:
                    j = (j + 1) & (newcap - 1)
                h.slots[j] = k
        free(old)
        h.cap = newcap
    i = _hash(key) & (h.cap - 1)
    while h.slots[i] != 0:
        if h.slots[i] == key:
            return 0
        i = (i + 1) & (h.cap - 1)
    h.slots[i] = key
    h.size += 1
    return 1


def closure(tables, int n, start):
    """Breadth-first closure of ``start`` under right multiplication.

    See ``heptads._pykernels.closure`` for the data layout.
    """
    cdef int ngen = len(tables)
    cdef int tsize = 1 << n
    cdef uint64_t mask = (<uint64_t> 1 << n) - 1
    cdef uint64_t[:, ::1] tab = np.ascontiguousarray(
        np.array([list(t) for t in tables], dtype=np.uint64).reshape(ngen, tsize))
    cdef HashSet h
    cdef size_t qcap = 1024, qlen = 0, head = 0
    cdef uint64_t *queue
    cdef uint64_t x, y
    cdef int g, i
    cdef int rc = 0
    cdef uint64_t s0 = <uint64_t> start
    if s0 == 0:
        raise ValueError("the zero matrix cannot be a group element")
    if hs_init(&h, 1 << 16) != 0:
        raise MemoryError()
    queue = <uint64_t *> malloc(qcap * sizeof(uint64_t))
    if queue == NULL:
        free(h.slots)
        raise MemoryError()
    hs_insert(&h, s0)
    queue[qlen] = s0
    qlen += 1
    with nogil:
        while head < qlen:
            x = queue[head]
            head += 1
            for g in range(ngen):
                y = 0
                for i in range(n):
                    y = (y << n) | tab[g, (x >> (n * (n - 1 - i))) & mask]
                rc = hs_insert(&h, y)
                if rc == 1:
                    if qlen == qcap:
                        qcap *= 2
                        queue = <uint64_t *> realloc(queue, qcap * sizeof(uint64_t))
                        if queue == NULL:
                            break
                    queue[qlen] = y
                    qlen += 1
                elif rc < 0:
                    break
            if queue == NULL or rc < 0:
                break
    free(h.slots)
    if queue == NULL or rc < 0:
        if queue != NULL:
            free(queue)
        raise MemoryError()
    out = np.empty(qlen, dtype=np.uint64)
    cdef uint64_t[::1] ov = out
    for i in range(<int> qlen):
        ov[i] = queue[i]
    free(queue)
    return out


cdef inline bint _one(uint64_t x) nogil:
    return x != 0 and (x & (x - 1)) == 0


def pentagram_search(masks, indptr, indices, int start, int stop):
    """Five-edge configurations with smallest edge index in [start, stop).

    See ``heptads._pykernels.pentagram_search``.
    """
    cdef uint64_t[::1] m = np.ascontiguousarray(np.asarray(masks, dtype=np.uint64))
    cdef int64_t[::1] ptr = np.ascontiguousarray(np.asarray(indptr, dtype=np.int64))
    cdef int64_t[::1] idx = np.ascontiguousarray(np.asarray(indices, dtype=np.int64))
    cdef int maxdeg = 0
    cdef int k
    for k in range(ptr.shape[0] - 1):
        if ptr[k + 1] - ptr[k] > maxdeg:
            maxdeg = <int> (ptr[k + 1] - ptr[k])
    cdef int64_t[:, ::1] cand = np.empty((4, maxdeg + 1), dtype=np.int64)
    cdef int ncand[4]
    hits = []
    cdef int i, a, b, c, d, slot, t
    cdef int64_t j
    cdef uint64_t mi, ma, mb, mc, md, u, rest, low
    cdef int64_t[:, ::1] buf = np.empty((4096, 5), dtype=np.int64)
    cdef int nbuf = 0
    for i in range(start, stop):
        mi = m[i]
        rest = mi
        slot = 0
        while rest:
            low = rest & (~rest + 1)
            rest ^= low
            k = 63 - __builtin_clzll(low)
            ncand[slot] = 0
            for t in range(<int> ptr[k], <int> ptr[k + 1]):
                j = idx[t]
                if j > i and _one(m[j] & mi):
                    cand[slot, ncand[slot]] = j
                    ncand[slot] += 1
            slot += 1
        with nogil:
            for a in range(ncand[0]):
                ma = m[cand[0, a]]
                for b in range(ncand[1]):
                    mb = m[cand[1, b]]
                    if not _one(ma & mb):
                        continue
                    for c in range(ncand[2]):
                        mc = m[cand[2, c]]
                        if not (_one(ma & mc) and _one(mb & mc)):
                            continue
                        u = mi | ma | mb | mc
                        for d in range(ncand[3]):
                            md = m[cand[3, d]]
                            if _one(ma & md) and _one(mb & md) and _one(mc & md) \
                                    and __builtin_popcountll(u | md) == 10:
                                with gil:
                                    if nbuf == buf.shape[0]:
                                        hits.append(np.asarray(buf).copy())
                                        nbuf = 0
                                    buf[nbuf, 0] = i
                                    buf[nbuf, 1] = cand[0, a]
                                    buf[nbuf, 2] = cand[1, b]
                                    buf[nbuf, 3] = cand[2, c]
                                    buf[nbuf, 4] = cand[3, d]
                                    nbuf += 1
    hits.append(np.asarray(buf)[:nbuf].copy())
    out = np.concatenate(hits, axis=0)
    out.sort(axis=1)
    return out

