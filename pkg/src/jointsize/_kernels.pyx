# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled clique kernels over word-packed adjacency matrices.

Mirrors ``_kernels_py``.  Rows are ``uint64`` words, little-endian bit order,
padded to whole words.  All loops run without the GIL so callers can split
vertex ranges across threads.  Per-call counts are accumulated in 64 bits;
every unit of a count corresponds to visited recursion work, so no
computation that finishes can overflow.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

import numpy as np

NAME = "compiled"

cdef extern from *:
    """
    static inline int js_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int js_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int js_popcount(unsigned long long x) nogil
    int js_ctz(unsigned long long x) nogil


cdef inline unsigned long long _pop(const uint64_t* a, Py_ssize_t W) noexcept nogil:
    cdef unsigned long long t = 0
    cdef Py_ssize_t j
    for j in range(W):
        t += js_popcount(a[j])
    return t


cdef unsigned long long _count(const uint64_t* fwd, Py_ssize_t W, const uint64_t* cand,
                               int k, uint64_t* buf) noexcept nogil:
    cdef unsigned long long total = 0
    cdef Py_ssize_t w, j, v
    cdef uint64_t word, nonzero
    cdef const uint64_t* row
    if k <= 0:
        return 1
    if k == 1:
        return _pop(cand, W)
    for w in range(W):
        word = cand[w]
        while word:
            v = w * 64 + js_ctz(word)
            word &= word - 1
            row = fwd + v * W
            if k == 2:
                for j in range(W):
                    total += js_popcount(cand[j] & row[j])
            else:
                nonzero = 0
                for j in range(W):
                    buf[j] = cand[j] & row[j]
                    nonzero |= buf[j]
                if nonzero:
                    total += _count(fwd, W, buf, k - 1, buf + W)
    return total


cdef void _vector(const uint64_t* fwd, Py_ssize_t W, const uint64_t* cand, int depth,
                  uint64_t* buf, unsigned long long* counts) noexcept nogil:
    cdef Py_ssize_t w, j, v
    cdef uint64_t word, nonzero
    cdef const uint64_t* row
    counts[depth + 1] += _pop(cand, W)
    for w in range(W):
        word = cand[w]
        while word:
            v = w * 64 + js_ctz(word)
            word &= word - 1
            row = fwd + v * W
            nonzero = 0
            for j in range(W):
                buf[j] = cand[j] & row[j]
                nonzero |= buf[j]
            if nonzero:
                _vector(fwd, W, buf, depth + 1, buf + W, counts)


class Prepared:
    __slots__ = ("n", "adj", "fwd")

    def __init__(self, graph, fwd_words):
        self.n = graph.n
        self.adj = graph.words()
        self.fwd = fwd_words


def prepare(graph, fwd_rows):
    from .graph import rows_to_words
    return Prepared(graph, rows_to_words(fwd_rows, graph.num_words))


cdef uint64_t* _alloc(Py_ssize_t words) except NULL:
    cdef uint64_t* p = <uint64_t*> malloc(max(words, 1) * sizeof(uint64_t))
    if p == NULL:
        raise MemoryError()
    return p


def count_range(h, int k, Py_ssize_t lo, Py_ssize_t hi, Py_ssize_t step):
    cdef const uint64_t[:, ::1] fwd = h.fwd
    cdef Py_ssize_t n = fwd.shape[0]
    cdef Py_ssize_t W = fwd.shape[1]
    cdef unsigned long long total = 0
    cdef Py_ssize_t v = lo
    if n == 0 or k < 1:
        return 0
    cdef uint64_t* buf = _alloc(k * W)
    try:
        with nogil:
            while v < hi:
                total += _count(&fwd[0, 0], W, &fwd[v, 0], k - 1, buf)
                v += step
    finally:
        free(buf)
    return int(total)


def vector_range(h, Py_ssize_t lo, Py_ssize_t hi, Py_ssize_t step):
    cdef const uint64_t[:, ::1] fwd = h.fwd
    cdef Py_ssize_t n = fwd.shape[0]
    cdef Py_ssize_t W = fwd.shape[1]
    cdef Py_ssize_t v = lo
    counts_arr = np.zeros(n + 2, dtype=np.uint64)
    cdef unsigned long long[::1] counts = counts_arr
    if n == 0:
        return [0] * (n + 2)
    cdef uint64_t* buf = _alloc((n + 1) * W)
    try:
        with nogil:
            while v < hi:
                counts[1] += 1
                _vector(&fwd[0, 0], W, &fwd[v, 0], 1, buf, &counts[0])
                v += step
    finally:
        free(buf)
    return [int(c) for c in counts_arr]


def edge_count(h, Py_ssize_t u, Py_ssize_t v, int k):
    cdef const uint64_t[:, ::1] adj = h.adj
    cdef const uint64_t[:, ::1] fwd = h.fwd
    cdef Py_ssize_t W = adj.shape[1]
    cdef Py_ssize_t j
    cdef unsigned long long c
    cdef uint64_t* buf = _alloc((k + 1) * W)
    try:
        for j in range(W):
            buf[j] = adj[u, j] & adj[v, j]
        c = _count(&fwd[0, 0], W, buf, k - 2, buf + W)
    finally:
        free(buf)
    return int(c)


def joint_range(h, int k, Py_ssize_t lo, Py_ssize_t hi, Py_ssize_t step):
    cdef const uint64_t[:, ::1] adj = h.adj
    cdef const uint64_t[:, ::1] fwd = h.fwd
    cdef Py_ssize_t n = adj.shape[0]
    cdef Py_ssize_t W = adj.shape[1]
    cdef Py_ssize_t u = lo
    cdef Py_ssize_t v, w, j
    cdef int sub = k - 2
    cdef uint64_t word
    cdef unsigned long long c, best = 0, ties = 0
    cdef Py_ssize_t bu = -1, bv = -1
    cdef const uint64_t* ru
    cdef const uint64_t* rv
    if n == 0:
        return 0, -1, -1, 0
    cdef uint64_t* buf = _alloc((k + 1) * W)
    try:
        with nogil:
            while u < hi:
                ru = &adj[u, 0]
                for w in range((u + 1) // 64, W):
                    word = ru[w]
                    if w == (u + 1) // 64:
                        word &= ~((<uint64_t>1 << ((u + 1) % 64)) - 1)
                    while word:
                        v = w * 64 + js_ctz(word)
                        word &= word - 1
                        rv = &adj[v, 0]
                        if sub == 1:
                            c = 0
                            for j in range(W):
                                c += js_popcount(ru[j] & rv[j])
                        else:
                            for j in range(W):
                                buf[j] = ru[j] & rv[j]
                            c = _count(&fwd[0, 0], W, buf, sub, buf + W)
                        if c > best:
                            best = c
                            bu = u
                            bv = v
                            ties = 1
                        elif c == best and c > 0:
                            ties += 1
                u += step
    finally:
        free(buf)
    return int(best), bu, bv, int(ties)


def edge_counts_range(h, int k, Py_ssize_t lo, Py_ssize_t hi, Py_ssize_t step):
    cdef const uint64_t[:, ::1] adj = h.adj
    cdef const uint64_t[:, ::1] fwd = h.fwd
    cdef Py_ssize_t n = adj.shape[0]
    cdef Py_ssize_t W = adj.shape[1]
    cdef Py_ssize_t u = lo
    cdef Py_ssize_t v, w, j, m = 0
    cdef int sub = k - 2
    cdef uint64_t word
    cdef unsigned long long c
    cdef const uint64_t* ru
    cdef const uint64_t* rv
    if n == 0:
        return []
    while u < hi:
        m += js_row_edges(&adj[u, 0], W, u)
        u += step
    out_arr = np.zeros(m, dtype=np.uint64)
    cdef unsigned long long[::1] out = out_arr
    cdef uint64_t* buf = _alloc((k + 1) * W)
    m = 0
    u = lo
    try:
        with nogil:
            while u < hi:
                ru = &adj[u, 0]
                for w in range((u + 1) // 64, W):
                    word = ru[w]
                    if w == (u + 1) // 64:
                        word &= ~((<uint64_t>1 << ((u + 1) % 64)) - 1)
                    while word:
                        v = w * 64 + js_ctz(word)
                        word &= word - 1
                        rv = &adj[v, 0]
                        if sub == 1:
                            c = 0
                            for j in range(W):
                                c += js_popcount(ru[j] & rv[j])
                        else:
                            for j in range(W):
                                buf[j] = ru[j] & rv[j]
                            c = _count(&fwd[0, 0], W, buf, sub, buf + W)
                        out[m] = c
                        m += 1
                u += step
    finally:
        free(buf)
    return out_arr.tolist()


cdef Py_ssize_t js_row_edges(const uint64_t* ru, Py_ssize_t W, Py_ssize_t u) noexcept nogil:
    cdef Py_ssize_t w, t = 0
    cdef uint64_t word
    for w in range((u + 1) // 64, W):
        word = ru[w]
        if w == (u + 1) // 64:
            word &= ~((<uint64_t>1 << ((u + 1) % 64)) - 1)
        t += js_popcount(word)
    return t
