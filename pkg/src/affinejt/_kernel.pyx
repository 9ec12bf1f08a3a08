# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse product kernel.

Same contract as ``_kernel_py.mul``.  When every key and coefficient fits in
64 bits the product is accumulated in a C hash table with 128-bit
accumulators; anything larger falls back to the Python loop.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t

from affinejt import _kernel_py

cdef extern from *:
    """
    typedef __int128 i128_t;
    static inline long long i128_hi(i128_t v) { return (long long)(v >> 64); }
    static inline unsigned long long i128_lo(i128_t v) { return (unsigned long long)v; }
    static inline int i128_fits(i128_t v) { return v >= -(((i128_t)1) << 62) && v < (((i128_t)1) << 62); }
    static inline i128_t i128_mul(long long a, long long b) { return (i128_t)a * (i128_t)b; }
    """
    ctypedef long long i128_t
    long long i128_hi(i128_t v)
    unsigned long long i128_lo(i128_t v)
    int i128_fits(i128_t v)
    i128_t i128_mul(long long a, long long b)

cdef enum:
    EMPTY = -1

cdef int64_t KEY_MAX = (<int64_t>1) << 62
cdef object PY_KEY_MAX = 1 << 62
cdef object PY_COEF_MAX = 1 << 62


cdef struct Table:
    int64_t *keys
    i128_t *vals
    Py_ssize_t cap
    Py_ssize_t used


cdef int table_init(Table *t, Py_ssize_t cap) except -1:
    cdef Py_ssize_t i
    t.keys = <int64_t *> malloc(cap * sizeof(int64_t))
    t.vals = <i128_t *> malloc(cap * sizeof(i128_t))
    if t.keys == NULL or t.vals == NULL:
        free(t.keys)
        free(t.vals)
        raise MemoryError()
    for i in range(cap):
        t.keys[i] = EMPTY
    t.cap = cap
    t.used = 0
    return 0


cdef inline Py_ssize_t slot_of(int64_t key, Py_ssize_t mask) nogil:
    return <Py_ssize_t>((<uint64_t>key * 0x9E3779B97F4A7C15ULL) >> 17) & mask


cdef int table_grow(Table *t) except -1:
    cdef Table fresh
    cdef Py_ssize_t i, s, mask
    table_init(&fresh, t.cap * 2)
    mask = fresh.cap - 1
    for i in range(t.cap):
        if t.keys[i] != EMPTY:
            s = slot_of(t.keys[i], mask)
            while fresh.keys[s] != EMPTY:
                s = (s + 1) & mask
            fresh.keys[s] = t.keys[i]
            fresh.vals[s] = t.vals[i]
    fresh.used = t.used
    free(t.keys)
    free(t.vals)
    t[0] = fresh
    return 0


cdef inline int table_add(Table *t, int64_t key, i128_t val) except -1:
    cdef Py_ssize_t mask = t.cap - 1
    cdef Py_ssize_t s = slot_of(key, mask)
    while True:
        if t.keys[s] == key:
            t.vals[s] = t.vals[s] + val
            return 0
        if t.keys[s] == EMPTY:
            t.keys[s] = key
            t.vals[s] = val
            t.used += 1
            if 2 * t.used > t.cap:
                table_grow(t)
            return 0
        s = (s + 1) & mask


cdef bint _fast_ok(dict a, dict b, object bias):
    if bias >= PY_KEY_MAX:
        return False
    if max(a) >= PY_KEY_MAX or max(b) >= PY_KEY_MAX:
        return False
    ma = max(abs(c) for c in a.values())
    mb = max(abs(c) for c in b.values())
    if ma >= PY_COEF_MAX or mb >= PY_COEF_MAX:
        return False
    return ma.bit_length() + mb.bit_length() + min(len(a), len(b)).bit_length() <= 125


def mul(dict a, dict b, object bias, object limit=None):
    """Product of two packed dicts, dropping keys >= ``limit`` when given."""
    cdef Py_ssize_t na, nb, i, j, cap
    cdef int64_t off, stop, lim = 0, bias64
    cdef bint has_limit = limit is not None
    cdef int64_t *ka
    cdef int64_t *ca
    cdef int64_t *kb
    cdef int64_t *cb
    cdef Table t
    if len(a) < len(b):
        a, b = b, a
    na = len(a)
    nb = len(b)
    if nb == 0:
        return {}
    if na * nb < 16 or not _fast_ok(a, b, bias):
        return _kernel_py.mul(a, b, bias, limit)
    if has_limit:
        if limit <= 0:
            return {}
        if limit >= PY_KEY_MAX:
            has_limit = False
        else:
            lim = limit
    bias64 = bias
    items = sorted(a.items()) if has_limit else list(a.items())
    ka = <int64_t *> malloc(na * sizeof(int64_t))
    ca = <int64_t *> malloc(na * sizeof(int64_t))
    kb = <int64_t *> malloc(nb * sizeof(int64_t))
    cb = <int64_t *> malloc(nb * sizeof(int64_t))
    try:
        if ka == NULL or ca == NULL or kb == NULL or cb == NULL:
            raise MemoryError()
        for i in range(na):
            ka[i] = items[i][0]
            ca[i] = items[i][1]
        j = 0
        for k, c in b.items():
            kb[j] = k
            cb[j] = c
            j += 1
        cap = 64
        while cap < 2 * na:
            cap *= 2
        table_init(&t, cap)
        try:
            for j in range(nb):
                off = kb[j] - bias64
                if has_limit:
                    stop = lim - off
                    for i in range(na):
                        if ka[i] >= stop:
                            break
                        table_add(&t, ka[i] + off, i128_mul(ca[i], cb[j]))
                else:
                    for i in range(na):
                        table_add(&t, ka[i] + off, i128_mul(ca[i], cb[j]))
            out = {}
            for i in range(t.cap):
                if t.keys[i] != EMPTY:
                    if i128_fits(t.vals[i]):
                        if <long long>t.vals[i] != 0:
                            out[t.keys[i]] = <long long>t.vals[i]
                    else:
                        hi = i128_hi(t.vals[i])
                        lo = i128_lo(t.vals[i])
                        out[t.keys[i]] = (hi << 64) | lo
            return out
        finally:
            free(t.keys)
            free(t.vals)
    finally:
        free(ka)
        free(ca)
        free(kb)
        free(cb)
