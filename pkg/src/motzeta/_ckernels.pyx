# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of :mod:`motzeta._pykernels`."""

from libc.stdlib cimport calloc, free
from libc.string cimport memset
from libc.stdint cimport int64_t, INT64_MAX


def expand_product(factors, Py_ssize_t D):
    cdef Py_ssize_t nf = len(factors)
    cdef Py_ssize_t i, d, k, e, W, off
    cdef long long a, b, K, lo = 0, hi = 0
    cdef int64_t *cur
    cdef int64_t *nxt
    cdef int64_t *tmp
    cdef int64_t c, v
    pairs = [(int(f[0]), int(f[1])) for f in factors]
    for a, b in pairs:
        if b <= 0:
            raise ValueError("factor b must be positive")
        K = D // b
        if K == 0:
            return [dict() for _ in range(D + 1)]
        lo += min(0, a * K)
        hi += max(0, a * K)
    W = hi - lo + 1
    off = -lo
    cur = <int64_t *> calloc((D + 1) * W, sizeof(int64_t))
    nxt = <int64_t *> calloc((D + 1) * W, sizeof(int64_t))
    if cur == NULL or nxt == NULL:
        free(cur)
        free(nxt)
        raise MemoryError()
    try:
        cur[off] = 1
        for i in range(nf):
            a, b = pairs[i]
            memset(nxt, 0, (D + 1) * W * sizeof(int64_t))
            for d in range(D + 1):
                for e in range(W):
                    c = cur[d * W + e]
                    if c == 0:
                        continue
                    k = 1
                    while d + b * k <= D:
                        v = nxt[(d + b * k) * W + e + a * k]
                        if v > INT64_MAX - c:
                            raise OverflowError("coefficient exceeds int64")
                        nxt[(d + b * k) * W + e + a * k] = v + c
                        k += 1
            tmp = cur
            cur = nxt
            nxt = tmp
        out = []
        for d in range(D + 1):
            row = {}
            for e in range(W):
                if cur[d * W + e]:
                    row[e - off] = cur[d * W + e]
            out.append(row)
        return out
    finally:
        free(cur)
        free(nxt)


def representable(parts, long long target):
    cdef long long p, v
    cdef char *reach
    if target < 0:
        return False
    reach = <char *> calloc(target + 1, sizeof(char))
    if reach == NULL:
        raise MemoryError()
    try:
        reach[0] = 1
        for p in set(parts):
            if p <= 0:
                continue
            for v in range(p, target + 1):
                if reach[v - p]:
                    reach[v] = 1
        return bool(reach[target])
    finally:
        free(reach)
