# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same API and results as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t, uint8_t
from libcpp.vector cimport vector

cnp.import_array()

NAME = "cython"


cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil


cdef inline bint _violated(int64_t y, int64_t hp, int64_t hn, int64_t bp, int64_t bn) noexcept nogil:
    return (hp & y) == 0 and (hn & ~y) == 0 and (bp & ~y) == 0 and (bn & y) == 0


cdef _unpack(rules, int64_t[:, ::1] buf):
    cdef Py_ssize_t i = 0
    for hp, hn, bp, bn in rules:
        buf[i, 0] = hp
        buf[i, 1] = hn
        buf[i, 2] = bp
        buf[i, 3] = bn
        i += 1


cdef vector[int64_t] _classical(int n, int64_t[:, ::1] r) noexcept nogil:
    cdef vector[int64_t] out
    cdef int64_t y, top = (<int64_t>1) << n
    cdef Py_ssize_t k, m = r.shape[0]
    cdef bint ok
    for y in range(top):
        ok = True
        for k in range(m):
            if _violated(y, r[k, 0], r[k, 1], r[k, 2], r[k, 3]):
                ok = False
                break
        if ok:
            out.push_back(y)
    return out


def classical_models(int n, rules):
    arr = np.zeros((len(rules), 4), dtype=np.int64)
    _unpack(rules, arr)
    cdef vector[int64_t] out
    cdef int64_t[:, ::1] r = arr
    with nogil:
        out = _classical(n, r)
    return [out[i] for i in range(out.size())]


def se_models(int n, rules):
    arr = np.zeros((len(rules), 4), dtype=np.int64)
    _unpack(rules, arr)
    cdef int64_t[:, ::1] r = arr
    cdef Py_ssize_t m = r.shape[0], k, kept
    cdef vector[int64_t] models, xs, ys
    cdef vector[int64_t] rhp, rbp
    cdef int64_t x, y
    cdef Py_ssize_t i
    cdef bint ok
    rhp.resize(m)
    rbp.resize(m)
    with nogil:
        models = _classical(n, r)
        for i in range(<Py_ssize_t>models.size()):
            y = models[i]
            kept = 0
            for k in range(m):
                if (r[k, 1] & ~y) == 0 and (r[k, 3] & y) == 0:
                    rhp[kept] = r[k, 0]
                    rbp[kept] = r[k, 2]
                    kept += 1
            x = 0
            while True:
                ok = True
                for k in range(kept):
                    if (rbp[k] & ~x) == 0 and (rhp[k] & x) == 0:
                        ok = False
                        break
                if ok:
                    xs.push_back(x)
                    ys.push_back(y)
                if x == y:
                    break
                x = (x - y) & y
    return [(xs[i], ys[i]) for i in range(xs.size())]


cdef inline bint _le(int64_t a, int64_t b, int w) noexcept nogil:
    cdef int64_t ta = a >> w, tb = b >> w
    cdef int64_t hmask = ((<int64_t>1) << w) - 1
    if ta & ~tb:
        return False
    if ta != tb:
        return True
    return (a & ~b & hmask) == 0


cdef inline int _rank(int64_t code, int w) noexcept nogil:
    return popcount(<unsigned long long>(code >> w)) * (w + 1) + \
        popcount(<unsigned long long>(code & (((<int64_t>1) << w) - 1)))


def minimal_codes(codes, int w):
    cdef list distinct = sorted(set(codes), key=lambda c: (_rank(c, w), c))
    cdef vector[int64_t] accepted
    cdef int64_t c
    cdef Py_ssize_t j
    cdef bint dominated
    for c in distinct:
        dominated = False
        for j in range(<Py_ssize_t>accepted.size()):
            if _le(accepted[j], c, w):
                dominated = True
                break
        if not dominated:
            accepted.push_back(c)
    return [accepted[j] for j in range(accepted.size())]


def sigma_subset(codes1, codes2, int w):
    cdef Py_ssize_t n1 = len(codes1), n2 = len(codes2), i, j
    if n2 == 0:
        return [False] * n1
    if 2 * w > 30:
        raise ValueError("alphabet too wide for the distance bitmap")
    cdef int64_t[::1] a = np.asarray(codes1, dtype=np.int64)
    cdef int64_t[::1] b = np.asarray(codes2, dtype=np.int64)
    cdef int64_t size = (<int64_t>1) << (2 * w)
    cdef vector[uint8_t] seen, minimal
    cdef vector[int64_t] distinct
    cdef int64_t d
    seen.resize((size >> 3) + 1, 0)
    minimal.resize((size >> 3) + 1, 0)
    with nogil:
        for i in range(n1):
            for j in range(n2):
                d = a[i] ^ b[j]
                if not (seen[d >> 3] >> (d & 7)) & 1:
                    seen[d >> 3] |= <uint8_t>(1 << (d & 7))
                    distinct.push_back(d)
    for d in minimal_codes([distinct[i] for i in range(distinct.size())], w):
        minimal[d >> 3] |= <uint8_t>(1 << (d & 7))
    out = np.zeros(n1, dtype=np.uint8)
    cdef uint8_t[::1] o = out
    with nogil:
        for i in range(n1):
            for j in range(n2):
                d = a[i] ^ b[j]
                if (minimal[d >> 3] >> (d & 7)) & 1:
                    o[i] = 1
                    break
    return [bool(v) for v in out]


def sigma_card(codes1, codes2, int w):
    cdef Py_ssize_t n1 = len(codes1), n2 = len(codes2), i, j
    if n2 == 0:
        return [False] * n1
    cdef int64_t[::1] a = np.asarray(codes1, dtype=np.int64)
    cdef int64_t[::1] b = np.asarray(codes2, dtype=np.int64)
    best = np.zeros(n1, dtype=np.int64)
    cdef int64_t[::1] bst = best
    cdef int k, m = 1 << 30, kmin
    with nogil:
        for i in range(n1):
            kmin = 1 << 30
            for j in range(n2):
                k = _rank(a[i] ^ b[j], w)
                if k < kmin:
                    kmin = k
            bst[i] = kmin
            if kmin < m:
                m = kmin
    return [bool(v == m) for v in best]


def minimal_rows(rows, int w):
    if len(rows) == 0:
        return []
    arr = np.ascontiguousarray(np.asarray(rows, dtype=np.int64).reshape(len(rows), -1))
    cdef int64_t[:, ::1] r = arr
    cdef Py_ssize_t n = r.shape[0], width = r.shape[1], i, j, k, idx, acc
    ranks = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] rk = ranks
    for i in range(n):
        for k in range(width):
            rk[i] += _rank(r[i, k], w)
    # ties broken by the row itself, matching the pure-Python order
    keys = [arr[:, k] for k in range(width - 1, -1, -1)] + [ranks]
    order_arr = np.lexsort(keys).astype(np.int64) if n else np.zeros(0, dtype=np.int64)
    cdef int64_t[::1] order = order_arr
    out = np.zeros(n, dtype=np.uint8)
    cdef uint8_t[::1] o = out
    cdef vector[Py_ssize_t] accepted
    cdef bint dominated, le
    with nogil:
        for idx in range(n):
            i = order[idx]
            dominated = False
            for acc in range(<Py_ssize_t>accepted.size()):
                j = accepted[acc]
                le = True
                for k in range(width):
                    if not _le(r[j, k], r[i, k], w):
                        le = False
                        break
                if le:
                    dominated = True
                    break
            if not dominated:
                accepted.push_back(i)
                o[i] = 1
    return [bool(v) for v in out]
