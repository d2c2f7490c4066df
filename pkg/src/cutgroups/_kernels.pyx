# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see _kernels_py for the reference."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, int32_t

cnp.import_array()


cdef inline Py_ssize_t _find(int64_t[::1] parent, Py_ssize_t x) noexcept nogil:
    cdef Py_ssize_t root = x
    cdef Py_ssize_t nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def orbit_labels(perms):
    cdef const int64_t[:, ::1] P = np.ascontiguousarray(perms, dtype=np.int64)
    cdef Py_ssize_t k = P.shape[0]
    cdef Py_ssize_t n = P.shape[1]
    out = np.arange(n, dtype=np.int64)
    cdef int64_t[::1] parent = out
    cdef Py_ssize_t s, i, a, b
    with nogil:
        for s in range(k):
            for i in range(n):
                a = _find(parent, i)
                b = _find(parent, P[s, i])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
        for i in range(n):
            parent[i] = _find(parent, i)
    return out


def cayley_table(rmul, parent, via, order):
    cdef const int32_t[:, ::1] R = np.ascontiguousarray(rmul, dtype=np.int32)
    cdef const int64_t[::1] par = np.ascontiguousarray(parent, dtype=np.int64)
    cdef const int64_t[::1] vi = np.ascontiguousarray(via, dtype=np.int64)
    cdef const int64_t[::1] od = np.ascontiguousarray(order, dtype=np.int64)
    cdef Py_ssize_t n = R.shape[1]
    out = np.empty((n, n), dtype=np.int32)
    cdef int32_t[:, ::1] T = out
    cdef Py_ssize_t idx, i, j, pj, s
    with nogil:
        for idx in range(od.shape[0]):
            j = od[idx]
            pj = par[j]
            if pj < 0:
                for i in range(n):
                    T[i, j] = <int32_t>i
            else:
                s = vi[j]
                for i in range(n):
                    T[i, j] = R[s, T[i, pj]]
    return out


def class_counts(table, inv, class_of, members, reps, Py_ssize_t nclasses):
    cdef const int32_t[:, ::1] T = np.ascontiguousarray(table, dtype=np.int32)
    cdef const int64_t[::1] iv = np.ascontiguousarray(inv, dtype=np.int64)
    cdef const int64_t[::1] co = np.ascontiguousarray(class_of, dtype=np.int64)
    cdef const int64_t[::1] mem = np.ascontiguousarray(members, dtype=np.int64)
    cdef const int64_t[::1] rp = np.ascontiguousarray(reps, dtype=np.int64)
    out = np.zeros((nclasses, rp.shape[0]), dtype=np.int64)
    cdef int64_t[:, ::1] M = out
    cdef Py_ssize_t k, u
    with nogil:
        for k in range(rp.shape[0]):
            for u in range(mem.shape[0]):
                M[co[T[iv[mem[u]], rp[k]]], k] += 1
    return out


cdef inline int64_t _powmod(int64_t b, int64_t e, int64_t m) noexcept nogil:
    cdef int64_t r = 1
    b %= m
    while e > 0:
        if e & 1:
            r = (r * b) % m
        b = (b * b) % m
        e >>= 1
    return r


def rref_mod_p(a, int64_t p):
    m_arr = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % p)
    cdef int64_t[:, ::1] m = m_arr
    cdef Py_ssize_t rows = m.shape[0]
    cdef Py_ssize_t cols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t inv, f, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        with nogil:
            if piv != r:
                for j in range(cols):
                    tmp = m[r, j]
                    m[r, j] = m[piv, j]
                    m[piv, j] = tmp
            inv = _powmod(m[r, c], p - 2, p)
            for j in range(cols):
                m[r, j] = (m[r, j] * inv) % p
            for i in range(rows):
                if i != r and m[i, c] != 0:
                    f = m[i, c]
                    for j in range(cols):
                        m[i, j] = (m[i, j] - f * m[r, j]) % p
                        if m[i, j] < 0:
                            m[i, j] += p
        pivots.append(c)
        r += 1
    return m_arr, pivots
