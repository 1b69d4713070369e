# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled per-cell kernels; same contract as ``_kernels_py``."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def pascal_mod_rows(Py_ssize_t rows, long long modulus):
    out = np.zeros((rows, rows), dtype=np.int64)
    cdef long long[:, ::1] g = out
    cdef Py_ssize_t r, c
    if rows == 0:
        return out
    with nogil:
        g[0, 0] = 1 % modulus
        for r in range(1, rows):
            g[r, 0] = 1 % modulus
            for c in range(1, r + 1):
                g[r, c] = (g[r - 1, c - 1] + g[r - 1, c]) % modulus
    return out


def valuation_rows(Py_ssize_t rows, long long p, long long cap):
    out = np.zeros((rows, rows), dtype=np.int64)
    cdef long long[:, ::1] g = out
    cdef Py_ssize_t r, c
    cdef long long n, k, nd, kd, carry, total
    with nogil:
        for r in range(rows):
            for c in range(r + 1):
                n = r
                k = c
                carry = 0
                total = 0
                while n > 0:
                    nd = n % p
                    kd = k % p
                    if nd < kd:
                        carry = 1
                    elif nd > kd:
                        carry = 0
                    total += carry
                    n //= p
                    k //= p
                g[r, c] = total if total < cap else cap
    return out


def carpet_mod(Py_ssize_t size, table, long long p):
    cdef long long[:, ::1] tab = np.ascontiguousarray(table, dtype=np.int64)
    out = np.zeros((size, size), dtype=np.int64)
    cdef long long[:, ::1] g = out
    cdef Py_ssize_t x, y
    cdef long long xs, ys, acc
    with nogil:
        for y in range(size):
            for x in range(size):
                xs = x
                ys = y
                acc = 1
                while (xs > 0 or ys > 0) and acc != 0:
                    acc = acc * tab[xs % p, ys % p] % p
                    xs //= p
                    ys //= p
                g[y, x] = acc
    return out
