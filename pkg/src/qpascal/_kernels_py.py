"""Pure-Python per-cell kernels; same contract as the compiled ``_kernels``."""

import numpy as np


def pascal_mod_rows(rows, modulus):
    """``C(r, c) mod modulus`` for ``0 <= c <= r < rows`` by the row recurrence."""
    out = np.zeros((rows, rows), dtype=np.int64)
    prev = []
    for r in range(rows):
        row = [1 % modulus] * (r + 1)
        for c in range(1, r):
            row[c] = (prev[c - 1] + prev[c]) % modulus
        out[r, : r + 1] = row
        prev = row
    return out


def valuation_rows(rows, p, cap):
    """``min(nu_p(C(r, c)), cap)`` from Kummer carries, lower triangle."""
    out = np.zeros((rows, rows), dtype=np.int64)
    for r in range(rows):
        row = [0] * (r + 1)
        for c in range(r + 1):
            n, k = r, c
            carry = total = 0
            while n:
                n, nd = divmod(n, p)
                k, kd = divmod(k, p)
                if nd < kd:
                    carry = 1
                elif nd > kd:
                    carry = 0
                total += carry
            row[c] = total if total < cap else cap
        out[r, : r + 1] = row
    return out


def carpet_mod(size, table, p):
    """Digitwise product of ``table[x_i][y_i] mod p``, indexed ``[y, x]``."""
    tab = [list(map(int, row)) for row in np.asarray(table)]
    out = np.zeros((size, size), dtype=np.int64)
    for y in range(size):
        row = [0] * size
        for x in range(size):
            xs, ys, acc = x, y, 1
            while (xs or ys) and acc:
                xs, xd = divmod(xs, p)
                ys, yd = divmod(ys, p)
                acc = acc * tab[xd][yd] % p
            row[x] = acc
        out[y] = row
    return out
