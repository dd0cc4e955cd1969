# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of bivar._kernel_py.

Same two entry points, same exact semantics. Loop state lives in C ints;
binomials and accumulators stay Python objects so nothing ever
overflows. Triangles are kept in flat C arrays indexed by
j*(j-1)/2 + (i-1).
"""

from libc.stdlib cimport free, malloc
from math import comb

BACKEND = "compiled"


cdef object _comb0(long b, long a):
    if a < 0 or b < a:
        return 0
    return comb(b, a)


cdef long _tri(long j, long i):
    # flat index of cell (j, i), 1 <= i <= j
    return j * (j - 1) // 2 + (i - 1)


cdef object _beta_term(long n, long d, long big_n, long* s, long* pre_ell,
                       long* ell, long base, long* beta, long* rowsum):
    cdef long j, i, h, width, off_first, off_last, col, b, w, m, a
    cdef object prod, tail
    cdef list poly, nxt

    prod = 1
    for j in range(1, big_n + 1):
        off_first = 0
        off_last = 0
        for h in range(j + 1, big_n + 1):
            width = h - j + 1
            for i in range(1, width + 1):
                off_first += beta[_tri(h, i)]
            off_last += s[h] - rowsum[h]
        prod = prod * _comb0(n - pre_ell[j] - off_first, beta[_tri(j, 1)])
        if prod == 0:
            return 0
        prod = prod * _comb0(ell[0] - off_last, s[j] - rowsum[j])
        if prod == 0:
            return 0
        prod = prod << (s[j] - rowsum[j])
        for i in range(2, j + 1):
            col = 0
            for h in range(j + 1, big_n + 1):
                col += beta[_tri(h, i + 1)]
            prod = prod * _comb0(ell[j - i + 1] - col, beta[_tri(j, i)])
            if prod == 0:
                return 0

    poly = [1]
    for j in range(1, big_n + 1):
        for i in range(1, j + 1):
            b = beta[_tri(j, i)]
            if b == 0:
                continue
            w = j + 1 - i
            nxt = [0] * (len(poly) + w * b)
            for m in range(len(poly)):
                if poly[m] == 0:
                    continue
                for a in range(b + 1):
                    nxt[m + w * a] = nxt[m + w * a] + poly[m] * comb(b, a)
            poly = nxt

    tail = 0
    for m in range(len(poly)):
        if poly[m] != 0:
            tail = tail + poly[m] * _comb0(base + m + d, d)
    return prod * tail


cdef object _sum_rows(long n, long d, long big_n, long* s, long* pre_ell,
                      long* ell, long base, long* beta, long* rowsum, long j):
    # odometer over row j: all non-negative rows with sum <= s[j]
    cdef long i, pos
    cdef object acc
    if j > big_n:
        return _beta_term(n, d, big_n, s, pre_ell, ell, base, beta, rowsum)
    acc = 0
    for i in range(1, j + 1):
        beta[_tri(j, i)] = 0
    rowsum[j] = 0
    while True:
        acc = acc + _sum_rows(n, d, big_n, s, pre_ell, ell, base, beta, rowsum, j + 1)
        # advance the row: rightmost cell that can still grow within the cap
        pos = j
        while pos >= 1:
            if rowsum[j] < s[j]:
                beta[_tri(j, pos)] += 1
                rowsum[j] += 1
                break
            rowsum[j] -= beta[_tri(j, pos)]
            beta[_tri(j, pos)] = 0
            pos -= 1
        if pos < 1:
            return acc


cdef object _partition_sum(long n, long d, long big_n, long* ell, long base):
    # sum over partitions of big_n with at most n parts
    cdef long* parts = <long*>malloc((big_n + 1) * sizeof(long))
    cdef long* s = <long*>malloc((big_n + 1) * sizeof(long))
    cdef long* pre_ell = <long*>malloc((big_n + 1) * sizeof(long))
    cdef long* beta = <long*>malloc((big_n * (big_n + 1) // 2 + 1) * sizeof(long))
    cdef long* rowsum = <long*>malloc((big_n + 1) * sizeof(long))
    cdef long j
    if not parts or not s or not pre_ell or not beta or not rowsum:
        raise MemoryError()
    try:
        pre_ell[0] = 0
        for j in range(1, big_n + 1):
            pre_ell[j] = pre_ell[j - 1] + ell[j - 1]
        return _partitions_rec(n, d, big_n, s, pre_ell, ell, base, beta,
                               rowsum, parts, big_n, big_n, 0)
    finally:
        free(parts)
        free(s)
        free(pre_ell)
        free(beta)
        free(rowsum)


cdef object _partitions_rec(long n, long d, long big_n, long* s, long* pre_ell,
                            long* ell, long base, long* beta, long* rowsum,
                            long* parts, long remaining, long largest,
                            long depth):
    cdef long part, j
    cdef object total
    if remaining == 0:
        for j in range(1, big_n + 1):
            s[j] = 0
        for j in range(depth):
            s[parts[j]] += 1
        return _sum_rows(n, d, big_n, s, pre_ell, ell, base, beta, rowsum, 1)
    if depth == n:
        return 0
    total = 0
    part = remaining if largest > remaining else largest
    while part >= 1:
        parts[depth] = part
        total = total + _partitions_rec(n, d, big_n, s, pre_ell, ell, base,
                                        beta, rowsum, parts, remaining - part,
                                        part, depth + 1)
        part -= 1
    return total


def tensor_sum_bcd(n, d, l, r2, ell, step):
    """Tensor weight sum for families B/C/D; see bivar._kernel_py."""
    cdef long c_n = n, c_d = d, c_l = l, c_r2 = r2, c_step = step
    cdef long upper, start, j
    cdef long* c_ell
    cdef object total, t1, block
    if c_l < 0:
        return 0
    c_ell = <long*>malloc((c_l + 1) * sizeof(long))
    if not c_ell:
        raise MemoryError()
    try:
        for j in range(c_l):
            c_ell[j] = ell[j]
        c_ell[c_l] = 0
        total = 0
        start = c_l % 2 if c_step == 2 else 0
        upper = start
        while upper <= c_l:
            t1 = _comb0((c_l - upper) // 2 + c_d, c_d)
            block = _partition_sum(c_n, c_d, upper, c_ell,
                                   (c_r2 - c_l - upper) // 2)
            total = total + t1 * block
            upper += c_step
        return total
    finally:
        free(c_ell)


def tensor_sum_a(n, l, ell):
    """Tensor weight sum for family A; see bivar._kernel_py."""
    cdef long c_n = n, c_l = l
    cdef long m, j
    cdef long* c_ell
    cdef long* pre_ell
    cdef long* parts
    cdef object total
    if c_l < 0:
        return 0
    m = c_n + 1
    c_ell = <long*>malloc((c_l + 1) * sizeof(long))
    pre_ell = <long*>malloc((c_l + 1) * sizeof(long))
    parts = <long*>malloc((c_l + 1) * sizeof(long))
    if not c_ell or not pre_ell or not parts:
        raise MemoryError()
    try:
        for j in range(c_l):
            c_ell[j] = ell[j]
        c_ell[c_l] = 0
        pre_ell[0] = 0
        for j in range(1, c_l + 1):
            pre_ell[j] = pre_ell[j - 1] + c_ell[j - 1]
        total = _a_rec(m, c_l, pre_ell, parts, c_l, c_l, 0)
        return total
    finally:
        free(c_ell)
        free(pre_ell)
        free(parts)


cdef object _a_rec(long m, long l, long* pre_ell, long* parts, long remaining,
                   long largest, long depth):
    cdef long part, j, suffix
    cdef long* s
    cdef object total, prod
    if remaining == 0:
        s = <long*>malloc((l + 1) * sizeof(long))
        if not s:
            raise MemoryError()
        try:
            for j in range(l + 1):
                s[j] = 0
            for j in range(depth):
                s[parts[j]] += 1
            suffix = 0
            prod = 1
            for j in range(l, 0, -1):
                prod = prod * _comb0(m - pre_ell[j] - suffix, s[j])
                if prod == 0:
                    break
                suffix += s[j]
            return prod
        finally:
            free(s)
    if depth == m:
        return 0
    total = 0
    part = remaining if largest > remaining else largest
    while part >= 1:
        parts[depth] = part
        total = total + _a_rec(m, l, pre_ell, parts, remaining - part, part,
                               depth + 1)
        part -= 1
    return total
