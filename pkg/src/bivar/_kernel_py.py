"""Pure-Python evaluation of the partition-indexed tensor weight sums.

This module is the fallback twin of the compiled extension
``bivar._kernel``; both expose the same two functions and must return
identical values for identical arguments. Everything is exact: loop
bookkeeping is small ints, accumulated values are arbitrary precision.

The half-integral depth parameter ``r`` is passed as its doubled value
``r2`` so floors are plain integer division; no floats appear anywhere.
"""

from math import comb

BACKEND = "pure"


def _comb0(b, a):
    # zero-padded binomial: C(b, a) = 0 when a < 0 or b < a
    if a < 0 or b < a:
        return 0
    return comb(b, a)


def _partitions(total, max_parts):
    # partitions of `total` with at most `max_parts` parts, largest first
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(prefix)
            return
        if len(prefix) == max_parts:
            return
        for part in range(min(largest, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(total, total, ())
    return out


def _row_options(length, cap):
    # non-negative integer rows of the given length with sum <= cap
    if length == 0:
        return [()]
    out = []

    def rec(prefix, left, slots):
        if slots == 0:
            out.append(prefix)
            return
        for v in range(left + 1):
            rec(prefix + (v,), left - v, slots - 1)

    rec((), cap, length)
    return out


def tensor_sum_bcd(n, d, l, r2, ell, step):
    """Tensor weight sum for families B/C/D.

    n: rank; d: binomial degree (n-1 for B and C, n-2 for D); l: degree
    of the smaller tensor factor; r2: twice the depth r; ell: level
    counts (l_0, ..., l_{l-1}) -- entries beyond index l-1 are ignored;
    step: 1 sums over every N <= l, 2 restricts to N == l (mod 2).
    Returns 0 for negative l.
    """
    if l < 0:
        return 0
    total = 0
    start = l % 2 if step == 2 else 0
    for upper in range(start, l + 1, step):
        t1 = _comb0((l - upper) // 2 + d, d)
        base = (r2 - l - upper) // 2
        block = 0
        for q in _partitions(upper, n):
            block += _partition_block(n, d, upper, q, ell, base)
        total += t1 * block
    return total


def _partition_block(n, d, big_n, q, ell, base):
    # s[j] = number of parts of q equal to j, 1 <= j <= big_n
    s = [0] * (big_n + 1)
    for part in q:
        s[part] += 1
    pre_ell = [0] * (big_n + 1)
    for j in range(1, big_n + 1):
        pre_ell[j] = pre_ell[j - 1] + ell[j - 1]

    options = [None] + [_row_options(j, s[j]) for j in range(1, big_n + 1)]
    rows = [None] * (big_n + 1)
    acc = 0

    def fill(j):
        nonlocal acc
        if j > big_n:
            acc += _beta_term(n, d, big_n, s, pre_ell, ell, base, rows)
            return
        for row in options[j]:
            rows[j] = row
            fill(j + 1)

    fill(1)
    return acc


def _beta_term(n, d, big_n, s, pre_ell, ell, base, rows):
    prod = 1
    for j in range(1, big_n + 1):
        row = rows[j]
        rowsum = sum(row)
        # entries of higher rows occupying the first blocks seen from row j
        off_first = 0
        off_last = 0
        for h in range(j + 1, big_n + 1):
            upper = rows[h]
            width = h - j + 1
            off_first += sum(upper[:width])
            off_last += s[h] - sum(upper)
        prod *= _comb0(n - pre_ell[j] - off_first, row[0])
        if prod == 0:
            return 0
        prod *= _comb0(ell[0] - off_last, s[j] - rowsum)
        if prod == 0:
            return 0
        prod <<= s[j] - rowsum
        for i in range(2, j + 1):
            col = sum(rows[h][i] for h in range(j + 1, big_n + 1))
            prod *= _comb0(ell[j - i + 1] - col, row[i - 1])
            if prod == 0:
                return 0

    # distribute the alpha box-product by its weighted sum: the cell (j, i)
    # contributes weight (j + 1 - i) per unit of alpha
    poly = [1]
    for j in range(1, big_n + 1):
        row = rows[j]
        for i in range(1, j + 1):
            b = row[i - 1]
            if b == 0:
                continue
            w = j + 1 - i
            nxt = [0] * (len(poly) + w * b)
            for m, c in enumerate(poly):
                if c == 0:
                    continue
                for a in range(b + 1):
                    nxt[m + w * a] += c * comb(b, a)
            poly = nxt

    tail = 0
    for m, c in enumerate(poly):
        if c:
            tail += c * _comb0(base + m + d, d)
    return prod * tail


def tensor_sum_a(n, l, ell):
    """Tensor weight sum for family A (rank n, so n + 1 coordinates).

    Sums over partitions of l into at most n + 1 parts the product of
    slot-choice binomials; iterates nothing for negative l and returns 1
    at l = 0 (empty product).
    """
    if l < 0:
        return 0
    m = n + 1
    pre_ell = [0] * (l + 1)
    for j in range(1, l + 1):
        pre_ell[j] = pre_ell[j - 1] + ell[j - 1]
    total = 0
    for q in _partitions(l, m):
        s = [0] * (l + 1)
        for part in q:
            s[part] += 1
        suffix = 0
        prod = 1
        for j in range(l, 0, -1):
            prod *= _comb0(m - pre_ell[j] - suffix, s[j])
            if prod == 0:
                break
            suffix += s[j]
        total += prod
    return total
