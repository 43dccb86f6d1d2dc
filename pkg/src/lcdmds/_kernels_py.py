"""Pure-Python reference implementations of the enumeration kernels.

The compiled module _speedups mirrors these function by function; both
must produce identical results (same enumeration orders, same
tie-breaking), which tests/test_kernels.py enforces.
"""

from __future__ import annotations

from itertools import combinations

BACKEND = "python"


def min_weight(F, rows) -> tuple[int, tuple[int, ...]]:
    """Minimum nonzero-codeword weight of the code generated by rows.

    Enumerates one representative per projective message class (leading
    nonzero coordinate fixed to 1) in ascending lexicographic message
    order; returns (weight, first minimizing message).
    """
    k = len(rows)
    n = len(rows[0])
    q = F.q
    add, mul, neg = F.add, F.mul, F.neg
    best = n + 1
    best_msg: tuple[int, ...] = ()
    for lead in range(k - 1, -1, -1):
        cw = list(rows[lead])
        nf = k - 1 - lead
        digits = [0] * nf
        while True:
            w = 0
            for x in cw:
                if x:
                    w += 1
            if w < best:
                best = w
                best_msg = (0,) * lead + (1,) + tuple(digits)
            pos = nf - 1
            while pos >= 0:
                old = digits[pos]
                row = rows[lead + 1 + pos]
                if old + 1 < q:
                    digits[pos] = old + 1
                    delta = F.sub(old + 1, old)
                else:
                    digits[pos] = 0
                    delta = neg(old)
                for c in range(n):
                    cw[c] = add(cw[c], mul(delta, row[c]))
                if old + 1 < q:
                    break
                pos -= 1
            if pos < 0:
                break
    return best, best_msg


def _columns_singular(F, rows, cols, k) -> bool:
    sub = [[rows[i][c] for c in cols] for i in range(k)]
    for c in range(k):
        piv = None
        for i in range(c, k):
            if sub[i][c]:
                piv = i
                break
        if piv is None:
            return True
        if piv != c:
            sub[c], sub[piv] = sub[piv], sub[c]
        inv = F.inv(sub[c][c])
        for i in range(c + 1, k):
            if sub[i][c]:
                f = F.mul(sub[i][c], inv)
                for j in range(c, k):
                    sub[i][j] = F.sub(sub[i][j], F.mul(f, sub[c][j]))
    return False


def first_dependent_columns(F, rows):
    """First (lexicographically) singular k-subset of columns, or None."""
    k = len(rows)
    if k == 0:
        return None
    n = len(rows[0])
    if k > n:
        return None
    for cols in combinations(range(n), k):
        if _columns_singular(F, rows, cols, k):
            return cols
    return None


def _gram_singular(F, P, k, r) -> bool:
    gram = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    for i in range(k):
        for j in range(k):
            acc = gram[i][j]
            for t in range(r):
                acc = F.add(acc, F.mul(P[i][t], P[j][t]))
            gram[i][j] = acc
    return _columns_singular(F, gram, range(k), k)


def search_systematic(F, k, r) -> tuple[int, int]:
    """First [I_k : P] that is both LCD and MDS, over all P in code order.

    Candidate index encodes P row-major as big-endian base-q digits.
    Returns (hit_index, candidates_tested); hit_index is -1 after complete
    exhaustion.
    """
    q = F.q
    ndigits = k * r
    total = q**ndigits
    digits = [0] * ndigits
    zero_cnt = ndigits
    idx = 0
    while True:
        if zero_cnt == 0 or ndigits == 0:
            P = [digits[i * r:(i + 1) * r] for i in range(k)]
            if not _gram_singular(F, P, k, r):
                gen = [[1 if i == j else 0 for j in range(k)] + P[i] for i in range(k)]
                if first_dependent_columns(F, gen) is None:
                    return idx, idx + 1
        idx += 1
        if idx >= total:
            return -1, total
        pos = ndigits - 1
        while True:
            old = digits[pos]
            if old == 0:
                zero_cnt -= 1
            if old + 1 < q:
                digits[pos] = old + 1
                break
            digits[pos] = 0
            zero_cnt += 1
            pos -= 1
