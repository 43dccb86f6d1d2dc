# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; mirrors _kernels_py function by function.

All arithmetic goes through flat q*q add/mul tables and q-length neg/inv
tables supplied by the caller, so the loops are pure integer code.
"""

from cpython cimport array
import array

BACKEND = "compiled"

cdef array.array _INT = array.array('i', [])


def min_weight(int[::1] gen, int k, int n, int q,
               int[::1] addt, int[::1] mult, int[::1] negt):
    cdef array.array cw_a = array.clone(_INT, n, zero=False)
    cdef array.array digits_a = array.clone(_INT, k, zero=True)
    cdef array.array best_a = array.clone(_INT, k, zero=True)
    cdef int[::1] cw = cw_a
    cdef int[::1] digits = digits_a
    cdef int[::1] best_digits = best_a
    cdef int best = n + 1
    cdef int best_lead = -1
    cdef int lead, nf, pos, c, w, old, delta, i, rowbase
    cdef bint wrapped

    for lead in range(k - 1, -1, -1):
        for c in range(n):
            cw[c] = gen[lead * n + c]
        nf = k - 1 - lead
        for i in range(nf):
            digits[i] = 0
        while True:
            w = 0
            for c in range(n):
                if cw[c] != 0:
                    w += 1
            if w < best:
                best = w
                best_lead = lead
                for i in range(nf):
                    best_digits[i] = digits[i]
            pos = nf - 1
            while pos >= 0:
                old = digits[pos]
                rowbase = (lead + 1 + pos) * n
                if old + 1 < q:
                    digits[pos] = old + 1
                    delta = addt[(old + 1) * q + negt[old]]
                    wrapped = False
                else:
                    digits[pos] = 0
                    delta = negt[old]
                    wrapped = True
                for c in range(n):
                    cw[c] = addt[cw[c] * q + mult[delta * q + gen[rowbase + c]]]
                if not wrapped:
                    break
                pos -= 1
            if pos < 0:
                break

    msg = (0,) * best_lead + (1,) + tuple(best_a[i] for i in range(k - 1 - best_lead))
    return best, msg


cdef bint _columns_singular(int[::1] gen, int n, int k, const long[::1] cols,
                            int q, int[::1] addt, int[::1] mult,
                            int[::1] negt, int[::1] invt, int[::1] sub) nogil:
    cdef int i, j, c, piv, invp, f, tmp
    for i in range(k):
        for j in range(k):
            sub[i * k + j] = gen[i * n + cols[j]]
    for c in range(k):
        piv = -1
        for i in range(c, k):
            if sub[i * k + c] != 0:
                piv = i
                break
        if piv < 0:
            return True
        if piv != c:
            for j in range(k):
                tmp = sub[c * k + j]
                sub[c * k + j] = sub[piv * k + j]
                sub[piv * k + j] = tmp
        invp = invt[sub[c * k + c]]
        for i in range(c + 1, k):
            f = sub[i * k + c]
            if f != 0:
                f = mult[f * q + invp]
                for j in range(c, k):
                    sub[i * k + j] = addt[sub[i * k + j] * q +
                                          negt[mult[f * q + sub[c * k + j]]]]
    return False


def first_dependent_columns(int[::1] gen, int k, int n, int q,
                            int[::1] addt, int[::1] mult,
                            int[::1] negt, int[::1] invt):
    if k == 0 or k > n:
        return None
    cdef array.array cols_a = array.array('l', range(k))
    cdef array.array sub_a = array.clone(_INT, k * k, zero=True)
    cdef long[::1] cols = cols_a
    cdef int[::1] sub = sub_a
    cdef int i, j

    while True:
        if _columns_singular(gen, n, k, cols, q, addt, mult, negt, invt, sub):
            return tuple(cols_a)
        i = k - 1
        while i >= 0 and cols[i] == i + n - k:
            i -= 1
        if i < 0:
            return None
        cols[i] += 1
        for j in range(i + 1, k):
            cols[j] = cols[j - 1] + 1


def search_systematic(int k, int r, int q,
                      int[::1] addt, int[::1] mult,
                      int[::1] negt, int[::1] invt):
    cdef int ndigits = k * r
    cdef int n = k + r
    cdef long long total = 1
    cdef int i, j, t, pos, old, acc
    for i in range(ndigits):
        total *= q

    cdef array.array digits_a = array.clone(_INT, max(ndigits, 1), zero=True)
    cdef array.array gen_a = array.clone(_INT, max(k * n, 1), zero=True)
    cdef array.array gram_a = array.clone(_INT, max(k * k, 1), zero=True)
    cdef array.array sub_a = array.clone(_INT, max(k * k, 1), zero=True)
    cdef array.array cols_a = array.array('l', range(max(k, 1)))
    cdef int[::1] digits = digits_a
    cdef int[::1] gen = gen_a
    cdef int[::1] gram = gram_a
    cdef int[::1] sub = sub_a
    cdef long[::1] cols = cols_a
    cdef int zero_cnt = ndigits
    cdef long long idx = 0
    cdef bint dependent

    # gen = [I_k : P]; the identity part never changes
    for i in range(k):
        for j in range(n):
            gen[i * n + j] = 1 if i == j else 0

    while True:
        if zero_cnt == 0 or ndigits == 0:
            for i in range(k):
                for j in range(r):
                    gen[i * n + k + j] = digits[i * r + j]
            # LCD: I + P P^T nonsingular
            for i in range(k):
                for j in range(k):
                    acc = 1 if i == j else 0
                    for t in range(r):
                        acc = addt[acc * q + mult[digits[i * r + t] * q +
                                                  digits[j * r + t]]]
                    gram[i * k + j] = acc
            for i in range(k):
                cols[i] = i
            if not _columns_singular(gram, k, k, cols, q, addt, mult, negt, invt, sub):
                # MDS: every k-subset of the n columns independent
                dependent = False
                for i in range(k):
                    cols[i] = i
                while True:
                    if _columns_singular(gen, n, k, cols, q, addt, mult, negt,
                                         invt, sub):
                        dependent = True
                        break
                    i = k - 1
                    while i >= 0 and cols[i] == i + n - k:
                        i -= 1
                    if i < 0:
                        break
                    cols[i] += 1
                    for j in range(i + 1, k):
                        cols[j] = cols[j - 1] + 1
                if not dependent:
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
