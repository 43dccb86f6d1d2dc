"""Independent brute-force verifiers.

These deliberately re-derive every property with different algorithms
than the codes module (explicit subspace intersection instead of Gram
rank, full codeword enumeration instead of projective representatives,
characteristic polynomials instead of determinant tests) so the two
routes can check each other.  Shared helpers are limited to the gf and
matrix primitives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product

from .codes import LinearCode
from .errors import CapExceeded
from .gf import FieldSpec
from .limits import cap
from .matrix import EUCLIDEAN, HERMITIAN, Mat, vstack


def hull_basis_bruteforce(C: LinearCode, form: str = EUCLIDEAN) -> Mat:
    """A basis of C intersected with its (Hermitian) dual, by explicitly
    solving for vectors lying in both row spaces."""
    F = C.field
    n, k = C.n, C.k
    if form == HERMITIAN:
        F.subfield_order  # raises NotASquareField when unavailable
    if k == 0:
        return Mat(F, 0, n, [])
    U = C.gen
    W = U.nullspace() if form == EUCLIDEAN else U.conj().nullspace()
    if W.rows == 0:
        return Mat(F, 0, n, [])
    stacked = vstack([U, W])
    left_kernel = stacked.transpose().nullspace()
    rows = []
    for i in range(left_kernel.rows):
        z = left_kernel.row(i)
        vec = [0] * n
        for r in range(k):
            if z[r]:
                for c in range(n):
                    vec[c] = F.add(vec[c], F.mul(z[r], U.entry(r, c)))
        rows.append(vec)
    candidates = Mat(F, len(rows), n, [x for r in rows for x in r])
    reduced, pivots = candidates.rref()
    basis = [reduced.row(i) for i in range(len(pivots))]
    return Mat(F, len(basis), n, [x for r in basis for x in r])


# -- characteristic polynomial and spectrum --------------------------------
# Polynomials over F are little-endian coefficient lists here.

def _padd(F: FieldSpec, a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = F.add(out[i], x)
    return out


def _pmul(F: FieldSpec, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def _pneg(F: FieldSpec, a):
    return [F.neg(x) for x in a]


def _charpoly_cofactor(F: FieldSpec, M: Mat):
    """det(xI - M) by minor expansion over the polynomial ring."""
    n = M.rows
    P = [[[F.neg(M.entry(i, j))] for j in range(n)] for i in range(n)]
    for i in range(n):
        P[i][i] = _padd(F, P[i][i], [0, 1])

    def det(rows, cols):
        if not rows:
            return [1]
        if len(rows) == 1:
            return P[rows[0]][cols[0]]
        acc = []
        sign = 1
        for idx, r in enumerate(rows):
            head = P[r][cols[0]]
            if head:
                minor = det(rows[:idx] + rows[idx + 1:], cols[1:])
                term = _pmul(F, head, minor)
                acc = _padd(F, acc, term if sign > 0 else _pneg(F, term))
            sign = -sign
        return acc

    coeffs = det(list(range(n)), list(range(n)))
    coeffs += [0] * (n + 1 - len(coeffs))
    return list(reversed(coeffs))  # descending powers


def _charpoly_berkowitz(F: FieldSpec, M: Mat):
    """Division-free characteristic polynomial, descending coefficients."""
    n = M.rows
    A = M.tolists()
    p = [1]
    for r in range(n - 1, -1, -1):
        size = n - r
        a = A[r][r]
        R = A[r][r + 1:]
        col = [A[i][r] for i in range(r + 1, n)]
        N = [row[r + 1:] for row in A[r + 1:]]
        t = [1, F.neg(a)]
        w = col
        for _ in range(size - 1):
            acc = 0
            for x, y in zip(R, w):
                acc = F.add(acc, F.mul(x, y))
            t.append(F.neg(acc))
            nxt = []
            for row in N:
                s = 0
                for x, y in zip(row, w):
                    s = F.add(s, F.mul(x, y))
                nxt.append(s)
            w = nxt
        out = []
        for i in range(size + 1):
            s = 0
            for j in range(max(0, i - size), min(i, size - 1) + 1):
                s = F.add(s, F.mul(t[i - j], p[j]))
            out.append(s)
        p = out
    return p


def charpoly(F: FieldSpec, M: Mat):
    """Characteristic polynomial coefficients, descending powers of x."""
    if M.rows != M.cols:
        raise CapExceeded("charpoly needs a square matrix")
    if M.rows <= 6:
        return _charpoly_cofactor(F, M)
    return _charpoly_berkowitz(F, M)


def _eval_descending(F: FieldSpec, coeffs, x: int) -> int:
    acc = 0
    for c in coeffs:
        acc = F.add(F.mul(acc, x), c)
    return acc


def _divide_out_root(F: FieldSpec, coeffs, lam: int):
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(F.add(c, F.mul(lam, out[-1])))
    remainder = out.pop()
    return out, remainder


def spectrum(M: Mat, order_cap: int | None = None) -> list[tuple[int, int]]:
    """Eigenvalues of M lying in the base field, with multiplicities."""
    F = M.field
    limit = order_cap if order_cap is not None else cap("field")
    if F.q > limit:
        raise CapExceeded(f"root scan over {F.q} elements exceeds cap {limit}")
    poly = charpoly(F, M)
    out = []
    for lam in range(F.q):
        mult = 0
        work = poly
        while len(work) > 1 and _eval_descending(F, work, lam) == 0:
            work, _ = _divide_out_root(F, work, lam)
            mult += 1
        if mult:
            out.append((lam, mult))
    return out


# -- exhaustive MDS / distance ------------------------------------------------

def _submatrix_nonsingular(rows: Mat, cols) -> bool:
    F = rows.field
    k = rows.rows
    sub = Mat(F, k, k, [rows.entry(i, c) for i in range(k) for c in cols])
    return sub.det() != 0


def mds_exhaustive(C: LinearCode, subset_cap: int | None = None) -> bool:
    """Every-k-columns-independent test over all subsets, via matrix.det."""
    n, k = C.n, C.k
    if k in (0, n):
        return True
    limit = subset_cap if subset_cap is not None else cap("subsets")
    side_k = min(k, n - k)
    if math.comb(n, side_k) > limit:
        raise CapExceeded(f"C({n},{side_k}) exceeds subset cap {limit}")
    gen = C.gen if side_k == k else C.gen.nullspace()
    return all(_submatrix_nonsingular(gen, cols)
               for cols in combinations(range(n), side_k))


def distance_exhaustive(C: LinearCode, codeword_cap: int | None = None) -> int:
    """Minimum weight over all q^k codewords, no projective shortcut."""
    F = C.field
    n, k = C.n, C.k
    if k == 0:
        return n + 1
    limit = codeword_cap if codeword_cap is not None else cap("codewords")
    if F.q**k > limit:
        raise CapExceeded(f"{F.q**k} codewords exceed cap {limit}")
    gen = C.gen.tolists()
    best = n + 1
    for msg in product(range(F.q), repeat=k):
        word = [0] * n
        for i, m in enumerate(msg):
            if m:
                row = gen[i]
                for c in range(n):
                    word[c] = F.add(word[c], F.mul(m, row[c]))
        w = sum(1 for x in word if x)
        if 0 < w < best:
            best = w
    return best


# -- systematic-generator nonexistence search ---------------------------------

@dataclass(frozen=True)
class ExhaustionCertificate:
    q: int
    n: int
    k: int
    candidates: int
    tested: int
    found: bool
    witness: LinearCode | None


def _plain_lcd(C: LinearCode) -> bool:
    if C.k in (0, C.n):
        return True
    return C.gen.gram(EUCLIDEAN).det() != 0


def _plain_mds(C: LinearCode) -> bool:
    return all(_submatrix_nonsingular(C.gen, cols)
               for cols in combinations(range(C.n), C.k))


def lcd_mds_predicate(C: LinearCode) -> bool:
    """Default search predicate: Euclidean LCD and MDS, both by direct test."""
    return _plain_lcd(C) and _plain_mds(C)


def exhaustive_nonexistence(F: FieldSpec, n: int, k: int, predicate=None,
                            candidate_cap: int | None = None) -> ExhaustionCertificate:
    """Enumerate every systematic generator [I_k : P] and apply predicate.

    Every MDS code has a unique systematic generator on its first k
    coordinates, so complete exhaustion here is a nonexistence proof for
    MDS-implying predicates.
    """
    predicate = predicate or lcd_mds_predicate
    limit = candidate_cap if candidate_cap is not None else cap("candidates")
    r = n - k
    total = F.q**(k * r)
    if total > limit:
        raise CapExceeded(f"{total} candidates exceed cap {limit}")
    identity_rows = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    tested = 0
    for entries in product(range(F.q), repeat=k * r):
        tested += 1
        rows = [identity_rows[i] + list(entries[i * r:(i + 1) * r]) for i in range(k)]
        C = LinearCode(Mat.from_rows(F, rows)) if k else LinearCode(Mat(F, 0, n, []))
        if predicate(C):
            return ExhaustionCertificate(F.q, n, k, total, tested, True, C)
    return ExhaustionCertificate(F.q, n, k, total, tested, False, None)
