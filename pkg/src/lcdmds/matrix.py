"""Dense exact linear algebra over a FieldSpec.

Matrices are immutable row-major tuples of element codes.  Elimination
uses a fixed pivoting rule (first nonzero entry scanning top-to-bottom,
left-to-right) so ranks, reduced forms, nullspace bases and systematic
forms are bit-reproducible.
"""

from __future__ import annotations

from .errors import (
    DimensionMismatch,
    NotASquareField,
    NotSquare,
    RankDeficient,
    UnsupportedParams,
)
from .gf import FieldSpec

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"


class Mat:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> "Mat":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
            flat.extend(field.felt(x) for x in r)
        return cls(field, len(rows), ncols, flat)

    @classmethod
    def identity(cls, field: FieldSpec, k: int) -> "Mat":
        return cls(field, k, k, [1 if i == j else 0 for i in range(k) for j in range(k)])

    @classmethod
    def zero(cls, field: FieldSpec, rows: int, cols: int) -> "Mat":
        return cls(field, rows, cols, [0] * (rows * cols))

    @classmethod
    def unit_column(cls, field: FieldSpec, k: int, i: int) -> "Mat":
        """The k x 1 column with a single 1 in row i."""
        return cls(field, k, 1, [1 if r == i else 0 for r in range(k)])

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        return (isinstance(other, Mat)
                and self.field == other.field
                and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols} over GF({self.field.q}), {self.tolists()})"

    # -- shape and entrywise operations ---------------------------------

    def transpose(self) -> "Mat":
        F, r, c = self.field, self.rows, self.cols
        return Mat(F, c, r, [self.entry(i, j) for j in range(c) for i in range(r)])

    def conj_transpose(self) -> "Mat":
        F = self.field
        F.subfield_order  # raises NotASquareField when unavailable
        return Mat(F, self.cols, self.rows,
                   [F.conjugate(self.entry(i, j))
                    for j in range(self.cols) for i in range(self.rows)])

    def conj(self) -> "Mat":
        F = self.field
        return Mat(F, self.rows, self.cols, [F.conjugate(x) for x in self.entries])

    def scale(self, c: int) -> "Mat":
        F = self.field
        return Mat(F, self.rows, self.cols, [F.mul(c, x) for x in self.entries])

    def __add__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix sum shape mismatch")
        F = self.field
        return Mat(F, self.rows, self.cols,
                   [F.add(a, b) for a, b in zip(self.entries, other.entries)])

    def mul(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        F = self.field
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = 0
                for t in range(self.cols):
                    acc = F.add(acc, F.mul(ri[t], other.entry(t, j)))
                out.append(acc)
        return Mat(F, self.rows, other.cols, out)

    __matmul__ = mul

    def permute_columns(self, perm) -> "Mat":
        """New matrix whose column j is column perm[j] of self."""
        F = self.field
        return Mat(F, self.rows, self.cols,
                   [self.entry(i, perm[j]) for i in range(self.rows)
                    for j in range(self.cols)])

    # -- bilinear forms ----------------------------------------------------

    def gram(self, form: str = EUCLIDEAN) -> "Mat":
        """G * G^T (euclidean) or G * conj(G)^T (hermitian), a k x k matrix."""
        F = self.field
        if form == HERMITIAN:
            F.subfield_order  # raises NotASquareField when unavailable
            conj = F.conjugate
        elif form == EUCLIDEAN:
            conj = None
        else:
            raise UnsupportedParams(f"unknown form {form!r}")
        k = self.rows
        out = [0] * (k * k)
        for i in range(k):
            ri = self.row(i)
            for j in range(k):
                rj = self.row(j)
                acc = 0
                for t in range(self.cols):
                    b = conj(rj[t]) if conj else rj[t]
                    acc = F.add(acc, F.mul(ri[t], b))
                out[i * k + j] = acc
        return Mat(F, k, k, out)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    # -- elimination --------------------------------------------------------

    def rref(self) -> tuple["Mat", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        F = self.field
        work = self.tolists()
        nrows, ncols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(ncols):
            if r >= nrows:
                break
            piv = None
            for i in range(r, nrows):
                if work[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            inv = F.inv(work[r][c])
            work[r] = [F.mul(inv, x) for x in work[r]]
            for i in range(nrows):
                if i != r and work[i][c]:
                    f = work[i][c]
                    work[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(work[i], work[r])]
            pivots.append(c)
            r += 1
        return Mat(F, nrows, ncols, [x for row in work for x in row]), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> int:
        if self.rows != self.cols:
            raise NotSquare(f"det of a {self.rows}x{self.cols} matrix")
        F = self.field
        n = self.rows
        work = self.tolists()
        det = 1
        for c in range(n):
            piv = None
            for i in range(c, n):
                if work[i][c]:
                    piv = i
                    break
            if piv is None:
                return 0
            if piv != c:
                work[c], work[piv] = work[piv], work[c]
                det = F.neg(det)
            det = F.mul(det, work[c][c])
            inv = F.inv(work[c][c])
            for i in range(c + 1, n):
                if work[i][c]:
                    f = F.mul(work[i][c], inv)
                    work[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(work[i], work[c])]
        return det

    def nullspace(self) -> "Mat":
        """Rows form the standard free-variable basis of the right kernel."""
        F = self.field
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        rows = []
        for f in free:
            vec = [0] * self.cols
            vec[f] = 1
            for i, pc in enumerate(pivots):
                vec[pc] = F.neg(red.entry(i, f))
            rows.append(vec)
        return Mat(F, len(rows), self.cols, [x for r in rows for x in r])

    def systematic_form(self) -> tuple["Mat", tuple[int, ...]]:
        """Split a full-rank generator into ([I_k : P], column permutation).

        Returns (P, perm) where permuting the columns of self by perm makes
        it row-equivalent to [I_k : P].  perm is the identity whenever the
        first k columns are already independent.
        """
        k = self.rows
        red, pivots = self.rref()
        if len(pivots) != k:
            raise RankDeficient(f"generator has rank {len(pivots)} < {k}")
        free = tuple(c for c in range(self.cols) if c not in pivots)
        perm = pivots + free
        P = Mat(self.field, k, len(free),
                [red.entry(i, c) for i in range(k) for c in free])
        return P, perm


def hstack(mats: list[Mat]) -> Mat:
    if not mats:
        raise DimensionMismatch("hstack of nothing")
    F = mats[0].field
    nrows = mats[0].rows
    if any(m.rows != nrows for m in mats):
        raise DimensionMismatch("hstack row mismatch")
    flat = []
    for i in range(nrows):
        for m in mats:
            flat.extend(m.row(i))
    return Mat(F, nrows, sum(m.cols for m in mats), flat)


def vstack(mats: list[Mat]) -> Mat:
    if not mats:
        raise DimensionMismatch("vstack of nothing")
    ncols = mats[0].cols
    if any(m.cols != ncols for m in mats):
        raise DimensionMismatch("vstack column mismatch")
    flat = []
    for m in mats:
        flat.extend(m.entries)
    return Mat(mats[0].field, sum(m.rows for m in mats), ncols, flat)


def same_row_space(a: Mat, b: Mat) -> bool:
    return a.rank() == b.rank() == vstack([a, b]).rank()
