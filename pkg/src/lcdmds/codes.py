"""Linear codes over a FieldSpec and the property predicates on them.

Conventions for degenerate dimensions (needed so parameter tables over
0 <= k <= n are total): the zero code (k = 0) counts as LCD and MDS with
minimum distance n + 1; the full space (k = n) is LCD and MDS.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import CapExceeded, RankDeficient
from .limits import cap
from .matrix import EUCLIDEAN, HERMITIAN, Mat


@dataclass(frozen=True)
class Certificate:
    """Verified property bundle for one code."""

    q: int
    n: int
    k: int
    d: int | None = None
    mds: bool | None = None
    lcd: bool | None = None
    hermitian_lcd: bool | None = None
    self_orthogonal: bool | None = None
    hermitian_self_orthogonal: bool | None = None
    self_dual: bool | None = None
    hull_dim: int | None = None
    hermitian_hull_dim: int | None = None
    min_weight_word: tuple[int, ...] | None = None
    dependent_columns: tuple[int, ...] | None = None
    provenance: str = ""


class LinearCode:
    """An [n, k] code given by a full-rank k x n generator matrix."""

    __slots__ = ("field", "n", "k", "gen")

    def __init__(self, gen: Mat):
        if gen.cols < 1:
            raise RankDeficient("codes need length n >= 1")
        if gen.rows and gen.rank() != gen.rows:
            raise RankDeficient("generator rows are dependent")
        self.field = gen.field
        self.n = gen.cols
        self.k = gen.rows
        self.gen = gen

    @classmethod
    def from_rows(cls, F, rows, n: int | None = None) -> "LinearCode":
        rows = list(rows)
        if not rows:
            if n is None:
                raise RankDeficient("zero code needs an explicit length")
            return cls(Mat(F, 0, n, []))
        return cls(Mat.from_rows(F, rows))

    def __eq__(self, other):
        return (isinstance(other, LinearCode)
                and self.field == other.field and self.gen == other.gen)

    def __hash__(self):
        return hash(self.gen)

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}))"

    # -- duals ------------------------------------------------------------

    def dual(self) -> "LinearCode":
        return LinearCode(self.gen.nullspace()) if self.k else \
            LinearCode(Mat.identity(self.field, self.n))

    def hermitian_dual(self) -> "LinearCode":
        if self.k == 0:
            self.field.subfield_order  # raises NotASquareField when unavailable
            return LinearCode(Mat.identity(self.field, self.n))
        return LinearCode(self.gen.conj().nullspace())

    # -- duality predicates -------------------------------------------------

    def is_lcd(self) -> bool:
        if self.k in (0, self.n):
            return True
        return self.gen.gram(EUCLIDEAN).det() != 0

    def is_hermitian_lcd(self) -> bool:
        self.field.subfield_order  # raises NotASquareField when unavailable
        if self.k in (0, self.n):
            return True
        return self.gen.gram(HERMITIAN).det() != 0

    def is_self_orthogonal(self, form: str = EUCLIDEAN) -> bool:
        return self.gen.gram(form).is_zero()

    def is_self_dual(self, form: str = EUCLIDEAN) -> bool:
        return 2 * self.k == self.n and self.is_self_orthogonal(form)

    def hull_dim(self, form: str = EUCLIDEAN) -> int:
        """dim(C intersect C^dual) = k - rank of the Gram matrix."""
        return self.k - self.gen.gram(form).rank()

    # -- distance and MDS -----------------------------------------------------

    def is_mds(self, subset_cap: int | None = None) -> tuple[bool, tuple[int, ...] | None]:
        """Whether every k columns of the generator are independent.

        Tests whichever side (the code or its dual) has fewer column
        subsets; a failure witness is a dependent k-column set reported in
        the original coordinates.
        """
        n, k = self.n, self.k
        if k in (0, n):
            return True, None
        limit = subset_cap if subset_cap is not None else cap("subsets")
        side_k = min(k, n - k)
        if math.comb(n, side_k) > limit:
            raise CapExceeded(
                f"C({n},{side_k}) = {math.comb(n, side_k)} exceeds subset cap {limit}")
        if side_k == k:
            bad = kernels.first_dependent_columns(self.field, self.gen.tolists())
            return (True, None) if bad is None else (False, tuple(bad))
        dual_rows = self.dual().gen.tolists()
        bad = kernels.first_dependent_columns(self.field, dual_rows)
        if bad is None:
            return True, None
        # dependent (n-k)-subset of the dual <=> its complement is a
        # dependent k-subset of the code
        comp = tuple(c for c in range(n) if c not in set(bad))
        return False, comp

    def min_distance(self, codeword_cap: int | None = None) -> tuple[int, tuple[int, ...] | None]:
        """Exact minimum weight and a codeword witnessing it.

        Enumerates one codeword per projective message class; the zero
        code returns (n + 1, None) by convention.
        """
        if self.k == 0:
            return self.n + 1, None
        q = self.field.q
        limit = codeword_cap if codeword_cap is not None else cap("codewords")
        reps = (q**self.k - 1) // (q - 1)
        if reps > limit:
            raise CapExceeded(f"{reps} projective messages exceed cap {limit}")
        d, msg = kernels.min_weight(self.field, self.gen.tolists())
        word = self.encode(msg)
        return d, word

    def encode(self, message) -> tuple[int, ...]:
        F = self.field
        word = [0] * self.n
        for i, m in enumerate(message):
            if m:
                row = self.gen.row(i)
                for c in range(self.n):
                    word[c] = F.add(word[c], F.mul(m, row[c]))
        return tuple(word)

    # -- certification -----------------------------------------------------

    def certify(self, props=("lcd", "mds"), provenance: str = "",
                codeword_cap: int | None = None,
                subset_cap: int | None = None) -> Certificate:
        """Evaluate the requested properties with the generic predicates.

        props is an iterable over {"lcd", "hlcd", "mds", "so", "hso",
        "sd", "distance"}; unrequested fields stay None.
        """
        props = set(props)
        vals: dict = {}
        if "lcd" in props:
            vals["hull_dim"] = self.hull_dim(EUCLIDEAN)
            vals["lcd"] = self.is_lcd()
        if "hlcd" in props:
            vals["hermitian_hull_dim"] = self.hull_dim(HERMITIAN)
            vals["hermitian_lcd"] = self.is_hermitian_lcd()
        if "mds" in props:
            ok, witness = self.is_mds(subset_cap=subset_cap)
            vals["mds"] = ok
            vals["dependent_columns"] = witness
        if "so" in props:
            vals["self_orthogonal"] = self.is_self_orthogonal(EUCLIDEAN)
        if "hso" in props:
            vals["hermitian_self_orthogonal"] = self.is_self_orthogonal(HERMITIAN)
        if "sd" in props:
            vals["self_dual"] = self.is_self_dual(EUCLIDEAN)
        if "distance" in props:
            d, word = self.min_distance(codeword_cap=codeword_cap)
            vals["d"] = d
            vals["min_weight_word"] = word
        return Certificate(q=self.field.q, n=self.n, k=self.k,
                           provenance=provenance, **vals)
