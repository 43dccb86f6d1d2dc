"""Kernel backend selection: compiled extension when available, else Python.

The hot enumeration loops (weight scans, column-subset rank tests, the
systematic-generator search) live in _speedups (Cython) with a line-for-line
pure-Python mirror in _kernels_py.  The compiled backend is chosen at import
time; set LCDMDS_PURE=1 to force the Python one.  Both backends implement
identical enumeration orders, so results are bit-identical either way.
"""

from __future__ import annotations

import os
from array import array

from . import _kernels_py

try:
    from . import _speedups as _compiled
except ImportError:  # extension not built
    _compiled = None

# Full q x q tables back the compiled kernels; above this order they would
# not fit comfortably, so such fields take the Python path.
TABLE_CAP = 1024


class _KernelTables:
    __slots__ = ("add", "mul", "neg", "inv")

    def __init__(self, F):
        q = F.q
        self.add = array("i", (F.add(a, b) for a in range(q) for b in range(q)))
        self.mul = array("i", (F.mul(a, b) for a in range(q) for b in range(q)))
        self.neg = array("i", (F.neg(a) for a in range(q)))
        self.inv = array("i", [0] + [F.inv(a) for a in range(1, q)])


def _tables(F) -> _KernelTables:
    t = F._ktables
    if t is None:
        t = _KernelTables(F)
        F._ktables = t
    return t


class Backend:
    """Uniform front for one kernel implementation."""

    def __init__(self, name: str, compiled: bool):
        self.name = name
        self.compiled = compiled

    def _use_compiled(self, F) -> bool:
        return self.compiled and F.q <= TABLE_CAP

    def min_weight(self, F, rows) -> tuple[int, tuple[int, ...]]:
        if self._use_compiled(F):
            t = _tables(F)
            flat = array("i", [x for row in rows for x in row])
            return _compiled.min_weight(flat, len(rows), len(rows[0]), F.q,
                                        t.add, t.mul, t.neg)
        return _kernels_py.min_weight(F, rows)

    def first_dependent_columns(self, F, rows):
        if self._use_compiled(F):
            t = _tables(F)
            flat = array("i", [x for row in rows for x in row])
            return _compiled.first_dependent_columns(
                flat, len(rows), len(rows[0]), F.q, t.add, t.mul, t.neg, t.inv)
        return _kernels_py.first_dependent_columns(F, rows)

    def search_systematic(self, F, k: int, r: int) -> tuple[int, int]:
        if self._use_compiled(F):
            t = _tables(F)
            return _compiled.search_systematic(k, r, F.q, t.add, t.mul, t.neg, t.inv)
        return _kernels_py.search_systematic(F, k, r)


PURE = Backend("python", compiled=False)
COMPILED = Backend("compiled", compiled=True) if _compiled is not None else None

if os.environ.get("LCDMDS_PURE") == "1" or COMPILED is None:
    ACTIVE = PURE
else:
    ACTIVE = COMPILED


def backend_name() -> str:
    return ACTIVE.name


def backends() -> dict[str, Backend]:
    out = {"python": PURE}
    if COMPILED is not None:
        out["compiled"] = COMPILED
    return out


def min_weight(F, rows):
    return ACTIVE.min_weight(F, rows)


def first_dependent_columns(F, rows):
    return ACTIVE.first_dependent_columns(F, rows)


def search_systematic(F, k, r):
    return ACTIVE.search_systematic(F, k, r)


def decode_candidate(F, k: int, r: int, idx: int) -> list[list[int]]:
    """The P block of systematic-search candidate idx (row-major base-q)."""
    digits = []
    for _ in range(k * r):
        digits.append(idx % F.q)
        idx //= F.q
    digits.reverse()
    return [digits[i * r:(i + 1) * r] for i in range(k)]
