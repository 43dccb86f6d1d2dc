"""Text serialization for codes.

Format (UTF-8, LF line endings, `#` starts a comment):

    lcdmds 1
    field <p> <m>
    modulus <c0> <c1> ... <cm>     (only when m > 1; little-endian, monic)
    code <n> <k>
    <k rows of n space-separated element codes>

Negative integers are accepted on input for prime fields (-1 means p-1)
but never written.  The modulus must match the canonical one for (p, m)
so that element codes mean the same thing everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import LinearCode
from .errors import FormatError
from .gf import field_new
from .matrix import Mat

MAGIC = "lcdmds"
VERSION = 1


@dataclass(frozen=True)
class CodeFile:
    p: int
    m: int
    modulus: tuple[int, ...]
    n: int
    k: int
    rows: tuple[tuple[int, ...], ...]


def from_code(C: LinearCode) -> CodeFile:
    F = C.field
    return CodeFile(F.p, F.m, F.modulus, C.n, C.k,
                    tuple(C.gen.row(i) for i in range(C.k)))


def to_code(cf: CodeFile) -> LinearCode:
    F = field_new(cf.p, cf.m)
    if cf.modulus != F.modulus:
        raise FormatError(
            f"modulus {list(cf.modulus)} is not the canonical one for "
            f"GF({cf.p}^{cf.m}); expected {list(F.modulus)}")
    gen = Mat(F, cf.k, cf.n, [x for row in cf.rows for x in row])
    return LinearCode(gen)


def render(cf: CodeFile, comments: tuple[str, ...] = ()) -> str:
    lines = [f"{MAGIC} {VERSION}"]
    lines.extend(f"# {c}" for c in comments)
    lines.append(f"field {cf.p} {cf.m}")
    if cf.m > 1:
        lines.append("modulus " + " ".join(str(c) for c in cf.modulus))
    lines.append(f"code {cf.n} {cf.k}")
    for row in cf.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse(text: str) -> CodeFile:
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append(body)
    if not lines:
        raise FormatError("empty code file")

    def ints(line: str, label: str) -> list[int]:
        parts = line.split()
        try:
            return [int(x) for x in parts[1:]]
        except ValueError as exc:
            raise FormatError(f"bad {label} line: {line!r}") from exc

    it = iter(lines)
    head = next(it).split()
    if head != [MAGIC, str(VERSION)]:
        raise FormatError(f"expected '{MAGIC} {VERSION}' header, got {lines[0]!r}")
    line = next(it, None)
    if line is None or not line.startswith("field "):
        raise FormatError("missing field line")
    vals = ints(line, "field")
    if len(vals) != 2:
        raise FormatError("field line needs exactly p and m")
    p, m = vals
    try:
        F = field_new(p, m)
    except Exception as exc:
        raise FormatError(f"bad field parameters p={p} m={m}: {exc}") from exc
    modulus = F.modulus
    line = next(it, None)
    if m > 1:
        if line is None or not line.startswith("modulus "):
            raise FormatError("missing modulus line for an extension field")
        modulus = tuple(ints(line, "modulus"))
        line = next(it, None)
    if line is None or not line.startswith("code "):
        raise FormatError("missing code line")
    vals = ints(line, "code")
    if len(vals) != 2:
        raise FormatError("code line needs exactly n and k")
    n, k = vals
    if not 0 <= k <= n or n < 1:
        raise FormatError(f"bad dimensions n={n} k={k}")
    rows = []
    for _ in range(k):
        line = next(it, None)
        if line is None:
            raise FormatError(f"expected {k} generator rows")
        try:
            row = [int(x) for x in line.split()]
        except ValueError as exc:
            raise FormatError(f"bad generator row: {line!r}") from exc
        if len(row) != n:
            raise FormatError(f"generator row has {len(row)} entries, expected {n}")
        canon = []
        for x in row:
            if x < 0:
                if m != 1:
                    raise FormatError(
                        "negative entries are only meaningful over prime fields")
                x %= p
            if not 0 <= x < F.q:
                raise FormatError(f"element code {x} out of range for q={F.q}")
            canon.append(x)
        rows.append(tuple(canon))
    if next(it, None) is not None:
        raise FormatError("trailing content after generator rows")
    return CodeFile(p, m, modulus, n, k, tuple(rows))
