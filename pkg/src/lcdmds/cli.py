"""Command-line interface.

Exit codes: 0 success / all requested properties hold; 1 a requested
property fails; 2 usage, format or cap errors; 3 construction unavailable
(NOT_COVERED, NONEXISTENT and NOT_FOUND are distinguished in the message).
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor

from . import codefile, construct, oracle
from .codes import LinearCode
from .errors import (
    CapExceeded,
    FormatError,
    LcdmdsError,
    Nonexistent,
    NotCovered,
    NotFound,
)
from .gf import FieldSpec, factor_prime_power, field_new
from .matrix import EUCLIDEAN, HERMITIAN

PROP_TOKENS = ("lcd", "hlcd", "mds", "so", "hso", "sd", "distance")


def _field_from_q(q: int, form: str) -> FieldSpec:
    p, m = factor_prime_power(q)
    if form == HERMITIAN and m % 2:
        raise FormatError(f"hermitian commands need a square field order, got {q}")
    return field_new(p, m)


# -- field ---------------------------------------------------------------

def cmd_field(args) -> int:
    F = field_new(args.p, args.m)
    print(f"q {F.q}")
    print(f"modulus {' '.join(str(c) for c in F.modulus)}")
    print(f"gamma {F.gamma}")
    if args.tables:
        if F.q > 64:
            raise CapExceeded(f"tables are printed for q <= 64 only, q = {F.q}")
        for name, op in (("add", F.add), ("mul", F.mul)):
            print(name)
            for a in range(F.q):
                print(" ".join(str(op(a, b)) for b in range(F.q)))
    return 0


# -- construct -------------------------------------------------------------

def cmd_construct(args) -> int:
    form = args.form
    F = _field_from_q(args.q, form)
    if form == HERMITIAN:
        result = construct.hermitian_lcd_mds(F, args.n, args.k)
    else:
        result = construct.euclidean_lcd_mds(F, args.n, args.k)
    cert = result.verified
    comments = (
        f"[{args.n},{args.k}] {form} LCD MDS over GF({F.q})",
        f"provenance: {result.provenance}",
        f"certificate: mds={cert.mds} "
        + (f"lcd={cert.lcd} hull_dim={cert.hull_dim}" if form == EUCLIDEAN
           else f"hlcd={cert.hermitian_lcd} hull_dim={cert.hermitian_hull_dim}"),
    )
    text = codefile.render(codefile.from_code(result.code), comments)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


# -- verify -----------------------------------------------------------------

def _load(path: str) -> LinearCode:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return codefile.to_code(codefile.parse(text))


def cmd_verify(args) -> int:
    C = _load(args.file)
    props = [t.strip() for t in args.props.split(",") if t.strip()]
    for t in props:
        if t not in PROP_TOKENS:
            raise FormatError(f"unknown property {t!r}; choose from {PROP_TOKENS}")
    cert = C.certify(props=props)
    print(f"q={cert.q} n={cert.n} k={cert.k}")
    failed = False
    checks = {
        "lcd": cert.lcd, "hlcd": cert.hermitian_lcd, "mds": cert.mds,
        "so": cert.self_orthogonal, "hso": cert.hermitian_self_orthogonal,
        "sd": cert.self_dual,
    }
    for t in props:
        if t == "distance":
            print(f"distance: {cert.d}")
            continue
        val = checks[t]
        print(f"{t}: {'true' if val else 'false'}")
        if not val:
            failed = True
    if args.oracle:
        failed |= not _oracle_crosscheck(C, props, cert)
    return 1 if failed else 0


def _oracle_crosscheck(C: LinearCode, props, cert) -> bool:
    ok = True
    for t in props:
        if t == "lcd":
            hull = oracle.hull_basis_bruteforce(C, EUCLIDEAN).rows
            agree = (hull == 0) == cert.lcd and hull == cert.hull_dim
        elif t == "hlcd":
            hull = oracle.hull_basis_bruteforce(C, HERMITIAN).rows
            agree = (hull == 0) == cert.hermitian_lcd and hull == cert.hermitian_hull_dim
        elif t == "mds":
            agree = oracle.mds_exhaustive(C) == cert.mds
        elif t == "distance":
            agree = oracle.distance_exhaustive(C) == cert.d
        elif t == "so":
            agree = (oracle.hull_basis_bruteforce(C, EUCLIDEAN).rows == C.k) \
                == cert.self_orthogonal
        elif t == "hso":
            agree = (oracle.hull_basis_bruteforce(C, HERMITIAN).rows == C.k) \
                == cert.hermitian_self_orthogonal
        else:  # sd
            agree = ((oracle.hull_basis_bruteforce(C, EUCLIDEAN).rows == C.k)
                     and 2 * C.k == C.n) == cert.self_dual
        print(f"oracle {t}: {'agree' if agree else 'DISAGREE'}")
        ok &= agree
    return ok


# -- table -------------------------------------------------------------------

def _table_cells(F: FieldSpec, form: str) -> list[tuple[int, int]]:
    q = F.q
    if form == EUCLIDEAN:
        top = q + 1
        cells = [(n, k) for n in range(1, top + 1) for k in range(n + 1)]
        if F.p == 2 and F.m > 1:
            cells += [(q + 2, 3), (q + 2, q - 1)]
        return list(dict.fromkeys(cells))  # (q+2, 3) == (q+2, q-1) at q = 4
    q0 = F.subfield_order
    cells = [(n, k) for n in range(1, q0 + 2) for k in range(n + 1)]
    if q0 % 2:
        for k in range(2, (q - 1) // 2 + 1):
            if (q - 1) % k == 0 and (q0 + 1) % k:
                if math.comb(2 * k + 2, k) > 10**6:
                    continue  # validation would blow the subset cap
                cells += [(2 * k, k), (2 * k + 1, k), (2 * k + 2, k)]
    if q0 % 2 == 0 and q0 >= 8:
        cells += [(q0 + 2, 3), (q0 + 2, q0 - 1)]
    return cells


def _table_cell(F: FieldSpec, form: str, n: int, k: int, use_oracle: bool) -> str:
    build = construct.hermitian_lcd_mds if form == HERMITIAN \
        else construct.euclidean_lcd_mds
    try:
        result = build(F, n, k)
    except (Nonexistent, NotFound) as exc:
        cert = exc.certificate
        detail = f"exhausted[{cert.tested}]" if cert is not None else "exhausted"
        return f"{n} {k} NONEXISTENT - {detail}"
    except NotCovered:
        return f"{n} {k} NOT_COVERED - -"
    if use_oracle:
        hull_form = EUCLIDEAN if form == EUCLIDEAN else HERMITIAN
        if not oracle.mds_exhaustive(result.code):
            raise LcdmdsError(f"oracle rejects MDS for [{n},{k}] over GF({F.q})")
        if oracle.hull_basis_bruteforce(result.code, hull_form).rows != 0:
            raise LcdmdsError(f"oracle found a nonzero hull for [{n},{k}]")
    return f"{n} {k} OK {n - k + 1} {result.provenance}"


def build_table(F: FieldSpec, form: str, jobs: int = 1, use_oracle: bool = False) -> str:
    """Deterministic table text; byte-identical for any jobs value."""
    cells = _table_cells(F, form)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(
                lambda cell: _table_cell(F, form, cell[0], cell[1], use_oracle),
                cells))
    else:
        rows = [_table_cell(F, form, n, k, use_oracle) for n, k in cells]
    header = f"# lcdmds table q={F.q} form={form}\nn k status d provenance"
    return header + "\n" + "\n".join(rows) + "\n"


def cmd_table(args) -> int:
    F = _field_from_q(args.q, args.form)
    text = build_table(F, args.form, jobs=args.jobs, use_oracle=args.oracle)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


# -- distance --------------------------------------------------------------------

def cmd_distance(args) -> int:
    C = _load(args.file)
    d, word = C.min_distance(codeword_cap=args.cap)
    print(f"distance {d}")
    if word is not None:
        print(f"witness {' '.join(str(x) for x in word)}")
    return 0


# -- entry point -------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="lcdmds",
        description="Construct and certify Euclidean and Hermitian LCD MDS codes.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="describe the canonical GF(p^m)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tables", action="store_true",
                   help="print add/mul tables (q <= 64)")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("construct", help="emit an LCD MDS code file")
    p.add_argument("--q", type=int, required=True, help="field order (prime power)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--form", choices=(EUCLIDEAN, HERMITIAN), default=EUCLIDEAN)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check properties of a code file")
    p.add_argument("file")
    p.add_argument("--props", default="lcd,mds",
                   help=f"comma list from {','.join(PROP_TOKENS)}")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with the brute-force oracles")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="dispatcher coverage table for one field")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--form", choices=(EUCLIDEAN, HERMITIAN), default=EUCLIDEAN)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("distance", help="exact minimum distance of a code file")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=None,
                   help="max projective messages to enumerate")
    p.set_defaults(func=cmd_distance)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotCovered, Nonexistent, NotFound) as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 3
    except LcdmdsError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
