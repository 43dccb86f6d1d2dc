"""Acceptance suite: one test per criterion, one report line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
PASS/FAIL lines (also emitted by the conftest hook).
"""

import time
from itertools import product

import pytest

from lcdmds import construct, oracle
from lcdmds.cli import build_table
from lcdmds.codes import LinearCode
from lcdmds.errors import NotCovered
from lcdmds.gf import field_new
from lcdmds.matrix import EUCLIDEAN, HERMITIAN, Mat


def _statuses(table_text):
    rows = {}
    for line in table_text.splitlines():
        if line.startswith(("#", "n ")):
            continue
        n, k, status = line.split()[:3]
        rows[(int(n), int(k))] = status
    return rows


def test_criterion_1_reference_generators():
    t0 = time.perf_counter()
    F5 = field_new(5, 1)
    res = construct.euclidean_lcd_mds(F5, 4, 2)
    assert res.code.gen.tolists() == [[1, 0, 1, 1], [0, 1, 1, 4]]
    assert res.verified.lcd and res.verified.mds and res.verified.hull_dim == 0

    for rows, n, k in (([[1, 0, 1, 1], [0, 1, 1, -1]], 4, 2),
                       ([[1, 0, 1, 1, 1], [0, 1, 1, -1, 2]], 5, 2)):
        C = LinearCode(Mat.from_rows(F5, rows))
        assert C.gen.gram(EUCLIDEAN).det() != 0
        ok, _ = C.is_mds()
        assert ok
        d, _ = C.min_distance()
        assert d == n - k + 1
    assert time.perf_counter() - t0 < 1.0


SWEEP_FIELDS = [(4, 2, 2), (5, 5, 1), (7, 7, 1), (8, 2, 3), (9, 3, 2),
                (11, 11, 1), (13, 13, 1)]


def test_criterion_2_euclidean_sweep():
    t0 = time.perf_counter()
    for q, p, m in SWEEP_FIELDS:
        F = field_new(p, m)
        table = build_table(F, EUCLIDEAN, use_oracle=True)
        rows = _statuses(table)
        for n in range(1, q + 2):
            for k in range(n + 1):
                assert rows[(n, k)] == "OK", (q, n, k, rows[(n, k)])
        if p == 2 and m > 1:  # the table also carries the q+2 cells
            for k in {3, q - 1}:
                assert rows[(q + 2, k)] == "OK"
    # length q+2 over GF(8) and GF(16), dimensions 3 and q-1
    for p, m in ((2, 3), (2, 4)):
        F = field_new(p, m)
        q = F.q
        for k in (3, q - 1):
            res = construct.euclidean_lcd_mds(F, q + 2, k)
            assert res.verified.lcd and res.verified.mds
            assert oracle.mds_exhaustive(res.code)
            assert oracle.hull_basis_bruteforce(res.code, EUCLIDEAN).rows == 0
    elapsed = time.perf_counter() - t0
    assert elapsed < 600, f"sweep took {elapsed:.1f}s, target is summary < 10 min"


def test_criterion_3_nonexistence_certificates():
    t0 = time.perf_counter()
    cert = oracle.exhaustive_nonexistence(field_new(2, 1), 2, 1)
    assert not cert.found and cert.tested == cert.candidates == 2
    cert = oracle.exhaustive_nonexistence(field_new(3, 1), 4, 2)
    assert not cert.found and cert.tested == cert.candidates == 81
    assert time.perf_counter() - t0 < 1.0


def test_criterion_4_determinant_formula_checks():
    # the closed determinant forms hold up to the sign of reversing the k-1
    # anti-diagonal Gram rows, s = (-1)^floor((k-1)/2); nonzeroness and the
    # LCD certificate must agree in every case
    for q, p, m in ((5, 5, 1), (7, 7, 1), (9, 3, 2), (11, 11, 1), (13, 13, 1)):
        F = field_new(p, m)
        g = F.gamma
        for k in range(1, q - 1):
            if (q - 1) % k:
                continue
            res = construct.euclid_subgroup_family(F, k, 2 * k)
            det = res.code.gen.gram(EUCLIDEAN).det()
            kk = F.from_int(k)
            if k != (q - 1) // 2:
                want = F.mul(F.from_int(2), F.mul(
                    F.pow(F.add(1, F.pow(g, k)), k - 1), F.pow(kk, k)))
            elif q != 5:
                want = F.mul(F.add(1, F.mul(g, g)), F.mul(
                    F.pow(F.add(1, F.pow(g, k + 2)), k - 1), F.pow(kk, k)))
            else:
                want = None
            if want is None:
                want = 4  # frozen: Gram of the explicit q=5 generator is 3I
            elif ((k - 1) // 2) % 2:
                want = F.neg(want)
            assert det == want, (q, k, det, want)
            assert det != 0 and res.verified.lcd


HERMITIAN_FIELDS = [(3, 3, 2), (4, 2, 4), (5, 5, 2)]


def test_criterion_5_hermitian_sweep():
    t0 = time.perf_counter()
    for q0, p, m in HERMITIAN_FIELDS:
        F = field_new(p, m)
        for n in range(1, q0 + 2):
            for k in range(n + 1):
                covered = k in (0, n) or k <= q0 - 2 or n - k <= q0 - 2
                if covered:
                    res = construct.hermitian_lcd_mds(F, n, k)
                    assert res.verified.hermitian_lcd and res.verified.mds
                    assert oracle.hull_basis_bruteforce(res.code, HERMITIAN).rows == 0
                    assert oracle.mds_exhaustive(res.code)
                else:
                    with pytest.raises(NotCovered):
                        construct.hermitian_lcd_mds(F, n, k)
    F25 = field_new(5, 2)
    for n in (8, 9, 10):
        res = construct.hermitian_lcd_mds(F25, n, 4)
        assert res.verified.hermitian_lcd and res.verified.mds
        assert oracle.hull_basis_bruteforce(res.code, HERMITIAN).rows == 0
        assert oracle.mds_exhaustive(res.code)
    elapsed = time.perf_counter() - t0
    assert elapsed < 300, f"hermitian sweep took {elapsed:.1f}s, target < 5 min"


def test_criterion_6_known_flaw_reproduction():
    t0 = time.perf_counter()
    F4 = field_new(2, 2)
    g = F4.gamma
    cols = [(1, a, F4.mul(a, a)) for a in range(1, 4)]
    cols += [(g, 0, 0), (0, 1, 0), (0, 0, 1)]
    A = Mat.from_rows(F4, [[c[i] for c in cols] for i in range(3)])
    gram = A.gram(EUCLIDEAN)
    one_gg = F4.add(1, F4.mul(g, g))
    assert gram.tolists() == [[one_gg, 0, 0], [0, 1, 1], [0, 1, 1]]
    assert gram.det() == 0  # singular: the direct construction fails here

    # fallback: the search must end with a definitive hit-or-exhaustion
    from lcdmds import kernels
    hit, tested = kernels.search_systematic(F4, 3, 3)
    if hit >= 0:
        P = kernels.decode_candidate(F4, 3, 3, hit)
        rows = [[1 if i == j else 0 for j in range(3)] + P[i] for i in range(3)]
        C = LinearCode(Mat.from_rows(F4, rows))
        assert C.is_lcd() and C.is_mds()[0]
        res = construct.char2_qplus2(F4, 3)
        assert res.code == C
    else:
        assert tested == 4**9
    # recorded outcome for this corpus: first hit at candidate 91749
    assert (hit, tested) == (91749, 91750)
    assert time.perf_counter() - t0 < 60


def test_criterion_7_property_suites():
    # weight preservation under right-block scaling, exhaustive q^k <= 1e5
    for q, p, m, prows in ((5, 5, 1, [[2, 3], [1, 1]]),
                           (7, 7, 1, [[1, 5, 2], [3, 1, 4]]),
                           (9, 3, 2, [[4, 7, 2], [2, 5, 1]]),
                           (4, 2, 2, [[2, 3], [3, 1]])):
        F = field_new(p, m)
        P = Mat.from_rows(F, prows)
        base = construct.scale_right_block(F, P, 1)
        for alpha in range(2, q):
            scaled = construct.scale_right_block(F, P, alpha)
            for msg in product(range(q), repeat=P.rows):
                assert sum(1 for x in base.encode(msg) if x) \
                    == sum(1 for x in scaled.encode(msg) if x)

    # spectrum/determinant equivalence
    import random
    rng = random.Random(11)
    for q, p, m in ((5, 5, 1), (9, 3, 2), (25, 5, 2)):
        F = field_new(p, m)
        for _ in range(3):
            k = rng.randrange(1, 5)
            P = Mat(F, k, 3, [rng.randrange(q) for _ in range(3 * k)])
            M = P.gram(EUCLIDEAN)
            eigen = {lam for lam, _ in oracle.spectrum(M)}
            eye = Mat.identity(F, k)
            for a in range(1, q):
                c = F.mul(a, a)
                assert ((eye + M.scale(c)).det() == 0) \
                    == (F.neg(F.inv(c)) in eigen)

    # subgroup Vandermonde Gram structure, all k | q-1, q <= 27
    for q, p, m in ((5, 5, 1), (7, 7, 1), (9, 3, 2), (13, 13, 1),
                    (16, 2, 4), (25, 5, 2), (27, 3, 3)):
        F = field_new(p, m)
        for k in range(1, q):
            if (q - 1) % k:
                continue
            for b in (1, F.gamma):
                G = construct.vandermonde_subgroup(F, k, b).gram(EUCLIDEAN)
                for i in range(k):
                    for j in range(k):
                        want = F.mul(F.pow(b, i + j), F.from_int(k)) \
                            if (i + j) % k == 0 else 0
                        assert G.entry(i, j) == want

    # Hermitian family Gram entries over GF(25), k = 4
    F25 = field_new(5, 2)
    g = F25.gamma
    res = construct.hermitian_subgroup_family(F25, 4, 8)
    gram = res.code.gen.gram(HERMITIAN)
    for i in range(4):
        for j in range(4):
            e = i + 5 * j
            want = F25.mul(F25.sub(1, F25.div(F25.pow(g, e), F25.pow(g, 6))),
                           F25.from_int(4)) if e % 4 == 0 else 0
            assert gram.entry(i, j) == want

    # dual of LCD is LCD; hull dim via Gram rank equals brute-force dim
    for q, p, m in ((5, 5, 1), (7, 7, 1), (8, 2, 3)):
        F = field_new(p, m)
        for n in range(1, q + 2):
            for k in range(1, n):
                C = construct.euclidean_lcd_mds(F, n, k).code
                assert C.dual().is_lcd() and C.dual().is_mds()[0]
                assert oracle.hull_basis_bruteforce(C, EUCLIDEAN).rows \
                    == C.hull_dim(EUCLIDEAN) == 0
    rng = random.Random(13)
    for q, p, m in ((2, 2, 1), (3, 3, 1), (4, 2, 2), (9, 3, 2)):
        F = field_new(p, m)
        for _ in range(10):
            k = rng.randrange(1, 4)
            n = rng.randrange(k + 1, k + 5)
            while True:
                rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
                M = Mat.from_rows(F, rows)
                if M.rank() == k:
                    break
            C = LinearCode(M)
            assert oracle.hull_basis_bruteforce(C, EUCLIDEAN).rows \
                == C.hull_dim(EUCLIDEAN)
            if m % 2 == 0:
                assert oracle.hull_basis_bruteforce(C, HERMITIAN).rows \
                    == C.hull_dim(HERMITIAN)


def test_criterion_8_table_determinism():
    F7 = field_new(7, 1)
    first = build_table(F7, EUCLIDEAN, jobs=1)
    for jobs in (1, 2, 4, 8):
        assert build_table(F7, EUCLIDEAN, jobs=jobs) == first
    assert build_table(F7, EUCLIDEAN, jobs=3) == first  # repeated in-process run

    # repeated runs in fresh processes must be byte-identical too
    import subprocess
    import sys
    outs = set()
    for jobs in ("1", "4"):
        r = subprocess.run(
            [sys.executable, "-m", "lcdmds", "table", "--q", "7", "--jobs", jobs],
            capture_output=True, check=True)
        outs.add(r.stdout)
    assert len(outs) == 1
    assert outs.pop().decode() == first
