import random
from itertools import product

import pytest

from lcdmds import construct, oracle
from lcdmds.codes import LinearCode
from lcdmds.errors import CapExceeded
from lcdmds.gf import field_new
from lcdmds.matrix import EUCLIDEAN, HERMITIAN, Mat


def test_spectrum_examples():
    F5 = field_new(5, 1)
    assert oracle.spectrum(Mat.from_rows(F5, [[3, 0], [0, 3]])) == [(3, 2)]
    F2 = field_new(2, 1)
    assert oracle.spectrum(Mat.from_rows(F2, [[0, 1], [1, 0]])) == [(1, 2)]
    assert oracle.spectrum(Mat.from_rows(F5, [[0, 1], [-1, 0]])) == [(2, 1), (3, 1)]


def test_spectrum_matches_determinant_scan(random_codes):
    # roots of the characteristic polynomial are exactly the lambda with
    # det(M - lambda I) = 0
    for C in random_codes[:20]:
        F = C.field
        M = C.gen.gram(EUCLIDEAN)
        eigen = {lam for lam, _ in oracle.spectrum(M)}
        eye = Mat.identity(F, M.rows)
        scan = {lam for lam in range(F.q)
                if (M + eye.scale(F.neg(lam))).det() == 0}
        assert eigen == scan


def test_berkowitz_agrees_with_cofactor():
    rng = random.Random(42)
    for q, p, m in ((2, 2, 1), (5, 5, 1), (4, 2, 2), (9, 3, 2)):
        F = field_new(p, m)
        for size in (1, 2, 3, 4, 5, 6, 7, 8):
            M = Mat(F, size, size, [rng.randrange(q) for _ in range(size * size)])
            assert oracle._charpoly_cofactor(F, M) == oracle._charpoly_berkowitz(F, M)


def test_charpoly_multiplicity():
    F7 = field_new(7, 1)
    M = Mat.from_rows(F7, [[2, 1, 0], [0, 2, 0], [0, 0, 3]])
    assert oracle.spectrum(M) == [(2, 2), (3, 1)]


def test_hull_examples():
    F5 = field_new(5, 1)
    ref = LinearCode(Mat.from_rows(F5, [[1, 0, 1, 1], [0, 1, 1, 4]]))
    assert oracle.hull_basis_bruteforce(ref, EUCLIDEAN).rows == 0
    F2 = field_new(2, 1)
    so = LinearCode(Mat.from_rows(F2, [[1, 1, 1, 1]]))
    assert oracle.hull_basis_bruteforce(so, EUCLIDEAN).tolists() == [[1, 1, 1, 1]]
    F3 = field_new(3, 1)
    full = LinearCode(Mat.identity(F3, 2))
    assert oracle.hull_basis_bruteforce(full, EUCLIDEAN).rows == 0


def test_hull_dimension_matches_gram_rank(random_codes):
    for C in random_codes:
        brute = oracle.hull_basis_bruteforce(C, EUCLIDEAN)
        assert brute.rows == C.hull_dim(EUCLIDEAN)
        # every basis vector really lies in both row spaces
        for i in range(brute.rows):
            v = Mat(C.field, 1, C.n, brute.row(i))
            from lcdmds.matrix import vstack
            assert vstack([C.gen, v]).rank() == C.k
            D = C.dual()
            assert vstack([D.gen, v]).rank() == D.k
        if C.field.m % 2 == 0:
            hbrute = oracle.hull_basis_bruteforce(C, HERMITIAN)
            assert hbrute.rows == C.hull_dim(HERMITIAN)


def test_hull_dimension_exhaustive_small_systematic():
    # all systematic [I_k : P] for a few tiny shapes
    for q, p, m in ((2, 2, 1), (3, 3, 1)):
        F = field_new(p, m)
        for n, k in ((3, 1), (4, 2), (5, 2)):
            r = n - k
            for entries in product(range(q), repeat=k * r):
                rows = [[1 if i == j else 0 for j in range(k)]
                        + list(entries[i * r:(i + 1) * r]) for i in range(k)]
                C = LinearCode(Mat.from_rows(F, rows))
                assert oracle.hull_basis_bruteforce(C, EUCLIDEAN).rows \
                    == C.hull_dim(EUCLIDEAN)


def test_mds_and_distance_agree_with_predicates(random_codes):
    for C in random_codes:
        assert oracle.mds_exhaustive(C) == C.is_mds()[0]
        assert oracle.distance_exhaustive(C) == C.min_distance()[0]


def test_exhaustive_nonexistence_small_cells():
    F2 = field_new(2, 1)
    cert = oracle.exhaustive_nonexistence(F2, 2, 1)
    assert not cert.found and cert.tested == cert.candidates == 2
    F3 = field_new(3, 1)
    cert = oracle.exhaustive_nonexistence(F3, 4, 2)
    assert not cert.found and cert.tested == cert.candidates == 81


def test_exhaustive_nonexistence_finds_a_witness():
    F5 = field_new(5, 1)
    cert = oracle.exhaustive_nonexistence(F5, 4, 2)
    assert cert.found
    assert cert.witness.is_lcd() and cert.witness.is_mds()[0]


def test_exhaustive_nonexistence_custom_predicate():
    F2 = field_new(2, 1)
    cert = oracle.exhaustive_nonexistence(F2, 3, 1, predicate=lambda C: False)
    assert not cert.found and cert.tested == 4


def test_caps_raise():
    F5 = field_new(5, 1)
    C = construct.euclidean_lcd_mds(F5, 6, 3).code
    with pytest.raises(CapExceeded):
        oracle.distance_exhaustive(C, codeword_cap=3)
    with pytest.raises(CapExceeded):
        oracle.mds_exhaustive(C, subset_cap=3)
    with pytest.raises(CapExceeded):
        oracle.exhaustive_nonexistence(F5, 6, 3, candidate_cap=10)


def test_oracle_validates_all_euclid_constructions():
    for q, p, m in ((4, 2, 2), (5, 5, 1), (7, 7, 1)):
        F = field_new(p, m)
        for n in range(1, q + 2):
            for k in range(n + 1):
                C = construct.euclidean_lcd_mds(F, n, k).code
                assert oracle.mds_exhaustive(C)
                assert oracle.hull_basis_bruteforce(C, EUCLIDEAN).rows == 0


def test_dispatcher_ok_cells_confirmed_by_complete_search():
    # independent existence re-proof: wherever the dispatcher claims OK and
    # the systematic space is small, a full enumeration must find a witness
    for q, p, m in ((4, 2, 2), (5, 5, 1), (7, 7, 1)):
        F = field_new(p, m)
        for n in range(2, q + 2):
            for k in range(1, n):
                if q**(k * (n - k)) > 200_000:
                    continue
                construct.euclidean_lcd_mds(F, n, k)  # must not raise
                assert oracle.exhaustive_nonexistence(F, n, k).found
