import random

import pytest

from lcdmds.errors import DimensionMismatch, NotSquare, RankDeficient
from lcdmds.gf import field_new
from lcdmds.matrix import EUCLIDEAN, HERMITIAN, Mat, hstack, same_row_space, vstack


def plain_gram(F, rows, hermitian=False):
    # independent of Mat.gram: direct double loop
    k = len(rows)
    out = []
    for i in range(k):
        out.append([])
        for j in range(k):
            acc = 0
            for a, b in zip(rows[i], rows[j]):
                if hermitian:
                    b = F.conjugate(b)
                acc = F.add(acc, F.mul(a, b))
            out[-1].append(acc)
    return out


def test_identity_law():
    F = field_new(5, 1)
    A = Mat.from_rows(F, [[1, 2], [3, 4]])
    assert Mat.identity(F, 2).mul(A) == A


def test_hstack_shape():
    F = field_new(3, 1)
    P = Mat.from_rows(F, [[1, 2, 0], [2, 2, 1]])
    H = hstack([Mat.identity(F, 2), P])
    assert (H.rows, H.cols) == (2, 5)
    assert H.row(0) == (1, 0, 1, 2, 0)


def test_conj_transpose_gf9():
    F = field_new(3, 2)
    g = F.gamma
    M = Mat.from_rows(F, [[g]])
    assert M.conj_transpose().entry(0, 0) == F.pow(g, 3)


def test_gram_examples():
    F5 = field_new(5, 1)
    G = Mat.from_rows(F5, [[1, 0, 1, 1], [0, 1, 1, 4]])
    assert G.gram(EUCLIDEAN).tolists() == plain_gram(F5, G.tolists()) \
        == [[3, 0], [0, 3]]
    F3 = field_new(3, 1)
    assert Mat.from_rows(F3, [[1, 1, 1, 1]]).gram(EUCLIDEAN).tolists() == [[1]]
    F4 = field_new(2, 2)
    G = Mat.from_rows(F4, [[1, 2]])
    assert G.gram(HERMITIAN).tolists() == plain_gram(F4, [[1, 2]], True) == [[0]]


def test_det_examples():
    F5 = field_new(5, 1)
    assert Mat.from_rows(F5, [[3, 0], [0, 3]]).det() == 4
    assert Mat.zero(F5, 2, 3).rank() == 0
    with pytest.raises(NotSquare):
        Mat.zero(F5, 2, 3).det()


def test_nullspace_example():
    F2 = field_new(2, 1)
    N = Mat.from_rows(F2, [[1, 1]]).nullspace()
    assert N.tolists() == [[1, 1]]


def test_systematic_form_identity_perm():
    F7 = field_new(7, 1)
    G = Mat.from_rows(F7, [[1, 1, 1, 1], [1, 6, 3, 4]])
    P, perm = G.systematic_form()
    assert perm == (0, 1, 2, 3)
    rebuilt = hstack([Mat.identity(F7, 2), P])
    assert same_row_space(G, rebuilt)


def test_systematic_form_already_systematic():
    F5 = field_new(5, 1)
    P0 = Mat.from_rows(F5, [[2, 3], [4, 1]])
    G = hstack([Mat.identity(F5, 2), P0])
    P, perm = G.systematic_form()
    assert P == P0 and perm == (0, 1, 2, 3)


def test_systematic_form_rank_deficient():
    F5 = field_new(5, 1)
    with pytest.raises(RankDeficient):
        Mat.from_rows(F5, [[1, 2, 3], [2, 4, 6]]).systematic_form()


def test_systematic_form_with_permutation():
    F3 = field_new(3, 1)
    G = Mat.from_rows(F3, [[0, 1, 2], [0, 2, 2]])  # zero first column forces a swap
    P, perm = G.systematic_form()
    assert perm == (1, 2, 0)
    permuted = G.permute_columns(perm)
    rebuilt = hstack([Mat.identity(F3, 2), P])
    assert same_row_space(permuted, rebuilt)


def test_dimension_mismatch():
    F = field_new(3, 1)
    with pytest.raises(DimensionMismatch):
        Mat.identity(F, 2).mul(Mat.identity(F, 3))
    with pytest.raises(DimensionMismatch):
        hstack([Mat.identity(F, 2), Mat.identity(F, 3)])


@pytest.mark.parametrize("q,p,m", [(2, 2, 1), (5, 5, 1), (4, 2, 2), (9, 3, 2), (25, 5, 2)])
def test_det_is_multiplicative(q, p, m):
    F = field_new(p, m)
    rng = random.Random(q)
    for size in (1, 2, 3, 4, 5):
        for _ in range(5):
            A = Mat(F, size, size, [rng.randrange(q) for _ in range(size * size)])
            B = Mat(F, size, size, [rng.randrange(q) for _ in range(size * size)])
            assert A.mul(B).det() == F.mul(A.det(), B.det())


def test_rank_nullity(random_codes):
    for C in random_codes:
        A = C.gen
        assert A.rank() + A.nullspace().rows == A.cols


def test_gram_symmetry(random_codes):
    for C in random_codes:
        G = C.gen.gram(EUCLIDEAN)
        assert G == G.transpose()
        if C.field.m % 2 == 0:
            H = C.gen.gram(HERMITIAN)
            assert H == H.conj_transpose()


def test_gram_column_permutation_invariance(random_codes):
    rng = random.Random(5)
    for C in random_codes:
        perm = list(range(C.n))
        rng.shuffle(perm)
        permuted = C.gen.permute_columns(tuple(perm))
        assert permuted.gram(EUCLIDEAN) == C.gen.gram(EUCLIDEAN)


def test_rref_idempotent(random_codes):
    for C in random_codes:
        R, piv = C.gen.rref()
        R2, piv2 = R.rref()
        assert R == R2 and piv == piv2


def test_vstack_and_row_space():
    F = field_new(5, 1)
    A = Mat.from_rows(F, [[1, 2, 3]])
    B = Mat.from_rows(F, [[2, 4, 6]])
    assert vstack([A, B]).rows == 2
    assert same_row_space(A, B)
