from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import inertia, matmul
from sigcocycle import linalg
from sigcocycle.errors import DimensionMismatch, NotSymmetric, NotSymplectic

small = st.integers(-4, 4)


@st.composite
def int_matrices(draw, max_rows=5, max_cols=6):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    return [draw(st.lists(small, min_size=cols, max_size=cols)) for _ in range(rows)]


@st.composite
def symmetric_matrices(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = draw(small)
    return M


def test_kernel_of_identity_is_empty():
    assert linalg.kernel_basis(linalg.identity(4)) == []


def test_kernel_of_zero_is_standard_basis():
    basis = linalg.kernel_basis(linalg.zeros(2, 3))
    assert basis == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_kernel_of_row_of_ones():
    assert linalg.kernel_basis([[1, 1]]) == [(Fraction(-1), Fraction(1))]


def test_kernel_with_no_rows():
    assert len(linalg.kernel_basis((), cols=3)) == 3


@given(int_matrices())
def test_rank_nullity(M):
    basis = linalg.kernel_basis(M)
    cols = len(M[0])
    assert len(basis) + linalg.rank(M) == cols
    for v in basis:
        assert all(x == 0 for x in linalg.mat_vec(M, v))
    if basis:
        assert linalg.rank(basis) == len(basis)


@given(int_matrices())
def test_kernel_is_canonical(M):
    assert linalg.kernel_basis(M) == linalg.kernel_basis([list(r) for r in M])


def test_diagonalize_diagonal_input():
    D, P = linalg.congruence_diagonalize([[1, 0], [0, -1]])
    assert D == ((1, 0), (0, -1))
    assert P == ((1, 0), (0, 1))


def test_diagonalize_hyperbolic_plane():
    D, P = linalg.congruence_diagonalize([[0, 1], [1, 0]])
    diag = sorted(D[i][i] for i in range(2))
    assert diag[0] < 0 < diag[1]
    assert D[0][1] == D[1][0] == 0


def test_diagonalize_zero():
    D, P = linalg.congruence_diagonalize(linalg.zeros(3, 3))
    assert D == linalg.zeros(3, 3)
    assert P == linalg.identity(3)


def test_not_symmetric():
    with pytest.raises(NotSymmetric):
        linalg.signature([[0, 1], [0, 0]])
    with pytest.raises(NotSymmetric):
        linalg.congruence_diagonalize([[1, 2, 3]])


@pytest.mark.parametrize("G, expected", [
    ([[1, 0], [0, -1]], (1, 1, 0)),
    ([[2, 1], [1, 2]], (2, 0, 0)),
    ([[0, 1], [1, 0]], (1, 1, 0)),
    ([[0, 0], [0, 0]], (0, 0, 2)),
    ([[1, 1], [1, 1]], (1, 0, 1)),
])
def test_signature_examples(G, expected):
    assert linalg.signature(G) == expected
    assert inertia(G) == expected


@given(symmetric_matrices())
def test_diagonalization_is_exact(G):
    D, P = linalg.congruence_diagonalize(G)
    assert matmul(matmul(linalg.transpose(P), G), P) == [list(r) for r in D]
    n = len(G)
    assert all(D[i][j] == 0 for i in range(n) for j in range(n) if i != j)
    assert linalg.rank(P) == n


@given(symmetric_matrices())
def test_signature_matches_charpoly_oracle(G):
    assert tuple(linalg.signature(G)) == inertia(G)


@given(symmetric_matrices(max_n=5), st.data())
def test_signature_congruence_invariant(G, data):
    n = len(G)
    P = [data.draw(st.lists(small, min_size=n, max_size=n)) for _ in range(n)]
    assume(linalg.rank(P) == n)
    H = matmul(matmul(linalg.transpose(P), G), P)
    assert linalg.signature(H) == linalg.signature(G)


@given(symmetric_matrices(max_n=4), symmetric_matrices(max_n=4))
def test_signature_of_direct_sum(G, H):
    assert linalg.signature(linalg.block_diagonal(G, H)) == \
        linalg.signature(G) + linalg.signature(H)


def test_symplectic_inverse_examples():
    I2 = linalg.identity(2)
    assert linalg.symplectic_inverse(I2) == I2
    assert linalg.symplectic_inverse(linalg.mat_neg(I2)) == linalg.mat_neg(I2)
    assert linalg.symplectic_inverse([[1, 1], [0, 1]]) == ((1, -1), (0, 1))


def test_symplectic_inverse_rejects():
    with pytest.raises(NotSymplectic):
        linalg.symplectic_inverse([[2, 0], [0, 2]])


def test_is_symplectic():
    assert linalg.is_symplectic(linalg.identity(4))
    assert not linalg.is_symplectic([[2, 0], [0, 2]])
    with pytest.raises(DimensionMismatch):
        linalg.is_symplectic([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(DimensionMismatch):
        linalg.is_symplectic(linalg.identity(2), linalg.standard_form(2))


def test_standard_form():
    assert linalg.standard_form(1) == ((0, 1), (-1, 0))
    om = linalg.standard_form(3)
    assert linalg.mat_mul(om, om) == linalg.mat_neg(linalg.identity(6))


def test_mat_pow():
    T = ((1, 1), (0, 1))
    assert linalg.mat_pow(T, 0) == linalg.identity(2)
    assert linalg.mat_pow(T, 7) == ((1, 7), (0, 1))
