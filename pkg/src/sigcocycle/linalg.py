"""Exact integer and rational linear algebra.

Matrices are nested sequences (rows of entries).  Integer matrices that get
passed around between modules are tuples of tuples so they can be hashed and
cached; rational work is done on lists of :class:`fractions.Fraction` and
returned as tuples.  Nothing in here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import DimensionMismatch, NotSymmetric, NotSymplectic

Matrix = tuple  # tuple[tuple[int | Fraction, ...], ...]


class SignatureTriple(NamedTuple):
    positive: int
    negative: int
    null: int

    @property
    def signature(self) -> int:
        return self.positive - self.negative

    def __add__(self, other):  # componentwise, for direct sums
        return SignatureTriple(*(a + b for a, b in zip(self, other)))


def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    return rows, cols


def freeze(M) -> Matrix:
    return tuple(tuple(row) for row in M)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(M) -> Matrix:
    return tuple(zip(*M)) if M else ()


def mat_mul(A, B) -> Matrix:
    if shape(A)[1] != len(B):
        raise DimensionMismatch(f"cannot multiply {shape(A)} by {shape(B)}")
    cols = tuple(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def mat_vec(A, v) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def mat_add(A, B) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A, B) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_neg(A) -> Matrix:
    return tuple(tuple(-a for a in row) for row in A)


def mat_pow(A, k: int) -> Matrix:
    """Non-negative power by repeated squaring."""
    if k < 0:
        raise ValueError("negative exponent; invert first")
    result = identity(len(A))
    base = freeze(A)
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def hstack(*blocks) -> Matrix:
    return tuple(tuple(x for block in blocks for x in block[i]) for i in range(len(blocks[0])))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def block_diagonal(*blocks) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[offset + i][offset:offset + len(row)] = list(row)
        offset += len(b)
    return freeze(out)


def is_symmetric(G) -> bool:
    n, m = shape(G)
    return n == m and all(G[i][j] == G[j][i] for i in range(n) for j in range(i + 1, n))


# -- elimination -----------------------------------------------------------

def rref(M) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    R = [[Fraction(x) for x in row] for row in M]
    rows, cols = shape(M)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        lead = R[r][c]
        if lead != 1:
            R[r] = [x / lead for x in R[r]]
        pivot_row = R[r]
        support = [j for j in range(c, cols) if pivot_row[j]]
        for i in range(rows):
            f = R[i][c]
            if i != r and f:
                row = R[i]
                for j in support:
                    row[j] -= f * pivot_row[j]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def kernel_basis(M, cols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Canonical basis of the right null space ``{v : M v = 0}``.

    One vector per free column of the RREF, with a 1 in that column and zeros
    in the other free columns, so the result does not depend on anything but
    ``M``.  ``cols`` is only needed when ``M`` has no rows.
    """
    rows, ncols = shape(M)
    if cols is not None:
        if rows and cols != ncols:
            raise DimensionMismatch(f"matrix has {ncols} columns, expected {cols}")
        ncols = cols
    if not rows:
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    R, pivots = rref(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -R[row][free]
        basis.append(tuple(v))
    return basis


# -- symmetric forms -------------------------------------------------------

def _diagonalize(G, track: bool):
    n, m = shape(G)
    if not is_symmetric(G):
        raise NotSymmetric("matrix is not symmetric")
    A = [[Fraction(x) for x in row] for row in G]
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)] if track else None

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in P:
                row[i], row[j] = row[j], row[i]

    for k in range(n):
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, n) if A[j][j]), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if A[k][j]), None)
                if j is None:
                    continue
                # all remaining diagonal entries vanish, so the new pivot is 2*a_kj
                for c in range(n):
                    A[k][c] += A[j][c]
                for row in A:
                    row[k] += row[j]
                if track:
                    for row in P:
                        row[k] += row[j]
        pivot = A[k][k]
        pivot_row = A[k]
        support = [j for j in range(k, n) if pivot_row[j]]
        for i in range(k + 1, n):
            f = A[i][k] / pivot
            if not f:
                continue
            # row then column operation; by symmetry only rows/columns >= k matter
            row = A[i]
            for j in support:
                row[j] -= f * pivot_row[j]
            for r in range(k, n):
                if A[r][k]:
                    A[r][i] -= f * A[r][k]
            if track:
                for prow in P:
                    if prow[k]:
                        prow[i] -= f * prow[k]
    return A, P


def congruence_diagonalize(G) -> tuple[Matrix, Matrix]:
    """Return ``(D, P)`` with ``P^T G P = D`` diagonal and ``P`` invertible."""
    D, P = _diagonalize(G, track=True)
    return freeze(D), freeze(P)


def signature(G) -> SignatureTriple:
    """Inertia of a possibly degenerate symmetric rational matrix."""
    D, _ = _diagonalize(G, track=False)
    diag = [D[i][i] for i in range(len(D))]
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return SignatureTriple(pos, neg, len(diag) - pos - neg)


# -- symplectic ------------------------------------------------------------

@lru_cache(maxsize=None)
def standard_form(g: int) -> Matrix:
    """``[[0, I_g], [-I_g, 0]]`` in the basis order ``a_1..a_g, b_1..b_g``."""
    n = 2 * g
    return freeze([[1 if j == i + g else -1 if i == j + g else 0 for j in range(n)]
                   for i in range(n)])


def _check_square_even(M, omega):
    n, m = shape(M)
    if n != m or n % 2:
        raise DimensionMismatch(f"expected a square matrix of even size, got {n}x{m}")
    if shape(omega) != (n, n):
        raise DimensionMismatch(f"form has shape {shape(omega)}, matrix is {n}x{n}")


def is_symplectic(M, omega=None) -> bool:
    if omega is None:
        omega = standard_form(len(M) // 2)
    _check_square_even(M, omega)
    return mat_mul(mat_mul(transpose(M), omega), M) == freeze(omega)


def symplectic_inverse(M, omega=None) -> Matrix:
    """Exact inverse ``omega^-1 M^T omega`` of a symplectic integer matrix."""
    if omega is None:
        omega = standard_form(len(M) // 2)
    if not is_symplectic(M, omega):
        raise NotSymplectic("matrix does not preserve the symplectic form")
    omega_inv = mat_neg(omega)
    if mat_mul(omega_inv, omega) != identity(len(M)):
        omega_inv = _integer_inverse(omega)
    inv = mat_mul(mat_mul(omega_inv, transpose(M)), omega)
    assert mat_mul(M, inv) == identity(len(M))
    return inv


def _integer_inverse(M) -> Matrix:
    n = len(M)
    R, pivots = rref(hstack(M, identity(n)))
    if pivots[:n] != list(range(n)):
        raise DimensionMismatch("singular form")
    inv = [row[n:] for row in R[:n]]
    if any(x.denominator != 1 for row in inv for x in row):
        raise DimensionMismatch("form is not unimodular")
    return freeze([[int(x) for x in row] for row in inv])
