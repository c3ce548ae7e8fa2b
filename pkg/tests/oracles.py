"""Independent reference computations used only by the tests."""

from fractions import Fraction


def charpoly(M):
    """Coefficients ``[1, c1, ..., cn]`` of ``det(tI - M)`` via Faddeev-LeVerrier."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    coeffs = [Fraction(1)]
    N = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # N_k = A N_{k-1} + c_{k-1} I
        prev = [[N[i][j] + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        N = [[sum(A[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(N[i][i] for i in range(n)) / k)
    return coeffs


def _sign_changes(seq):
    signs = [x > 0 for x in seq if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia(M):
    """(positive, negative, null) eigenvalue counts of a symmetric matrix.

    All roots of the characteristic polynomial are real, so Descartes' rule of
    signs counts the positive ones exactly; negatives come from ``p(-t)``.
    """
    n = len(M)
    c = charpoly(M)
    null = 0
    while null < n and c[n - null] == 0:
        null += 1
    pos = _sign_changes(c)
    neg = _sign_changes([x * (-1) ** (n - i) for i, x in enumerate(c)])
    return pos, neg, null


def brute_inverse(M):
    """Gauss-Jordan inverse over the rationals."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next(i for i in range(c, n) if A[i][c])
        A[c], A[p] = A[p], A[c]
        lead = A[c][c]
        A[c] = [x / lead for x in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [row[n:] for row in A]


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]
