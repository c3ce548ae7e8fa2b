"""Words in the chain-twist generators and their action on homology.

Homology basis is ``a_1..a_g, b_1..b_g`` with intersection form
``omega = [[0, I], [-I, 0]]``.  The chain curve classes are::

    gamma_{2i}   = a_i                 (1 <= i <= g)
    gamma_{2i-1} = b_i - b_{i-1}       (1 <= i <= g+1, b_0 = b_{g+1} = 0)

and the twist along a curve of class ``c`` acts by ``x -> x + omega(x, c) c``.

Matrices act on row vectors from the right, so the matrix of a word is the
plain product of its letter matrices in reading order and the leftmost letter
acts first.  ``eval_word`` is therefore a homomorphism from words (under
concatenation) to Sp(2g, Z) (under matrix multiplication).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from . import linalg
from .errors import DimensionMismatch, IndexOutOfRange, InputError, RangeError, ZeroVector


class Letter(NamedTuple):
    index: int
    exponent: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.exponent)

    def __str__(self):
        return f"z{self.index}" if self.exponent == 1 else f"z{self.index}^-1"


@dataclass(frozen=True)
class Word:
    genus: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.genus < 1:
            raise RangeError(f"genus must be >= 1, got {self.genus}")
        letters = tuple(Letter(*l) for l in self.letters)
        n = 2 * self.genus + 1
        for l in letters:
            if not 1 <= l.index <= n:
                raise IndexOutOfRange(f"generator z{l.index} out of range for genus "
                                      f"{self.genus} (max z{n})")
            if l.exponent not in (1, -1):
                raise InputError(f"letter exponent must be +1 or -1, got {l.exponent}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_indices(cls, genus: int, indices: Iterable[int]) -> "Word":
        """``[1, -2, 3]`` means ``z1 z2^-1 z3``."""
        return cls(genus, tuple(Letter(abs(i), 1 if i > 0 else -1) for i in indices))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.genus != self.genus:
            raise DimensionMismatch(f"cannot concatenate genus {self.genus} and {other.genus} words")
        return Word(self.genus, self.letters + other.letters)

    def __mul__(self, k: int) -> "Word":
        return self ** k

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** -k
        return Word(self.genus, self.letters * k)

    def inverse(self) -> "Word":
        return Word(self.genus, tuple(l.inverse() for l in reversed(self.letters)))

    def reduced(self) -> "Word":
        """Cancel adjacent ``z z^-1`` pairs."""
        out: list[Letter] = []
        for l in self.letters:
            if out and out[-1] == l.inverse():
                out.pop()
            else:
                out.append(l)
        return Word(self.genus, tuple(out))

    def conjugate_by(self, u: "Word") -> "Word":
        """``u self u^-1``."""
        return u + self + u.inverse()

    def __str__(self):
        return " ".join(map(str, self.letters)) if self.letters else "1"


@dataclass(frozen=True)
class ChainClasses:
    classes: tuple[tuple[int, ...], ...]
    omega: linalg.Matrix


def pair(omega, x, y) -> int:
    """The form ``omega(x, y) = x^T omega y``."""
    return linalg.dot(x, linalg.mat_vec(omega, y))


@lru_cache(maxsize=None)
def chain_classes(g: int) -> ChainClasses:
    if g < 1:
        raise RangeError(f"genus must be >= 1, got {g}")
    classes = []
    for k in range(1, 2 * g + 2):
        v = [0] * (2 * g)
        if k % 2 == 0:
            v[k // 2 - 1] = 1
        else:
            i = (k + 1) // 2
            if i <= g:
                v[g + i - 1] += 1
            if i >= 2:
                v[g + i - 2] -= 1
        classes.append(tuple(v))
    return ChainClasses(tuple(classes), linalg.standard_form(g))


def transvection(c, omega=None) -> linalg.Matrix:
    """Matrix of ``x -> x + omega(x, c) c`` acting on row vectors.

    Row ``i`` is the image of the ``i``-th basis vector.
    """
    c = tuple(c)
    if not any(c):
        raise ZeroVector("transvection along the zero vector")
    if omega is None:
        omega = linalg.standard_form(len(c) // 2)
    if linalg.shape(omega) != (len(c), len(c)):
        raise DimensionMismatch("vector and form have different dimensions")
    # omega(e_i, c) = (omega c)_i
    oc = linalg.mat_vec(omega, c)
    n = len(c)
    return tuple(tuple(int(i == j) + oc[i] * c[j] for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def generator_matrices(g: int) -> tuple[linalg.Matrix, ...]:
    cc = chain_classes(g)
    return tuple(transvection(c, cc.omega) for c in cc.classes)


@lru_cache(maxsize=None)
def inverse_generator_matrices(g: int) -> tuple[linalg.Matrix, ...]:
    return tuple(linalg.symplectic_inverse(m) for m in generator_matrices(g))


def letter_matrix(g: int, letter: Letter) -> linalg.Matrix:
    if letter.exponent == 1:
        return generator_matrices(g)[letter.index - 1]
    return inverse_generator_matrices(g)[letter.index - 1]


def eval_word(w: Word) -> linalg.Matrix:
    M = linalg.identity(2 * w.genus)
    for letter in w:
        M = linalg.mat_mul(M, letter_matrix(w.genus, letter))
    return M


def prefix_matrices(w: Word) -> list[linalg.Matrix]:
    """Matrices of the prefixes of ``w`` of length 0, 1, ..., len(w)."""
    M = linalg.identity(2 * w.genus)
    out = [M]
    for letter in w:
        M = linalg.mat_mul(M, letter_matrix(w.genus, letter))
        out.append(M)
    return out


# -- distinguished words ---------------------------------------------------

def generator(g: int, i: int, exponent: int = 1) -> Word:
    return Word(g, (Letter(i, exponent),))


def xi_word(g: int) -> Word:
    """``z1 z2 ... z_{2g+1}``; conjugates each generator to the next one."""
    return Word.from_indices(g, range(1, 2 * g + 2))


def iota_word(g: int) -> Word:
    """``z1 ... z_{2g+1} z_{2g+1} ... z1``, the hyperelliptic involution."""
    up = list(range(1, 2 * g + 2))
    return Word.from_indices(g, up + up[::-1])


def bscc_word(g: int, h: int) -> Word:
    """``(z1 ... z_{2h})^(4h+2)``, a twist about a separating curve of genus h."""
    if not 1 <= h <= g - 1:
        raise RangeError(f"BSCC genus h must satisfy 1 <= h <= g-1, got h={h}, g={g}")
    return Word.from_indices(g, range(1, 2 * h + 1)) ** (4 * h + 2)


def chain_relator(g: int) -> Word:
    """``(z1 ... z_{2g+1})^(2g+2)``, trivial in the mapping class group."""
    return xi_word(g) ** (2 * g + 2)


def even_chain_relator(g: int) -> Word:
    """``(z1 ... z_{2g})^(4g+2)``, trivial in the mapping class group."""
    return Word.from_indices(g, range(1, 2 * g + 1)) ** (4 * g + 2)


def braid_relator(g: int, i: int) -> Word:
    """``z_i z_{i+1} z_i z_{i+1}^-1 z_i^-1 z_{i+1}^-1``."""
    j = i + 1
    return Word.from_indices(g, [i, j, i, -j, -i, -j])


def commutation_relator(g: int, i: int, j: int) -> Word:
    if abs(i - j) < 2:
        raise RangeError(f"z{i} and z{j} are adjacent in the chain")
    return Word.from_indices(g, [i, j, -i, -j])


def periodic_words(g: int) -> list[tuple[Word, int]]:
    """Standard periodic elements and their orders: powers of the two chain
    products and the involution."""
    odd = xi_word(g)
    even = Word.from_indices(g, range(1, 2 * g + 1))
    out = [(iota_word(g), 2)]
    for base, order in ((odd, 2 * g + 2), (even, 4 * g + 2)):
        for k in range(1, order):
            if order % k == 0 or k == 1:
                out.append((base ** k, order // _gcd(order, k)))
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def random_word(g: int, length: int, seed) -> Word:
    """Uniform random word; ``seed`` is an int or a :class:`random.Random`."""
    if length < 0:
        raise RangeError("word length must be >= 0")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    n = 2 * g + 1
    return Word(g, tuple(Letter(rng.randint(1, n), rng.choice((1, -1))) for _ in range(length)))


# -- genus one -------------------------------------------------------------

def sl2_word(M) -> Word:
    """A genus-1 word whose matrix is ``M`` in SL(2, Z).

    Here ``z1 = [[1, 1], [0, 1]]`` and ``z2^-1 = [[1, 0], [1, 1]]``; the first
    column is reduced by the Euclidean algorithm, leaving ``+-z1^b``.
    """
    M = linalg.freeze(M)
    if linalg.shape(M) != (2, 2) or M[0][0] * M[1][1] - M[0][1] * M[1][0] != 1:
        raise DimensionMismatch("expected a 2x2 integer matrix of determinant 1")
    (a, b), (c, d) = M
    ops = []  # left multiplications applied to M, as (letter index, power)
    while c != 0:
        if a == 0 or abs(a) > abs(c):
            # a == 0 forces c == +-1; q = -c makes the new a equal to 1
            q = a // c if a else -c
            # z1^-q on the left: row0 -= q * row1
            a, b = a - q * c, b - q * d
            ops.append((1, -q))
        else:
            q = c // a
            # z2^q on the left: row1 -= q * row0
            c, d = c - q * a, d - q * b
            ops.append((2, q))
    # now M' = (ops) M = s * [[1, t], [0, 1]] with s = a = d = +-1
    s = a
    t = b * s
    tail = Word.from_indices(1, [1] * t if t >= 0 else [-1] * -t)
    if s == -1:
        tail = iota_word(1) + tail
    # M = E_1^-1 E_2^-1 ... E_m^-1 (s z1^t)
    w = Word(1)
    for idx, p in ops:
        w = w + Word.from_indices(1, [-idx] * p if p >= 0 else [idx] * -p)
    w = (w + tail).reduced()
    assert eval_word(w) == M
    return w


def direct_sum(*mats) -> linalg.Matrix:
    """Symplectic direct sum, respecting the ``a``-block / ``b``-block ordering."""
    genera = [len(m) // 2 for m in mats]
    g = sum(genera)
    out = [[0] * (2 * g) for _ in range(2 * g)]
    offset = 0
    for m, gi in zip(mats, genera):
        idx = [offset + k for k in range(gi)] + [g + offset + k for k in range(gi)]
        for r in range(2 * gi):
            for s in range(2 * gi):
                out[idx[r]][idx[s]] = m[r][s]
        offset += gi
    return linalg.freeze(out)
