"""The signature 2-cocycle on Sp(2g, Z).

For ``A, B`` symplectic, ``V = {(x, y) : (A^-1 - I) x + (B - I) y = 0}``
carries the symmetric form ``<(x1, y1), (x2, y2)> = (x1 + y1) . J (I - B) y2``
and ``tau(A, B)`` is its signature.

``J`` is multiplication by i.  Its overall sign is a convention that flips the
sign of tau; the one used here, ``J = [[0, I], [-I, 0]]``, is the only one
that reproduces the known genus-1 values of Meyer's function together with the
row-vector action of :mod:`sigcocycle.words` (see :mod:`sigcocycle.calibration`).
``j_sign=-1`` selects the opposite structure and exists so that the
calibration gate can show it fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import linalg
from .errors import AsymmetryDetected, GenusMismatch, NotSymplectic

DEFAULT_J_SIGN = 1


@lru_cache(maxsize=None)
def complex_structure(g: int, j_sign: int = DEFAULT_J_SIGN) -> linalg.Matrix:
    J = linalg.standard_form(g)
    return J if j_sign == 1 else linalg.mat_neg(J)


@dataclass(frozen=True)
class BilinearSpace:
    basis: tuple[tuple[Fraction, ...], ...]
    gram: linalg.Matrix

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _genus(A, B) -> int:
    n = len(A)
    if len(B) != n:
        raise GenusMismatch(f"matrices of size {n} and {len(B)}")
    if n % 2:
        raise GenusMismatch(f"odd matrix size {n}")
    return n // 2


def _check(A, B) -> int:
    g = _genus(A, B)
    for name, M in (("A", A), ("B", B)):
        if not linalg.is_symplectic(M):
            raise NotSymplectic(f"{name} is not symplectic")
    return g


def v_space(A, B, *, check: bool = True) -> list[tuple[int, ...]]:
    """Basis of ``V_{A,B}`` as vectors ``(x, y)`` of length 4g.

    The canonical kernel basis is rescaled to primitive integer vectors; the
    signature only cares about the span and positive rescaling.
    """
    g = _check(A, B) if check else _genus(A, B)
    I = linalg.identity(2 * g)
    M = linalg.hstack(linalg.mat_sub(linalg.symplectic_inverse(A) if check
                                     else _inverse(A), I),
                      linalg.mat_sub(B, I))
    out = []
    for v in linalg.kernel_basis(M, 4 * g):
        d = lcm(*(x.denominator for x in v))
        out.append(tuple(int(x * d) for x in v))
    return out


def _inverse(A):
    # -omega A^T omega, valid because A is known to be symplectic
    omega = linalg.standard_form(len(A) // 2)
    return linalg.mat_mul(linalg.mat_mul(linalg.mat_neg(omega), linalg.transpose(A)), omega)


def pairing_gram(A, B, basis, *, j_sign: int = DEFAULT_J_SIGN) -> linalg.Matrix:
    g = _genus(A, B)
    n = 2 * g
    J = complex_structure(g, j_sign)
    K = linalg.mat_mul(J, linalg.mat_sub(linalg.identity(n), B))
    left = [tuple(v[i] + v[n + i] for i in range(n)) for v in basis]
    right = [linalg.mat_vec(K, v[n:]) for v in basis]
    G = linalg.freeze([[linalg.dot(l, r) for r in right] for l in left])
    if not linalg.is_symmetric(G):
        raise AsymmetryDetected(f"pairing is not symmetric on V for A={A}, B={B}")
    return G


def bilinear_space(A, B, *, j_sign: int = DEFAULT_J_SIGN) -> BilinearSpace:
    basis = v_space(A, B)
    return BilinearSpace(tuple(basis), pairing_gram(A, B, basis, j_sign=j_sign))


def tau(A, B, *, j_sign: int = DEFAULT_J_SIGN, check: bool = True) -> int:
    """Meyer's signature cocycle ``tau(A, B)``."""
    A, B = linalg.freeze(A), linalg.freeze(B)
    if check:
        _check(A, B)
    return _tau(A, B, j_sign)


@lru_cache(maxsize=1 << 16)
def _tau(A, B, j_sign: int) -> int:
    n = len(A)
    I = linalg.identity(n)
    if A == I or B == I:
        return 0
    basis = v_space(A, B, check=False)
    if not basis:
        return 0
    return linalg.signature(pairing_gram(A, B, basis, j_sign=j_sign)).signature


def tau_direct(A, B, *, j_sign: int = DEFAULT_J_SIGN) -> int:
    """tau without the identity shortcut or the cache; used by the property suite."""
    A, B = linalg.freeze(A), linalg.freeze(B)
    space = bilinear_space(A, B, j_sign=j_sign)
    return linalg.signature(space.gram).signature if space.basis else 0
