"""Invariants of mapping tori derived from Meyer's function.

* eta of a mapping torus with periodic monodromy, as an average of tau values;
* the von Neumann rho-invariant of the infinite cyclic cover, as the limit of
  ``(phi(f^k) - k phi(f)) / k``, with closed forms where they are known;
* the mod-1 combinations relating the Rochlin invariant, rho and e_1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg
from .cocycle import DEFAULT_J_SIGN, tau
from .errors import GenusMismatch, NotPeriodic, RangeError
from .meyer import phi, phi_powers
from .words import Word, eval_word, sl2_word

PERIODIC = "periodic-closed-form"
TORELLI_POWER = "torelli-power-closed-form"
SL2 = "sl2-closed-form"
AFFINE_TAIL = "affine-tail"
INCONCLUSIVE = "inconclusive"


def default_order_cap(g: int) -> int:
    # periodic mapping classes have order at most 4g+2
    return 12 * g


def matrix_order(M, cap: Optional[int] = None) -> Optional[int]:
    """Smallest ``n <= cap`` with ``M^n = I``, or None."""
    M = linalg.freeze(M)
    if cap is None:
        cap = default_order_cap(len(M) // 2)
    if cap < 1:
        raise RangeError("order cap must be >= 1")
    I = linalg.identity(len(M))
    P = M
    for n in range(1, cap + 1):
        if P == I:
            return n
        P = linalg.mat_mul(P, M)
    return None


def eta_periodic(M, n: int, *, j_sign: int = DEFAULT_J_SIGN) -> Fraction:
    """``(1/n) sum_{k=1}^{n-1} tau(M, M^k)`` for ``M`` of order dividing ``n``."""
    M = linalg.freeze(M)
    if n < 1 or linalg.mat_pow(M, n) != linalg.identity(len(M)):
        raise NotPeriodic(f"matrix does not satisfy M^{n} = I")
    total = 0
    P = M
    for _ in range(1, n):
        total += tau(M, P, j_sign=j_sign)
        P = linalg.mat_mul(P, M)
    return Fraction(total, n)


def hyperelliptic_obstruction(eta, g: int) -> bool:
    """False when ``eta`` rules out the periodic map commuting with the involution."""
    return (Fraction(eta) * (2 * g + 1)).denominator == 1


def rho_periodic(w: Word, n: int, *, generator=None, j_sign: int = DEFAULT_J_SIGN) -> Fraction:
    """rho of the cyclic cover for a periodic ``w`` of order ``n``.

    ``phi(f^k)`` takes only the values ``phi(f^0..f^(n-1))``, so
    ``(phi(f^k) - k phi(f))/k`` tends to ``-phi(f)``.  Periodicity is checked
    as far as it can be: ``eval(w)^n = I`` and ``phi(w^n) = 0``.
    """
    M = eval_word(w)
    if n < 1 or linalg.mat_pow(M, n) != linalg.identity(len(M)):
        raise NotPeriodic(f"word does not have order dividing {n} on homology")
    powers = phi_powers(w, n, generator=generator, j_sign=j_sign)
    if powers[n] != 0:
        raise NotPeriodic(f"phi(w^{n}) = {powers[n]} != 0, so w^{n} is not the identity")
    return -powers[1]


def classify_sl2(M) -> str:
    M = linalg.freeze(M)
    if linalg.shape(M) != (2, 2):
        raise GenusMismatch("trace classification is only for genus 1")
    t = abs(M[0][0] + M[1][1])
    return "elliptic" if t < 2 else "parabolic" if t == 2 else "hyperbolic"


def _sgn(b: int) -> int:
    return (b > 0) - (b < 0)


def rho_sl2(M, *, generator=None, j_sign: int = DEFAULT_J_SIGN) -> Optional[Fraction]:
    """Closed-form rho in genus 1, or None if no closed form applies."""
    M = linalg.freeze(M)
    kind = classify_sl2(M)
    if kind == "hyperbolic":
        return Fraction(0)
    if kind == "elliptic":
        return -phi(sl2_word(M), generator=generator, j_sign=j_sign)
    if M[0][0] == 1 and M[1][0] == 0 and M[1][1] == 1:
        return Fraction(-_sgn(M[0][1]))
    return None


@dataclass(frozen=True)
class RhoReport:
    sequence: tuple[tuple[int, Fraction], ...]
    detected_limit: Optional[Fraction]
    method: str
    phi_values: tuple[Fraction, ...] = field(default=(), repr=False)


def rho_estimate(w: Word, K: int = 12, window: int = 4, *, cap: Optional[int] = None,
                 generator=None, j_sign: int = DEFAULT_J_SIGN) -> RhoReport:
    """Approximate rho from ``s_k = (phi(f^k) - k phi(f)) / k``, k = 1..K.

    When the matrix of ``f`` has finite order ``n``, ``f^n`` acts trivially on
    homology, and ``phi(f^(k+n)) = phi(f^k) + phi(f^n)`` since tau vanishes
    against the identity.  The limit is then exactly ``phi(f^n)/n - phi(f)``;
    this is the periodic closed form when ``phi(f^n) = 0`` and the Torelli
    power form otherwise.

    Otherwise the last ``window`` values of ``phi(f^k)`` are tested for exact
    affinity in ``k``; if they are affine with slope ``m`` the reported limit
    is ``m - phi(f)``.
    """
    if not K >= window >= 3:
        raise RangeError(f"need K >= window >= 3, got K={K}, window={window}")
    M = eval_word(w)
    n = matrix_order(M, cap)
    kmax = max(K, n or 0)
    values = phi_powers(w, kmax, generator=generator, j_sign=j_sign)
    base = values[1]
    seq = tuple((k, (values[k] - k * base) / k) for k in range(1, K + 1))
    if n is not None:
        limit = values[n] / n - base
        method = PERIODIC if values[n] == 0 else TORELLI_POWER
        return RhoReport(seq, limit, method, tuple(values[:K + 1]))
    tail = values[K - window + 1:K + 1]
    diffs = [b - a for a, b in zip(tail, tail[1:])]
    if all(d == diffs[0] for d in diffs):
        return RhoReport(seq, diffs[0] - base, AFFINE_TAIL, tuple(values[:K + 1]))
    return RhoReport(seq, None, INCONCLUSIVE, tuple(values[:K + 1]))


# -- mod-1 combinations ----------------------------------------------------

def mod_one(x) -> Fraction:
    return Fraction(x) % 1


def rochlin_combine(sigma_w: int) -> Fraction:
    """``sigma(W)/16 mod 1``."""
    return mod_one(Fraction(sigma_w, 16))


def e1_class_value(mu, rho) -> Fraction:
    """``mu - rho/16 mod 1``."""
    return mod_one(Fraction(mu) - Fraction(rho) / 16)
