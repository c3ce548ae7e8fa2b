"""Seeded property suite for the cocycle, Meyer's function and rho.

Every property is a theorem, so a single failure is an implementation bug.
Each case draws its inputs from its own ``random.Random`` so a reported
counterexample can be replayed from ``(seed, case)`` alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import linalg
from .cocycle import DEFAULT_J_SIGN, pairing_gram, tau, tau_direct, v_space
from .errors import SigCocycleError
from .meyer import assert_integrality, phi
from .spectral import eta_periodic, hyperelliptic_obstruction, rho_estimate
from .words import (Word, braid_relator, bscc_word, chain_relator, commutation_relator,
                    direct_sum, eval_word, even_chain_relator, generator, iota_word,
                    periodic_words, random_word, xi_word)


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: int = 0
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class VerifyReport:
    genus: int
    cases: int
    seed: int
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


class _Case:
    """Random inputs for one case, drawn lazily from a per-case generator."""

    def __init__(self, g, seed, index, max_length, j_sign):
        self.g = g
        self.rng = random.Random(seed * 1_000_003 + index)
        self.max_length = max_length
        self.j_sign = j_sign
        self.phis: list = []

    def word(self) -> Word:
        return random_word(self.g, self.rng.randint(0, self.max_length), self.rng)

    def phi(self, w: Word):
        value = phi(w, j_sign=self.j_sign)
        self.phis.append((str(w), value))
        return value

    def tau(self, A, B):
        return tau(A, B, j_sign=self.j_sign, check=False)


def _words(**kw):
    return {k: str(v) for k, v in kw.items()}


def _cocycle(c: _Case):
    u, v, w = c.word(), c.word(), c.word()
    A, B, C = eval_word(u), eval_word(v), eval_word(w)
    lhs = c.tau(A, B) + c.tau(linalg.mat_mul(A, B), C)
    rhs = c.tau(A, linalg.mat_mul(B, C)) + c.tau(B, C)
    return lhs == rhs, _words(A=u, B=v, C=w) | {"lhs": lhs, "rhs": rhs}


def _bounded(c: _Case):
    u, v = c.word(), c.word()
    t = c.tau(eval_word(u), eval_word(v))
    return abs(t) <= 2 * c.g, _words(A=u, B=v) | {"tau": t}


def _gram_symmetric(c: _Case):
    u, v = c.word(), c.word()
    A, B = eval_word(u), eval_word(v)
    # pairing_gram raises AsymmetryDetected on failure
    pairing_gram(A, B, v_space(A, B), j_sign=c.j_sign)
    return True, _words(A=u, B=v)


def _identity_vanishes(c: _Case):
    u = c.word()
    A = eval_word(u)
    I = linalg.identity(2 * c.g)
    left, right = tau_direct(I, A, j_sign=c.j_sign), tau_direct(A, I, j_sign=c.j_sign)
    return left == right == 0, _words(A=u) | {"tau(I,A)": left, "tau(A,I)": right}


def _direct_sum(c: _Case):
    u, v = c.word(), c.word()
    u1, v1 = random_word(1, c.rng.randint(0, c.max_length), c.rng), \
        random_word(1, c.rng.randint(0, c.max_length), c.rng)
    A, B, A1, B1 = map(eval_word, (u, v, u1, v1))
    whole = c.tau(direct_sum(A, A1), direct_sum(B, B1))
    parts = c.tau(A, B) + c.tau(A1, B1)
    return whole == parts, _words(A=u, B=v, A1=u1, B1=v1) | {"sum": whole, "parts": parts}


def _class_function(c: _Case):
    u, w = c.word(), c.word()
    a, b = c.phi(w.conjugate_by(u)), c.phi(w)
    return a == b, _words(u=u, w=w) | {"phi(uwu^-1)": a, "phi(w)": b}


def _relations(c: _Case):
    g = c.g
    w, u = c.word(), c.word()
    i = c.rng.randint(1, 2 * g)
    n = 2 * g + 1
    j, k = c.rng.choice([(a, b) for a in range(1, n + 1) for b in range(1, n + 1)
                         if abs(a - b) >= 2])
    iota = iota_word(g)
    relators = {
        "w w^-1": w + w.inverse(),
        f"braid({i})": braid_relator(g, i),
        f"commute({j},{k})": commutation_relator(g, j, k),
        f"iota z{j}": iota + generator(g, j) + iota.inverse() + generator(g, j, -1),
        "u chain u^-1": chain_relator(g).conjugate_by(u),
        "u even-chain u^-1": even_chain_relator(g).conjugate_by(u),
    }
    values = {name: c.phi(r) for name, r in relators.items()}
    return all(v == 0 for v in values.values()), _words(w=w, u=u) | values


def _conjugate_generators(c: _Case):
    g = c.g
    i = c.rng.randint(1, 2 * g)
    a = c.phi(generator(g, i).conjugate_by(xi_word(g)))
    b = c.phi(generator(g, i + 1))
    return a == b, {"i": i, "phi(xi z_i xi^-1)": a, "phi(z_{i+1})": b}


def _torelli_additive(c: _Case):
    g = c.g
    if g < 2:
        return None
    h = c.rng.randint(1, g - 1)
    u = bscc_word(g, h).conjugate_by(c.word())
    w = c.word()
    a, b, d = c.phi(u + w), c.phi(u), c.phi(w)
    return a == b + d, _words(u=u, w=w) | {"phi(uw)": a, "phi(u)+phi(w)": b + d}


def _eta_equals_phi(c: _Case):
    base, n = c.rng.choice(periodic_words(c.g))
    u = c.word()
    w = base.conjugate_by(u)
    eta = eta_periodic(eval_word(w), n, j_sign=c.j_sign)
    value = c.phi(w)
    ok = eta == value and hyperelliptic_obstruction(eta, c.g)
    return ok, _words(w=w) | {"order": n, "eta": eta, "phi": value}


def _rho_conjugation(c: _Case):
    u, w = c.word(), c.word()
    a = rho_estimate(w.conjugate_by(u), K=6, window=3, j_sign=c.j_sign)
    b = rho_estimate(w, K=6, window=3, j_sign=c.j_sign)
    same = (a.sequence, a.detected_limit, a.method) == (b.sequence, b.detected_limit, b.method)
    return same, _words(u=u, w=w) | {"rho(uwu^-1)": a.detected_limit, "rho(w)": b.detected_limit}


def _rho_torelli(c: _Case):
    g = c.g
    if g < 2:
        return None
    h = c.rng.randint(1, g - 1)
    w = bscc_word(g, h).conjugate_by(c.word())
    r = rho_estimate(w, K=4, window=3, j_sign=c.j_sign)
    return r.detected_limit == 0, _words(w=w) | {"rho": r.detected_limit, "method": r.method}


PROPERTIES: list[tuple[str, Callable]] = [
    ("cocycle condition", _cocycle),
    ("|tau| <= 2g", _bounded),
    ("gram symmetry", _gram_symmetric),
    ("tau(I,.) = tau(.,I) = 0", _identity_vanishes),
    ("tau direct-sum additivity", _direct_sum),
    ("phi class function", _class_function),
    ("relation words have phi = 0", _relations),
    ("phi(xi z_i xi^-1) = phi(z_(i+1))", _conjugate_generators),
    ("phi additive against Torelli", _torelli_additive),
    ("eta = phi for periodic words", _eta_equals_phi),
    ("rho conjugation invariance", _rho_conjugation),
    ("rho = 0 on Torelli words", _rho_torelli),
]


def verify_suite(g: int, cases: int = 100, seed: int = 0, *, max_length: int = 12,
                 j_sign: int = DEFAULT_J_SIGN) -> VerifyReport:
    if cases < 1:
        raise ValueError("cases must be >= 1")
    results = [PropertyResult(name) for name, _ in PROPERTIES]
    integrality = PropertyResult("(2g+1) phi integral")
    for index in range(cases):
        case = _Case(g, seed, index, max_length, j_sign)
        for result, (_, check) in zip(results, PROPERTIES):
            try:
                outcome = check(case)
            except SigCocycleError as exc:
                outcome = (False, {"error": f"{type(exc).__name__}: {exc}"})
            if outcome is None:
                continue
            ok, detail = outcome
            result.checked += 1
            if not ok:
                result.failures += 1
                if result.counterexample is None:
                    result.counterexample = {"case": index} | detail
        for word, value in case.phis:
            integrality.checked += 1
            if not assert_integrality(value, g):
                integrality.failures += 1
                if integrality.counterexample is None:
                    integrality.counterexample = {"case": index, "w": word, "phi": value}
    return VerifyReport(g, cases, seed, results + [integrality])
