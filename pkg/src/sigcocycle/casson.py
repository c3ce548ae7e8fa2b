"""Morita's homomorphism d_0 on products of hyperelliptic BSCC maps.

On the subgroup generated by twists along bounding curves, intersected with
the hyperelliptic group, ``d_0 = 3 phi``.  Inputs are built from BSCC words so
that membership in that subgroup holds by construction; the only thing checked
is the necessary condition that the product acts trivially on homology.

The Casson invariant itself also has a Johnson-homomorphism part, which is not
computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .errors import NotTorelli, RangeError
from .meyer import phi
from .words import Word, bscc_word, eval_word

DISCLAIMER = "d0 excludes the Johnson-homomorphism summand of the Casson invariant"


@dataclass(frozen=True)
class BsccFactor:
    h: int
    conjugator: Optional[Word] = None
    exponent: int = 1


@dataclass(frozen=True)
class BsccProduct:
    genus: int
    factors: tuple[BsccFactor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if not 1 <= f.h <= self.genus - 1:
                raise RangeError(f"BSCC genus h={f.h} outside 1..{self.genus - 1}")
            if f.conjugator is not None and f.conjugator.genus != self.genus:
                raise RangeError("conjugator has the wrong genus")

    def expand(self) -> Word:
        w = Word(self.genus)
        for f in self.factors:
            core = bscc_word(self.genus, f.h) ** f.exponent
            if f.conjugator is not None:
                core = core.conjugate_by(f.conjugator)
            w = w + core
        return w


def d0(p: BsccProduct) -> Fraction:
    w = p.expand()
    if eval_word(w) != linalg.identity(2 * p.genus):
        raise NotTorelli("product does not act trivially on homology")
    return 3 * phi(w)


def d0_word(w: Word) -> Fraction:
    """``3 phi(w)`` for a word the caller vouches for; homology is still checked."""
    if eval_word(w) != linalg.identity(2 * w.genus):
        raise NotTorelli("word does not act trivially on homology")
    return 3 * phi(w)


def d0_bscc_closed_form(g: int, h: int) -> Fraction:
    if not 1 <= h <= g - 1:
        raise RangeError(f"BSCC genus h must satisfy 1 <= h <= g-1, got h={h}, g={g}")
    return Fraction(-12 * h * (g - h), 2 * g + 1)
