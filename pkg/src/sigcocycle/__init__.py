"""Exact Meyer signature cocycle, Meyer's function on the hyperelliptic
mapping class group, and the 3-manifold invariants built from them."""

from .cocycle import tau
from .meyer import phi
from .words import Word, eval_word

__all__ = ["Word", "eval_word", "phi", "tau"]
__version__ = "0.1.0"
