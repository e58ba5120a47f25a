"""Milnor invariants of welded string links and classical links."""

from ._core import (
    ConjAut,
    Error,
    ParseError,
    SemanticError,
    StringLink,
    classical,
    compare,
    group_commutator,
    is_trivial,
    mu4,
    mu4_tsv,
    phi,
    reduce_word,
)

__version__ = "0.1.0"

__all__ = [
    "ConjAut",
    "Error",
    "ParseError",
    "SemanticError",
    "StringLink",
    "classical",
    "compare",
    "group_commutator",
    "is_trivial",
    "mu4",
    "mu4_tsv",
    "phi",
    "reduce_word",
]
