"""Input validation helpers for the estimator API."""
from __future__ import annotations

from collections.abc import Iterable
from os import PathLike
from pathlib import Path

from .engine import Innermost, OnceTopDown, TopDownAll
from .term import Appl, Int, Str, parse_term

__all__ = ["check_term", "check_terms", "check_term_pairs", "check_strategy", "STRATEGIES"]

STRATEGIES = ("topdown", "once", "innermost")


def check_term(t):
    """Coerce ``t`` to a term: terms pass through, text is parsed, paths are read."""
    if isinstance(t, (Appl, Str, Int)):
        return t
    if isinstance(t, PathLike):
        return parse_term(Path(t).read_text(encoding="utf-8"))
    if isinstance(t, str):
        return parse_term(t)
    raise TypeError(f"expected a term, aterm text or a path, got {type(t).__name__}")


def _is_single(X):
    return isinstance(X, (Appl, Str, Int, str, PathLike))


def check_terms(X) -> list:
    """A single term-like, or an iterable of them, as a list of terms."""
    if _is_single(X):
        return [check_term(X)]
    if not isinstance(X, Iterable):
        raise TypeError(f"expected a term or a sequence of terms, got {type(X).__name__}")
    terms = [check_term(x) for x in X]
    if not terms:
        raise ValueError("found an empty sequence of terms")
    return terms


def check_term_pairs(X, y):
    before, after = check_terms(X), check_terms(y)
    if len(before) != len(after):
        raise ValueError(
            f"inconsistent numbers of before/after terms: {len(before)} vs {len(after)}")
    return before, after


def check_strategy(name, max_steps=10000):
    if name == "topdown":
        return TopDownAll()
    if name == "once":
        return OnceTopDown()
    if name == "innermost":
        return Innermost(max_steps)
    raise ValueError(f"strategy must be one of {STRATEGIES}, got {name!r}")
