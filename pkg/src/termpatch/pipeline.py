"""End-to-end inference and verification for one before/after pair."""
from __future__ import annotations

from dataclasses import dataclass

from .config import Config
from .diff import DiffResult, diff
from .engine import RewriteRule, Strategy, TopDownAll, rewrite
from .rulegen import Signature, build_rules, emit_str, infer_signature
from .term import Term, normalize_locations
from .weave import WeaveTree, weave

__all__ = ["Inference", "infer", "weave_pair", "check_rules"]


@dataclass(frozen=True)
class Inference:
    rules: tuple
    signature: Signature
    weave: WeaveTree
    diff: DiffResult

    def to_str(self) -> str:
        return emit_str(self.rules, self.signature)


def weave_pair(before: Term, after: Term, config: Config = Config(),
               keep_locations: bool = False) -> tuple[DiffResult, WeaveTree]:
    """Diff and weave two terms.

    Location subterms are normalized first unless ``keep_locations`` is set,
    so that shifted line/column numbers do not register as changes.
    """
    if not keep_locations:
        before = normalize_locations(before, config.locations)
        after = normalize_locations(after, config.locations)
    d = diff(before, after, config.comparable)
    return d, weave(d.pre, d.post)


def infer(before: Term, after: Term, config: Config = Config()) -> Inference:
    d, w = weave_pair(before, after, config)
    rules = build_rules(w, config.generalization, config.context, config.locations)
    patterns = [p for r in rules for p in (r.lhs, r.rhs)]
    sig = infer_signature([before, after, *patterns])
    return Inference(tuple(rules), sig, w, d)


def check_rules(before: Term, after: Term, rules: "list[RewriteRule]",
                config: Config = Config(),
                strategy: Strategy = TopDownAll()) -> tuple[bool, Term]:
    """Apply ``rules`` to ``before``; compare with ``after`` modulo locations."""
    result, _ = rewrite(before, rules, strategy)
    ok = (normalize_locations(result, config.locations)
          == normalize_locations(after, config.locations))
    return ok, result
