"""A small rewrite engine: nonlinear matching, instantiation, strategies."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .exceptions import StepLimitExceeded, UnboundMetavariableError, WildcardOnRhsError
from .term import (
    Appl, Metavar, Pattern, Term, Wildcard, children_of, preorder, replace_at,
    subterm_at,
)

__all__ = [
    "RewriteRule", "Substitution", "OnceTopDown", "TopDownAll", "Innermost",
    "Strategy", "match", "instantiate", "apply_rule", "rewrite", "replay",
]

Substitution = dict  # metavariable name -> Term


@dataclass(frozen=True)
class RewriteRule:
    name: str
    lhs: Pattern
    rhs: Pattern


@dataclass(frozen=True)
class OnceTopDown:
    pass


@dataclass(frozen=True)
class TopDownAll:
    pass


@dataclass(frozen=True)
class Innermost:
    max_steps: int = 10000

    def __post_init__(self):
        if self.max_steps < 1:
            raise ValueError("max_steps must be at least 1")


Strategy = Union[OnceTopDown, TopDownAll, Innermost]


def match(p: Pattern, t: Term, subst: Optional[Substitution] = None) -> Optional[Substitution]:
    """Match ``p`` against ``t``; return the substitution or ``None``.

    A metavariable binds on its first occurrence; later occurrences must be
    equal to that binding.  ``_`` matches anything and binds nothing.
    """
    s = {} if subst is None else dict(subst)
    stack = [(p, t)]
    while stack:
        pat, term = stack.pop()
        if isinstance(pat, Wildcard):
            continue
        if isinstance(pat, Metavar):
            bound = s.get(pat.name)
            if bound is None:
                s[pat.name] = term
            elif bound != term:
                return None
            continue
        if isinstance(pat, Appl):
            if (not isinstance(term, Appl) or term.label != pat.label
                    or len(term.children) != len(pat.children)):
                return None
            stack.extend(zip(pat.children, term.children))
            continue
        if pat != term:
            return None
    return s


def instantiate(p: Pattern, s: Substitution) -> Term:
    if isinstance(p, Metavar):
        try:
            return s[p.name]
        except KeyError:
            raise UnboundMetavariableError(f"metavariable {p.name} is unbound") from None
    if isinstance(p, Wildcard):
        raise WildcardOnRhsError("wildcard cannot be instantiated")
    if isinstance(p, Appl):
        return Appl(p.label, tuple(instantiate(c, s) for c in p.children))
    return p


def apply_rule(rule: RewriteRule, t: Term) -> Optional[Term]:
    s = match(rule.lhs, t)
    return None if s is None else instantiate(rule.rhs, s)


def _try_rules(rules, t):
    for rule in rules:
        out = apply_rule(rule, t)
        if out is not None:
            return rule, out
    return None, None


def rewrite(t: Term, rules: Sequence[RewriteRule],
            strategy: Strategy = TopDownAll()) -> tuple[Term, list]:
    """Rewrite ``t``; return the result and a trace of ``(rule name, path)``.

    Trace paths refer to the term as it stood when each rule fired, so
    replaying the trace in order reproduces the result.
    """
    trace: list[tuple[str, tuple]] = []
    if isinstance(strategy, OnceTopDown):
        for path, node in preorder(t):
            rule, out = _try_rules(rules, node)
            if rule is not None:
                trace.append((rule.name, path))
                return replace_at(t, path, out), trace
        return t, trace

    if isinstance(strategy, TopDownAll):
        def walk(node, path):
            rule, out = _try_rules(rules, node)
            if rule is not None:
                trace.append((rule.name, path))
                node = out
            if isinstance(node, Appl) and node.children:
                kids = tuple(walk(c, path + (i,)) for i, c in enumerate(node.children))
                node = Appl(node.label, kids)
            return node
        return walk(t, ()), trace

    if isinstance(strategy, Innermost):
        steps = 0
        while True:
            found = _innermost_redex(t, rules)
            if found is None:
                return t, trace
            if steps >= strategy.max_steps:
                raise StepLimitExceeded(
                    f"innermost rewriting exceeded {strategy.max_steps} steps")
            path, rule, out = found
            t = replace_at(t, path, out)
            trace.append((rule.name, path))
            steps += 1

    raise TypeError(f"unknown strategy {strategy!r}")


def _innermost_redex(t, rules):
    """Leftmost-innermost redex: first node in postorder where a rule applies."""
    stack = [((), t, False)]
    while stack:
        path, node, expanded = stack.pop()
        if expanded:
            rule, out = _try_rules(rules, node)
            if rule is not None:
                return path, rule, out
            continue
        stack.append((path, node, True))
        kids = children_of(node)
        for i in range(len(kids) - 1, -1, -1):
            stack.append((path + (i,), kids[i], False))
    return None


def replay(t: Term, rules: Sequence[RewriteRule], trace) -> Term:
    by_name = {r.name: r for r in rules}
    for name, path in trace:
        out = apply_rule(by_name[name], subterm_at(t, path))
        if out is None:
            raise ValueError(f"rule {name} does not apply at {list(path)}")
        t = replace_at(t, path, out)
    return t
