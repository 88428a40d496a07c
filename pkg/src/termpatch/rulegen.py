"""Rule assembly and Stratego ``.str`` emission."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .context import ContextSpec, select_rule_sites, site_terms
from .engine import RewriteRule
from .exceptions import ArityConflictError, ClosednessError, InputError, TermSyntaxError
from .generalize import GeneralizationSpec, MetavarTable, generalize_pair, metavariables
from .term import (
    GEN_INFO_LABEL, LIST_LABEL, Appl, LocationLabels, Wildcard, parse_pattern_prefix,
    print_term, preorder,
)
from .weave import WeaveTree

__all__ = [
    "RewriteRule", "Signature", "build_rules", "check_rule", "infer_signature",
    "emit_str", "parse_str", "MODULE_NAME",
]

MODULE_NAME = "generated-rules"


@dataclass(frozen=True)
class Signature:
    constructors: frozenset = field(default_factory=lambda: frozenset({(GEN_INFO_LABEL, 0)}))

    def arity(self, name):
        for n, k in self.constructors:
            if n == name:
                return k
        raise KeyError(name)


def check_rule(rule: RewriteRule) -> None:
    """Raise if the rule's right-hand side is not closed over its left."""
    free = metavariables(rule.rhs) - metavariables(rule.lhs)
    if free:
        raise ClosednessError(
            f"rule {rule.name}: right-hand side metavariables {sorted(free)} "
            "do not occur on the left-hand side")
    if any(isinstance(node, Wildcard) for _, node in preorder(rule.rhs)):
        raise ClosednessError(f"rule {rule.name}: wildcard on right-hand side")


def build_rules(w: WeaveTree, spec: GeneralizationSpec = GeneralizationSpec(),
                ctx: ContextSpec = ContextSpec(),
                loc: LocationLabels = LocationLabels()) -> list[RewriteRule]:
    rules = []
    for k, site in enumerate(select_rule_sites(w, ctx), start=1):
        before, after = site_terms(site)
        lhs, rhs = generalize_pair(before, after, spec, loc, MetavarTable())
        rule = RewriteRule(f"R{k}", lhs, rhs)
        check_rule(rule)
        rules.append(rule)
    return rules


def infer_signature(terms: Iterable) -> Signature:
    seen = {GEN_INFO_LABEL: 0}
    for t in terms:
        for _, node in preorder(t):
            if not isinstance(node, Appl) or node.label == LIST_LABEL:
                continue
            arity = len(node.children)
            prev = seen.setdefault(node.label, arity)
            if prev != arity:
                raise ArityConflictError(
                    f"constructor {node.label!r} used with arities {prev} and {arity}")
    return Signature(frozenset(seen.items()))


def _constructor_line(name, arity):
    if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
        name = print_term(Appl(name))[:-2]
    if arity == 0:
        return f"    {name} : Term"
    return f"    {name} : {' * '.join(['Term'] * arity)} -> Term"


def emit_str(rules: Iterable[RewriteRule], sig: Signature) -> str:
    lines = [
        f"module {MODULE_NAME}",
        "",
        "signature",
        "  sorts Term",
        "  constructors",
    ]
    for name, arity in sorted(sig.constructors):
        lines.append(_constructor_line(name, arity))
    lines += ["", "rules"]
    for rule in rules:
        lines.append(f"  {rule.name} : {print_term(rule.lhs)} -> {print_term(rule.rhs)}")
    return "\n".join(lines) + "\n"


_RULE_HEAD = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_\-']*)\s*:\s*")


def parse_str(text: str) -> list[RewriteRule]:
    """Read back the rules block of an emitted ``.str`` file.

    Rules may span several lines; each starts with ``Name :`` and has its two
    sides separated by a top-level ``->``.
    """
    m = re.search(r"^rules[ \t]*$", text, flags=re.MULTILINE)
    if m is None:
        raise InputError("no 'rules' section found")
    pos = m.end()
    rules = []
    while True:
        while pos < len(text) and text[pos] in " \t\r\n":
            pos += 1
        if pos >= len(text):
            return rules
        head = _RULE_HEAD.match(text, pos)
        if head is None:
            _syntax_error(text, pos, "expected 'Name :' at start of rule")
        lhs, pos = parse_pattern_prefix(text, head.end())
        if not text.startswith("->", pos):
            _syntax_error(text, pos, "expected '->' between rule sides")
        rhs, pos = parse_pattern_prefix(text, pos + 2)
        rule = RewriteRule(head.group(1), lhs, rhs)
        check_rule(rule)
        rules.append(rule)


def _syntax_error(text, pos, message):
    line = text.count("\n", 0, pos) + 1
    column = pos - (text.rfind("\n", 0, pos) + 1) + 1
    raise TermSyntaxError(message, line, column)
