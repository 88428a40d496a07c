"""Metavariable introduction.

A generalization step ``(roots, replace)`` walks every subtree rooted at a
label in ``roots`` and swaps each maximal inner subtree rooted at a label in
``replace`` for a metavariable.  Steps run in their given order.  Names come
from a :class:`MetavarTable` keyed by the location-normalized subterm, so
the same operand gets the same name wherever it appears, on either side of
a rule.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .term import (
    GEN_INFO_LABEL, Appl, LocationLabels, Metavar, Pattern, Wildcard, GEN_INFO,
    Side, normalize_locations,
)

__all__ = [
    "GeneralizationStep", "GeneralizationSpec", "MetavarTable",
    "generalize_term", "generalize_pair", "metavariables",
]


@dataclass(frozen=True)
class GeneralizationStep:
    roots: frozenset
    replace: frozenset

    def __post_init__(self):
        object.__setattr__(self, "roots", frozenset(self.roots))
        object.__setattr__(self, "replace", frozenset(self.replace))
        if not self.roots or not self.replace:
            raise ValueError("generalization step needs nonempty roots and replace sets")


@dataclass(frozen=True)
class GeneralizationSpec:
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))


@dataclass
class MetavarTable:
    names: dict = field(default_factory=dict)

    @property
    def next_index(self) -> int:
        return len(self.names) + 1

    def name_for(self, key: Pattern) -> str:
        name = self.names.get(key)
        if name is None:
            name = f"T_{self.next_index}"
            self.names[key] = name
        return name


def _apply_step(t: Pattern, step: GeneralizationStep, loc, table, inside=False):
    if not isinstance(t, Appl):
        return t
    if inside and t.label in step.replace:
        return Metavar(table.name_for(normalize_locations(t, loc)))
    inside = inside or t.label in step.roots
    kids = tuple(_apply_step(c, step, loc, table, inside) for c in t.children)
    if all(k is c for k, c in zip(kids, t.children)):
        return t
    return Appl(t.label, kids)


def _replace_locations(t: Pattern, loc, side: Side):
    if not isinstance(t, Appl):
        return t
    # gen_info() is the canonical location constant, so it counts too
    if t.label in loc or (t.label == GEN_INFO_LABEL and not t.children):
        return Wildcard() if side is Side.LEFT else GEN_INFO
    kids = tuple(_replace_locations(c, loc, side) for c in t.children)
    if all(k is c for k, c in zip(kids, t.children)):
        return t
    return Appl(t.label, kids)


def generalize_term(t: Pattern, spec: GeneralizationSpec,
                    loc: LocationLabels = LocationLabels(),
                    table: MetavarTable | None = None,
                    side: Side = Side.LEFT) -> Pattern:
    if table is None:
        table = MetavarTable()
    for step in spec.steps:
        t = _apply_step(t, step, loc, table)
    return _replace_locations(t, loc, side)


def generalize_pair(left: Pattern, right: Pattern, spec: GeneralizationSpec,
                    loc: LocationLabels = LocationLabels(),
                    table: MetavarTable | None = None) -> tuple[Pattern, Pattern]:
    """Generalize a before/after pair with one shared metavariable table."""
    if table is None:
        table = MetavarTable()
    lhs = generalize_term(left, spec, loc, table, Side.LEFT)
    rhs = generalize_term(right, spec, loc, table, Side.RIGHT)
    return lhs, rhs


def metavariables(p: Pattern) -> set[str]:
    found = set()
    stack = [p]
    while stack:
        node = stack.pop()
        if isinstance(node, Metavar):
            found.add(node.name)
        elif isinstance(node, Appl):
            stack.extend(node.children)
    return found
