"""Choosing where rules are rooted.

A hole (insertion or deletion) cannot stand alone as a rule; it needs an
enclosing node to anchor the pattern.  The weave is scanned top-down and the
shallowest node whose label is a label of interest and which contains a
change becomes a context site covering everything beneath it.  Mismatches
outside any context site become sites of their own.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .exceptions import UncontextualizedHoleError
from .term import Pattern, Side
from .weave import (
    WEAVE_ROOT, LeftHole, Match, Mismatch, RightHole, WNode, WeaveTree,
    has_changes, project,
)

__all__ = ["ContextSpec", "SiteKind", "RuleSite", "select_rule_sites", "site_terms"]


@dataclass(frozen=True)
class ContextSpec:
    labels: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "labels", frozenset(self.labels))


class SiteKind(enum.Enum):
    MISMATCH = "mismatch"
    CONTEXT = "context"


@dataclass(frozen=True)
class RuleSite:
    path: tuple
    subtree: Union[WeaveTree, Mismatch]
    kind: SiteKind


def select_rule_sites(w: WeaveTree, ctx: ContextSpec = ContextSpec()) -> list[RuleSite]:
    sites: list[RuleSite] = []
    if not isinstance(w, WNode):
        return sites

    def visit(node: WNode, path: tuple, ancestors: list):
        if node.label in ctx.labels and has_changes(node):
            sites.append(RuleSite(path, node, SiteKind.CONTEXT))
            return
        if node.label != WEAVE_ROOT:
            ancestors = ancestors + [node.label]
        for i, p in enumerate(node.points):
            here = path + (i,)
            if isinstance(p, Match):
                if isinstance(p.subtree, WNode):
                    visit(p.subtree, here, ancestors)
            elif isinstance(p, Mismatch):
                sites.append(RuleSite(here, p, SiteKind.MISMATCH))
            elif isinstance(p, (LeftHole, RightHole)):
                raise UncontextualizedHoleError(
                    here, [a for a in ancestors if isinstance(a, str)])

    visit(w, (), [])
    return sites


def site_terms(site: RuleSite) -> tuple[Pattern, Pattern]:
    """The concrete before/after fragments a rule is built from."""
    return project(site.subtree, Side.LEFT), project(site.subtree, Side.RIGHT)
