"""Weaving a pair of edit trees into one change tree.

The pairing of child lists follows a fixed nine-case table, tried strictly
in order; case 3 (two deletes) must win over cases 6/7 so that a replaced
child shows up as a single :class:`Mismatch` rather than two holes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .diff import EditOp, ELeaf, ENode, EditTree
from .exceptions import WeaveIntegrityError
from .term import Head, Pattern, Side, print_term, rebuild

__all__ = [
    "WNode", "WLeaf", "WeaveTree", "Match", "Mismatch", "LeftHole", "RightHole",
    "WeavePoint", "Side", "WEAVE_ROOT", "weave", "weave_children", "project",
    "change_points", "has_changes", "term_path", "weave_report",
]

# Synthetic root used when the two input roots are incomparable.
WEAVE_ROOT = "@weave"


@dataclass(frozen=True)
class WNode:
    label: Head
    points: tuple = ()
    # set only when a comparable-but-unequal label was paired
    post_label: Optional[Head] = None


@dataclass(frozen=True)
class WLeaf:
    tree: Pattern


WeaveTree = Union[WNode, WLeaf]


@dataclass(frozen=True)
class Match:
    subtree: WeaveTree


@dataclass(frozen=True)
class Mismatch:
    left: WLeaf
    right: WLeaf


@dataclass(frozen=True)
class LeftHole:
    """Present only on the right (after) side."""

    subtree: WLeaf


@dataclass(frozen=True)
class RightHole:
    """Present only on the left (before) side."""

    subtree: WLeaf


WeavePoint = Union[Match, Mismatch, LeftHole, RightHole]


def weave(pre: EditTree, post: EditTree) -> WeaveTree:
    if isinstance(pre, ENode) and isinstance(post, ENode):
        return _weave_nodes(pre, post)
    if isinstance(pre, ELeaf) and isinstance(post, ELeaf):
        return WNode(WEAVE_ROOT, (Mismatch(WLeaf(pre.tree), WLeaf(post.tree)),))
    raise WeaveIntegrityError("Keep without partner at the root")


def _weave_nodes(pre: ENode, post: ENode) -> WNode:
    post_label = None if post.label == pre.label else post.label
    return WNode(pre.label, tuple(weave_children(pre.children, post.children)), post_label)


def weave_children(left, right) -> list:
    """Weave two ``(EditOp, EditTree)`` child lists per the pairing table."""
    out = []
    i = j = 0
    nl, nr = len(left), len(right)
    while True:
        l_op = left[i][0] if i < nl else None
        r_op = right[j][0] if j < nr else None
        if l_op is None and r_op is None:                                   # 1
            return out
        if l_op is EditOp.KEEP and r_op is EditOp.KEEP:                     # 2
            out.append(Match(_weave_nodes(left[i][1], right[j][1])))
            i += 1
            j += 1
        elif l_op is EditOp.DELETE and r_op is EditOp.DELETE:               # 3
            out.append(Mismatch(_leaf(left[i][1]), _leaf(right[j][1])))
            i += 1
            j += 1
        elif l_op is EditOp.DELETE and r_op is None:                        # 4
            out.append(RightHole(_leaf(left[i][1])))
            i += 1
        elif l_op is None and r_op is EditOp.DELETE:                        # 5
            out.append(LeftHole(_leaf(right[j][1])))
            j += 1
        elif l_op is EditOp.DELETE:                                         # 6
            out.append(RightHole(_leaf(left[i][1])))
            i += 1
        elif r_op is EditOp.DELETE:                                         # 7
            out.append(LeftHole(_leaf(right[j][1])))
            j += 1
        else:                                                               # 8, 9
            raise WeaveIntegrityError("Keep without partner")


def _leaf(e: EditTree) -> WLeaf:
    if not isinstance(e, ELeaf):
        raise WeaveIntegrityError("Delete-tagged child is not an edit leaf")
    return WLeaf(e.tree)


def project(w, side: Side) -> Optional[Pattern]:
    """Reconstruct one side from a weave tree or a single weave point.

    Returns ``None`` for a hole viewed from the side where it is absent.
    """
    if isinstance(w, WLeaf):
        return w.tree
    if isinstance(w, WNode):
        if w.label == WEAVE_ROOT:
            return project(w.points[0], side)
        label = w.post_label if side is Side.RIGHT and w.post_label is not None else w.label
        kids = [project(p, side) for p in w.points]
        return rebuild(label, [k for k in kids if k is not None])
    if isinstance(w, Match):
        return project(w.subtree, side)
    if isinstance(w, Mismatch):
        return (w.left if side is Side.LEFT else w.right).tree
    if isinstance(w, RightHole):
        return w.subtree.tree if side is Side.LEFT else None
    if isinstance(w, LeftHole):
        return w.subtree.tree if side is Side.RIGHT else None
    raise TypeError(f"not a weave tree or point: {w!r}")


def term_path(w: WeaveTree, path, side: Side) -> tuple:
    """Translate a weave-point path into a child-index path on one side.

    Holes occupy a point slot but no child slot on the side they are absent
    from, so indices shift after them.
    """
    present = (Match, Mismatch, RightHole) if side is Side.LEFT else (Match, Mismatch, LeftHole)
    out = []
    node = w
    for i in path:
        if node.label == WEAVE_ROOT:
            node = node.points[i]
            continue
        p = node.points[i]
        if not isinstance(p, present):
            raise ValueError(f"point {i} is absent on the {side.value} side")
        out.append(sum(isinstance(q, present) for q in node.points[:i]))
        node = p.subtree if isinstance(p, Match) else p
    return tuple(out)


_KIND = {Mismatch: "Mismatch", LeftHole: "LeftHole", RightHole: "RightHole"}


def _walk(w: WeaveTree, path=()) -> Iterator[tuple[tuple, WeavePoint]]:
    if not isinstance(w, WNode):
        return
    for i, p in enumerate(w.points):
        yield path + (i,), p
        if isinstance(p, Match):
            yield from _walk(p.subtree, path + (i,))


def change_points(w: WeaveTree) -> list[tuple[tuple, str]]:
    """Preorder ``(path, kind)`` for every non-Match point."""
    return [(path, _KIND[type(p)]) for path, p in _walk(w) if not isinstance(p, Match)]


def has_changes(w) -> bool:
    if isinstance(w, (Mismatch, LeftHole, RightHole)):
        return True
    if isinstance(w, Match):
        w = w.subtree
    return any(True for _, p in _walk(w) if not isinstance(p, Match))


def _label_text(label: Head) -> str:
    return label if isinstance(label, str) else print_term(label)


def weave_report(w: WeaveTree, indent: str = "  ") -> str:
    """Human-readable rendering: one line per point, indented by depth."""
    if not has_changes(w):
        return "NO CHANGES\n"
    lines = []

    def node_text(n: WeaveTree):
        if isinstance(n, WLeaf):
            return print_term(n.tree)
        text = _label_text(n.label)
        if n.post_label is not None:
            text += " ~ " + _label_text(n.post_label)
        return text

    def emit(n: WNode, depth):
        for p in n.points:
            pad = indent * depth
            if isinstance(p, Match):
                lines.append(f"{pad}MATCH {node_text(p.subtree)}")
                if isinstance(p.subtree, WNode):
                    emit(p.subtree, depth + 1)
            elif isinstance(p, Mismatch):
                lines.append(f"{pad}MISMATCH {print_term(p.left.tree)} -> {print_term(p.right.tree)}")
            elif isinstance(p, LeftHole):
                lines.append(f"{pad}LHOLE {print_term(p.subtree.tree)}")
            else:
                lines.append(f"{pad}RHOLE {print_term(p.subtree.tree)}")

    if w.label == WEAVE_ROOT:
        emit(w, 0)
    else:
        lines.append(f"MATCH {node_text(w)}")
        emit(w, 1)
    return "\n".join(lines) + "\n"
