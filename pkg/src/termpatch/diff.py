"""Top-down structural difference of two terms.

Follows Yang's syntactic diff: two nodes can be paired only if their
parents are paired and their labels are comparable, and paired siblings keep
their left-to-right order.  The number of paired nodes is maximized with an
order-preserving alignment DP over child sequences, memoized over node
pairs.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Union

from .term import Head, Pattern, children_of, head, rebuild

__all__ = [
    "EditOp", "ENode", "ELeaf", "EditTree", "CompSpec", "DiffResult",
    "comparable", "diff", "erase", "keep_count",
]


class EditOp(enum.Enum):
    KEEP = "Keep"
    DELETE = "Delete"


@dataclass(frozen=True)
class ENode:
    label: Head
    children: tuple = ()  # of (EditOp, EditTree)


@dataclass(frozen=True)
class ELeaf:
    tree: Pattern


EditTree = Union[ENode, ELeaf]


@dataclass(frozen=True)
class CompSpec:
    """Equivalence classes of interchangeable labels.

    Labels not listed in any class are comparable only to themselves.
    """

    classes: tuple = ()
    _index: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        classes = tuple(frozenset(c) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        for i, cls in enumerate(classes):
            for label in cls:
                if label in self._index:
                    raise ValueError(f"label {label!r} appears in two comparable classes")
                self._index[label] = i

    def class_of(self, label):
        return self._index.get(label)


def comparable(a: Head, b: Head, spec: CompSpec = CompSpec()) -> bool:
    if a == b:
        return True
    if not (isinstance(a, str) and isinstance(b, str)):
        # leaves compare by variant and value only
        return False
    ca = spec.class_of(a)
    return ca is not None and ca == spec.class_of(b)


@dataclass(frozen=True)
class DiffResult:
    pre: EditTree
    post: EditTree
    matched: int
    distance: int


class _Indexed:
    """Preorder numbering of a term with child index lists."""

    def __init__(self, t):
        self.nodes = []
        self.kids = []
        stack = [(t, None)]
        while stack:
            node, parent = stack.pop()
            idx = len(self.nodes)
            self.nodes.append(node)
            self.kids.append([])
            if parent is not None:
                self.kids[parent].append(idx)
            for c in reversed(children_of(node)):
                stack.append((c, idx))
        self.heads = [head(n) for n in self.nodes]


def diff(t1: Pattern, t2: Pattern, spec: CompSpec = CompSpec()) -> DiffResult:
    a, b = _Indexed(t1), _Indexed(t2)
    memo: dict[tuple[int, int], int] = {}

    def sim(i, j):
        key = (i, j)
        got = memo.get(key)
        if got is None:
            if not comparable(a.heads[i], b.heads[j], spec):
                got = 0
            else:
                got = 1 + _align(a.kids[i], b.kids[j], sim)[0][0]
            memo[key] = got
        return got

    def build(i, j):
        """Edit trees for a paired node pair (i, j)."""
        ci, dj = a.kids[i], b.kids[j]
        table = _align(ci, dj, sim)
        pre_kids, post_kids = [], []
        x = y = 0
        m, n = len(ci), len(dj)
        while x < m or y < n:
            if x < m and y < n:
                s = sim(ci[x], dj[y])
                if s and table[x][y] == table[x + 1][y + 1] + s:
                    l, r = build(ci[x], dj[y])
                    pre_kids.append((EditOp.KEEP, l))
                    post_kids.append((EditOp.KEEP, r))
                    x += 1
                    y += 1
                    continue
                if table[x][y] == table[x + 1][y]:
                    pre_kids.append((EditOp.DELETE, ELeaf(a.nodes[ci[x]])))
                    x += 1
                else:
                    post_kids.append((EditOp.DELETE, ELeaf(b.nodes[dj[y]])))
                    y += 1
            elif x < m:
                pre_kids.append((EditOp.DELETE, ELeaf(a.nodes[ci[x]])))
                x += 1
            else:
                post_kids.append((EditOp.DELETE, ELeaf(b.nodes[dj[y]])))
                y += 1
        return (ENode(a.heads[i], tuple(pre_kids)),
                ENode(b.heads[j], tuple(post_kids)))

    matched = sim(0, 0)
    if matched:
        pre, post = build(0, 0)
    else:
        pre, post = ELeaf(t1), ELeaf(t2)
    distance = len(a.nodes) + len(b.nodes) - 2 * matched
    return DiffResult(pre, post, matched, distance)


def _align(ci, dj, sim):
    """Suffix alignment table: ``T[x][y]`` is the best score of ci[x:] vs dj[y:]."""
    m, n = len(ci), len(dj)
    table = [[0] * (n + 1) for _ in range(m + 1)]
    for x in range(m - 1, -1, -1):
        row, below = table[x], table[x + 1]
        cx = ci[x]
        for y in range(n - 1, -1, -1):
            best = below[y]
            if row[y + 1] > best:
                best = row[y + 1]
            diag = below[y + 1] + sim(cx, dj[y])
            if diag > best:
                best = diag
            row[y] = best
    return table


def erase(e: EditTree) -> Pattern:
    """Drop all edit tags, recovering the original term."""
    if isinstance(e, ELeaf):
        return e.tree
    return rebuild(e.label, [erase(child) for _, child in e.children])


def keep_count(e: EditTree) -> int:
    if isinstance(e, ELeaf):
        return 0
    n = 1
    stack = [e]
    while stack:
        node = stack.pop()
        for op, child in node.children:
            if op is EditOp.KEEP:
                n += 1
                stack.append(child)
    return n
