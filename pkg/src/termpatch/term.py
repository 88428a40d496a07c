"""Term data model and the plain textual aterm format.

A term is an immutable labeled ordered tree.  Lists are ordinary
applications carrying the reserved label ``@list`` so every tree algorithm
can treat them uniformly; they print as ``[...]``.

Patterns reuse the same classes plus two extra leaves, :class:`Metavar`
(printed bare, ``T_3``) and :class:`Wildcard` (printed ``_``).
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .exceptions import TermSyntaxError

__all__ = [
    "Appl", "Str", "Int", "Metavar", "Wildcard", "Term", "Pattern",
    "LIST_LABEL", "GEN_INFO", "LocationLabels", "Side",
    "List", "gen_info", "head", "rebuild", "children_of", "node_count",
    "preorder", "subterm_at", "replace_at",
    "parse_term", "parse_pattern", "print_term", "normalize_locations",
    "terms_equal",
]

LIST_LABEL = "@list"
GEN_INFO_LABEL = "gen_info"

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_METAVAR = re.compile(r"T_[0-9]+")


@dataclass(frozen=True)
class Appl:
    label: str
    children: tuple = ()

    def __post_init__(self):
        if not isinstance(self.label, str) or not self.label:
            raise ValueError("application label must be nonempty text")
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))

    @property
    def is_list(self):
        return self.label == LIST_LABEL


@dataclass(frozen=True)
class Str:
    value: str


@dataclass(frozen=True)
class Int:
    value: int

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise TypeError("Int holds a Python int")


@dataclass(frozen=True)
class Metavar:
    name: str


@dataclass(frozen=True)
class Wildcard:
    pass


Term = Union[Appl, Str, Int]
Pattern = Union[Appl, Str, Int, Metavar, Wildcard]
# Head of a node: the label for applications, the leaf itself otherwise.
Head = Union[str, Str, Int, Metavar, Wildcard]

GEN_INFO = Appl(GEN_INFO_LABEL)


def List(children: Sequence = ()) -> Appl:
    return Appl(LIST_LABEL, tuple(children))


def gen_info() -> Appl:
    return GEN_INFO


class Side(enum.Enum):
    """Before (left) or after (right) side of a change."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class LocationLabels:
    """Labels whose subterms carry source locations."""

    labels: frozenset = frozenset({"file_info"})

    def __post_init__(self):
        object.__setattr__(self, "labels", frozenset(self.labels))
        if not self.labels:
            raise ValueError("at least one location label is required")

    def __contains__(self, label):
        return label in self.labels


# ---------------------------------------------------------------------------
# structural helpers
# ---------------------------------------------------------------------------

def head(t: Pattern) -> Head:
    return t.label if isinstance(t, Appl) else t


def children_of(t: Pattern) -> tuple:
    return t.children if isinstance(t, Appl) else ()


def rebuild(h: Head, children: Sequence = ()) -> Pattern:
    if isinstance(h, str):
        return Appl(h, tuple(children))
    if children:
        raise ValueError(f"leaf {h!r} cannot have children")
    return h


def node_count(t: Pattern) -> int:
    n = 0
    stack = [t]
    while stack:
        node = stack.pop()
        n += 1
        stack.extend(children_of(node))
    return n


def preorder(t: Pattern) -> Iterator[tuple[tuple, Pattern]]:
    """Yield ``(path, subterm)`` in preorder; paths are child-index tuples."""
    stack = [((), t)]
    while stack:
        path, node = stack.pop()
        yield path, node
        kids = children_of(node)
        for i in range(len(kids) - 1, -1, -1):
            stack.append((path + (i,), kids[i]))


def subterm_at(t: Pattern, path: Sequence[int]) -> Pattern:
    for i in path:
        t = children_of(t)[i]
    return t


def replace_at(t: Pattern, path: Sequence[int], new: Pattern) -> Pattern:
    if not path:
        return new
    i, rest = path[0], path[1:]
    kids = list(children_of(t))
    kids[i] = replace_at(kids[i], rest, new)
    return Appl(t.label, tuple(kids))


def terms_equal(a: Pattern, b: Pattern) -> bool:
    return a == b


def normalize_locations(t: Pattern, loc: LocationLabels = LocationLabels()) -> Pattern:
    """Replace every maximal location-labeled subterm with ``gen_info()``."""
    if not isinstance(t, Appl):
        return t
    if t.label in loc:
        return GEN_INFO
    kids = tuple(normalize_locations(c, loc) for c in t.children)
    if all(k is c for k, c in zip(kids, t.children)):
        return t
    return Appl(t.label, kids)


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\t": "\\t"}
_UNESCAPES = {"\\": "\\", '"': '"', "n": "\n", "t": "\t"}


def _quote(text: str) -> str:
    return '"' + "".join(_ESCAPES.get(ch, ch) for ch in text) + '"'


def _print_label(label: str) -> str:
    return label if _IDENT.fullmatch(label) else _quote(label)


def print_term(t: Pattern) -> str:
    """Canonical aterm rendering with no whitespace."""
    out: list[str] = []
    _emit(t, out)
    return "".join(out)


def _emit(t, out):
    if isinstance(t, Appl):
        if t.is_list:
            out.append("[")
            close = "]"
        else:
            out.append(_print_label(t.label))
            out.append("(")
            close = ")"
        for i, c in enumerate(t.children):
            if i:
                out.append(",")
            _emit(c, out)
        out.append(close)
    elif isinstance(t, Str):
        out.append(_quote(t.value))
    elif isinstance(t, Int):
        out.append(str(t.value))
    elif isinstance(t, Metavar):
        out.append(t.name)
    elif isinstance(t, Wildcard):
        out.append("_")
    else:
        raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, patterns: bool):
        self.text = text
        self.pos = 0
        self.patterns = patterns

    def error(self, message, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        column = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        raise TermSyntaxError(message, line, column)

    def skip_ws(self):
        text, pos = self.text, self.pos
        while pos < len(text) and text[pos] in " \t\r\n":
            pos += 1
        self.pos = pos

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def term(self):
        ch = self.peek()
        start = self.pos
        if ch == "[":
            self.pos += 1
            return List(self.sequence("]"))
        if ch == '"':
            text = self.string()
            if self.peek() == "(":
                if text == LIST_LABEL:
                    self.error(f"label {LIST_LABEL!r} is reserved", start)
                if not text:
                    self.error("empty label", start)
                self.pos += 1
                return Appl(text, tuple(self.sequence(")")))
            return Str(text)
        if ch == "-" or ch.isdigit():
            return self.integer()
        if ch == "{":
            self.error("aterm annotations are not supported")
        m = _IDENT.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            name = m.group()
            if self.peek() == "(":
                self.pos += 1
                return Appl(name, tuple(self.sequence(")")))
            if self.patterns and name == "_":
                return Wildcard()
            if self.patterns and _METAVAR.fullmatch(name):
                return Metavar(name)
            self.error(f"expected '(' after label {name!r}")
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected character {ch!r}")

    def sequence(self, close):
        items = []
        if self.peek() == close:
            self.pos += 1
            return items
        while True:
            items.append(self.term())
            ch = self.peek()
            if ch == ",":
                self.pos += 1
            elif ch == close:
                self.pos += 1
                return items
            elif not ch:
                self.error(f"unbalanced: missing {close!r}")
            else:
                self.error(f"expected ',' or {close!r}, found {ch!r}")

    def string(self):
        start = self.pos
        self.pos += 1
        buf = []
        text = self.text
        while True:
            if self.pos >= len(text):
                self.error("unterminated string", start)
            ch = text[self.pos]
            if ch == '"':
                self.pos += 1
                return "".join(buf)
            if ch == "\\":
                esc = text[self.pos + 1:self.pos + 2]
                if esc not in _UNESCAPES:
                    self.error(f"invalid escape \\{esc}")
                buf.append(_UNESCAPES[esc])
                self.pos += 2
            else:
                buf.append(ch)
                self.pos += 1

    def integer(self):
        m = re.compile(r"-?[0-9]+").match(self.text, self.pos)
        if not m:
            self.error("malformed integer")
        self.pos = m.end()
        return Int(int(m.group()))

    def finish(self):
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("trailing characters after term")


def parse_term(text: str) -> Term:
    """Parse aterm text.  Raises :class:`TermSyntaxError` on malformed input."""
    p = _Parser(text, patterns=False)
    t = p.term()
    p.finish()
    return t


def parse_pattern(text: str) -> Pattern:
    """Parse a pattern: aterm text plus bare ``T_<k>`` metavariables and ``_``."""
    p = _Parser(text, patterns=True)
    t = p.term()
    p.finish()
    return t


def parse_pattern_prefix(text: str, pos: int = 0) -> tuple[Pattern, int]:
    """Parse one pattern starting at ``pos``; return it and the end offset."""
    p = _Parser(text, patterns=True)
    p.pos = pos
    t = p.term()
    p.skip_ws()
    return t, p.pos
