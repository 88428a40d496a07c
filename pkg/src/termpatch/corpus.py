"""Bundled example pairs."""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .config import Config, parse_config
from .term import Term, parse_term

__all__ = ["Fixture", "FIXTURE_NAMES", "load_fixture", "fixture_path"]

FIXTURE_NAMES = ("distributive", "add_argument")


@dataclass(frozen=True)
class Fixture:
    name: str
    before: Term
    after: Term
    config: Config
    config_text: str


def fixture_path(name: str, kind: str):
    """Path to ``<name>.before.aterm``, ``<name>.after.aterm`` or ``<name>.conf``."""
    filename = f"{name}.conf" if kind == "conf" else f"{name}.{kind}.aterm"
    return resources.files("termpatch") / "fixtures" / filename


def load_fixture(name: str) -> Fixture:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}")
    read = lambda kind: fixture_path(name, kind).read_text(encoding="utf-8")
    conf = read("conf")
    return Fixture(name, parse_term(read("before")), parse_term(read("after")),
                   parse_config(conf), conf)
