"""Line-oriented configuration of the inference parameters.

::

    # comments start with '#'
    generalize roots=multiply_op,add_op replace=var_ref_exp,binary_op_annotation
    context function_call_exp,variable_declaration_list
    locations file_info
    comparable add_op,subtract_op

``generalize`` and ``comparable`` may repeat; ``generalize`` lines keep their
file order.  ``context`` and ``locations`` may appear at most once.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .context import ContextSpec
from .diff import CompSpec
from .exceptions import ConfigError
from .generalize import GeneralizationSpec, GeneralizationStep
from .term import LocationLabels

__all__ = ["Config", "parse_config"]

_LABEL = re.compile(r"[^\s,=#]+")


@dataclass(frozen=True)
class Config:
    generalization: GeneralizationSpec = field(default_factory=GeneralizationSpec)
    context: ContextSpec = field(default_factory=ContextSpec)
    locations: LocationLabels = field(default_factory=LocationLabels)
    comparable: CompSpec = field(default_factory=CompSpec)


def _labels(text, lineno):
    items = text.split(",")
    if not all(_LABEL.fullmatch(item) for item in items):
        raise ConfigError(f"line {lineno}: malformed label list {text!r}")
    return frozenset(items)


def _generalize(args, lineno):
    fields = {}
    for arg in args:
        key, sep, value = arg.partition("=")
        if not sep or key not in ("roots", "replace") or key in fields:
            raise ConfigError(f"line {lineno}: expected roots=<labels> replace=<labels>, got {arg!r}")
        fields[key] = _labels(value, lineno)
    if set(fields) != {"roots", "replace"}:
        raise ConfigError(f"line {lineno}: generalize needs both roots= and replace=")
    return GeneralizationStep(fields["roots"], fields["replace"])


def parse_config(text: str) -> Config:
    steps = []
    classes = []
    context = locations = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        directive, *args = line.split()
        if directive == "generalize":
            steps.append(_generalize(args, lineno))
            continue
        if directive not in ("context", "locations", "comparable"):
            raise ConfigError(f"line {lineno}: unknown directive {directive!r}")
        if len(args) != 1:
            raise ConfigError(f"line {lineno}: {directive} takes one comma-separated label list")
        labels = _labels(args[0], lineno)
        if directive == "comparable":
            classes.append(labels)
        elif directive == "context":
            if context is not None:
                raise ConfigError(f"line {lineno}: duplicate 'context' directive")
            context = labels
        else:
            if locations is not None:
                raise ConfigError(f"line {lineno}: duplicate 'locations' directive")
            locations = labels

    try:
        comparable = CompSpec(tuple(classes))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return Config(
        generalization=GeneralizationSpec(tuple(steps)),
        context=ContextSpec(context or frozenset()),
        locations=LocationLabels(locations) if locations else LocationLabels(),
        comparable=comparable,
    )
