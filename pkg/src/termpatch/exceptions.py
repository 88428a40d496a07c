"""Exception hierarchy.

Two families matter to callers: :class:`InputError` for malformed input
(term text, rule files, config) and :class:`PipelineError` for failures of
the inference or rewriting machinery on well-formed input.
"""


class TermpatchError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TermpatchError, ValueError):
    pass


class TermSyntaxError(InputError):
    """Malformed aterm or pattern text, with a 1-based position."""

    def __init__(self, message, line, column):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class ConfigError(InputError):
    pass


class PipelineError(TermpatchError):
    pass


class WeaveIntegrityError(PipelineError):
    pass


class UncontextualizedHoleError(PipelineError):
    def __init__(self, path, ancestors):
        self.path = tuple(path)
        self.ancestors = tuple(ancestors)
        labels = ", ".join(self.ancestors) or "<none>"
        super().__init__(
            f"hole at path {list(self.path)} has no context; "
            f"candidate context labels (root first): {labels}"
        )


class ClosednessError(PipelineError):
    pass


class ArityConflictError(PipelineError):
    pass


class UnboundMetavariableError(PipelineError):
    pass


class WildcardOnRhsError(PipelineError):
    pass


class StepLimitExceeded(PipelineError):
    pass
