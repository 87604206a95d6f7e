"""Exception hierarchy shared by the library and the CLI.

The CLI maps these onto process exit codes: usage errors exit 1, data
errors exit 2, external tool failures exit 3.
"""


class SegcombError(Exception):
    """Base class for all toolkit errors."""


class UsageError(SegcombError):
    """The caller asked for something invalid (bad parameter, bad flag)."""


class DataError(SegcombError):
    """Input data violates a format or invariant.

    Carries an optional path and 1-based line number so file problems can
    be reported precisely.
    """

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:"
        if line is not None:
            prefix += f"{line}:"
        if prefix:
            prefix += " "
        super().__init__(prefix + message)


class ExternalToolError(SegcombError):
    """A child process misbehaved (nonzero exit, unlaunchable command)."""
