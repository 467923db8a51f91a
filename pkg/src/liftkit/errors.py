"""Structured error types shared by every module."""


class LiftkitError(ValueError):
    """Base class.  ``kind`` is a short machine-readable tag, ``detail`` holds data."""

    kind = "error"

    def __init__(self, message, **detail):
        super().__init__(message)
        self.detail = detail


class DimensionError(LiftkitError):
    kind = "dimension-mismatch"


class InputError(LiftkitError):
    kind = "bad-input"


class NotFullDimensional(LiftkitError):
    kind = "not-full-dimensional"


class OriginNotInterior(LiftkitError):
    kind = "origin-not-interior"


class NotContained(LiftkitError):
    kind = "not-contained"


class Unbounded(LiftkitError):
    kind = "unbounded"


class Infeasible(LiftkitError):
    kind = "infeasible"


class NotPsd(LiftkitError):
    kind = "not-psd"


class ParseError(LiftkitError):
    """Input file error located at ``line`` (1-based) and ``col`` (1-based)."""

    kind = "parse"

    def __init__(self, message, line=0, col=0, source=None):
        where = f"{source or '<input>'}:{line}:{col}: "
        super().__init__(where + message, line=line, col=col)
        self.line = line
        self.col = col
