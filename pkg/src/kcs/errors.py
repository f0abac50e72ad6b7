"""Exception hierarchy shared by every kcs module."""


class KcsError(Exception):
    """Base class for all errors raised by kcs."""


class ValidationError(KcsError, ValueError):
    """An object failed one of its construction invariants."""


class RingMismatchError(ValidationError):
    pass


class DegreeError(ValidationError):
    """A matrix entry is not homogeneous of the degree its position requires."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class CurvatureError(ValidationError):
    """D^2 differs from w*Id, or two curvatures that must agree do not."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class InvariantError(ValidationError):
    """A dg E-module identity fails; `invariant` names it, `index` locates it."""

    def __init__(self, message, invariant=None, index=None):
        super().__init__(message)
        self.invariant = invariant
        self.index = index


class NotACycleError(ValidationError):
    pass


class UnsupportedError(KcsError):
    """The request is outside what the kernel can decide (e.g. base variables
    present where only a base field is allowed)."""


class GroebnerLimitError(KcsError):
    """Buchberger exceeded the configured number of S-pair reductions."""


class SchemaError(KcsError, ValueError):
    """Malformed or wrong-version JSON document."""


class ScriptError(KcsError):
    """Parse or static-check failure in a kcs script; carries a position."""

    def __init__(self, message, line=None, column=None, expected=None):
        self.message = message
        self.line = line
        self.column = column
        self.expected = sorted(expected) if expected else []
        where = f"{line}:{column}: " if line is not None else ""
        super().__init__(where + message)
