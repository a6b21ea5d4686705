"""Exception hierarchy shared by all domkit modules."""


class DomkitError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DomkitError):
    """Malformed graph input; carries the 1-based offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedPatternError(DomkitError):
    """Induced-pattern search asked for a pattern above the size cap."""


class InputError(DomkitError):
    """Structurally invalid input for a construction (non-cubic, non-split, ...)."""


class ClassMismatchError(DomkitError):
    """A solver's graph-class precondition does not hold for the input."""


class ContractViolationError(DomkitError):
    """A caller-supplied object violates a documented precondition."""


class InternalInvariantError(DomkitError):
    """An invariant the algorithms rely on failed; indicates a bug."""


class GadgetWiringError(InternalInvariantError):
    """A generated reduction instance failed its structural self-checks."""


class ResourceLimitError(DomkitError):
    """A size guard, enumeration cap, or search budget was exceeded.

    Attributes carry whatever partial information is available: ``count``
    for enumeration caps, ``best_upper``/``best_lower`` for interrupted
    branch-and-bound runs.
    """

    def __init__(self, message, count=None, best_upper=None, best_lower=None):
        super().__init__(message)
        self.count = count
        self.best_upper = best_upper
        self.best_lower = best_lower
