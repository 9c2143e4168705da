"""Exception hierarchy.  Each class carries the CLI exit code it maps to."""


class RedclassError(Exception):
    exit_code = 1


class ParseError(RedclassError, ValueError):
    """Malformed textual input (group, type string, weight, action)."""

    exit_code = 1

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            message = f"{message}\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class ValidationError(RedclassError, ValueError):
    """Structurally invalid data, e.g. a non-associative table or bad lattice."""

    exit_code = 1


class PreconditionError(RedclassError, ValueError):
    exit_code = 1


class ScopeError(RedclassError):
    """Input the toolkit deliberately does not handle (e.g. a central torus)."""

    exit_code = 2


class CapExceeded(RedclassError):
    exit_code = 3

    def __init__(self, cap, value, hint=""):
        self.cap = cap
        self.value = value
        msg = f"size cap '{cap}' exceeded ({value})"
        if hint:
            msg += f"; {hint}"
        super().__init__(msg)


class ConsistencyError(RedclassError):
    """Two independent computations disagreed.  Always a bug."""

    exit_code = 4
