"""Package-wide exception types."""


class CitewalkError(Exception):
    """Base class for all citewalk errors."""


class ParseError(CitewalkError, ValueError):
    """A delimited input file could not be parsed."""


class GuardExceeded(CitewalkError):
    """A size guard refused a computation that would blow up memory or time."""
