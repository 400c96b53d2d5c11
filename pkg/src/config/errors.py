# -----------------------------------------------------------------------------
# Error Types
#
# Every failure raised by the library derives from LogCorrError.
# The CLI maps parameter/configuration problems to exit status 2 and
# capacity/runtime problems to exit status 1.
# -----------------------------------------------------------------------------


class LogCorrError(Exception):
    """Base class for library errors."""


class InvalidParameterError(LogCorrError, ValueError):
    """A parameter is out of range or malformed."""


class ConfigurationError(LogCorrError, ValueError):
    """Parameters are individually valid but do not fit together."""


class CapacityError(LogCorrError):
    """A request exceeds a sieve, budget or integer-width limit."""


class EmptyMeasureError(LogCorrError):
    """A statistic needs positive total mass but the measure is empty."""
