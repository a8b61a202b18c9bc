"""Exception types shared by the library and the experiment CLI.

The CLI maps these onto process exit codes (see ``harness.cli``).
"""


class RandPolyError(Exception):
    """Base class for all library errors."""


class UsageError(RandPolyError, ValueError):
    """An operation was called outside its precondition."""


class ConfigError(UsageError):
    """An experiment configuration is malformed or incomplete."""


class CapacityError(RandPolyError):
    """A request exceeds a documented size cap (enumeration, oracle, ...)."""


class InvariantViolation(RandPolyError, AssertionError):
    """An internal consistency check failed; results must not be trusted."""


class PrecisionError(RandPolyError):
    """Floating-point root recombination could not decide at the allowed precision."""
