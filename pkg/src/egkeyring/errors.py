"""Exception hierarchy shared by every module of the package."""


class KeyringError(Exception):
    """Base class for all errors raised by egkeyring."""


class GraphInputError(KeyringError, ValueError):
    """Malformed graph input: self-loop, duplicate edge, bad vertex id, bad file."""


class PreconditionError(KeyringError, ValueError):
    """A mathematical precondition of an operation does not hold."""


class NotDenseError(PreconditionError):
    """The graph does not satisfy 2e > (k-1)n."""


class ParameterRangeError(PreconditionError):
    """k or r lies outside the range an operation supports."""


class SearchBudgetExceeded(KeyringError):
    """An exact search hit its node-expansion cap before deciding.

    Distinct from "not found": absence is only ever reported after an
    exhaustive search.
    """


class InternalInvariantError(KeyringError, AssertionError):
    """An invariant the construction guarantees has been violated (a bug)."""
