"""Exception hierarchy shared by every module."""


class AmttError(Exception):
    """Base class for all library errors."""


class DimensionError(AmttError, ValueError):
    """Matrix shape does not fit the operation."""


class ContractError(AmttError, ValueError):
    """A documented precondition was violated by the caller."""


class VertexIndexError(AmttError, IndexError):
    """A vertex or row/column index lies outside 1..n."""


class DomainError(AmttError, ValueError):
    """An argument is outside the supported domain (e.g. n = 0)."""


class ResourceGuardError(AmttError, RuntimeError):
    """Exhaustive computation refused because the instance exceeds a cap."""


class InvariantError(AmttError, AssertionError):
    """An internal invariant failed. Always a bug."""
