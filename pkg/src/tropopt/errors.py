"""Exception hierarchy shared by all tropopt modules."""


class TropicalError(Exception):
    """Base class for every error raised by tropopt."""


class DomainError(TropicalError, ValueError):
    """An argument lies outside the domain of an operation (e.g. inverse of zero)."""


class DimensionError(TropicalError, ValueError):
    """Operands have non-conforming shapes."""


class IllPosed(TropicalError):
    """The extremal problem has a zero optimal value, which is never attained."""


class NoRegularSolution(TropicalError):
    """The inequality ``A x + b <= x`` admits no regular solution."""


class CostGuard(TropicalError):
    """A brute-force oracle was asked to do more work than it allows."""


class InternalError(TropicalError, RuntimeError):
    """A postcondition that should hold for all valid inputs was violated."""


class MalformedInput(TropicalError, ValueError):
    """Serialized input does not follow the expected JSON schema."""
