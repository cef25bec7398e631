"""Exception types raised by the qsf library."""


class QsfError(Exception):
    """Base class for all qsf errors."""


class InvalidArgument(QsfError, ValueError):
    """An argument is outside the supported domain."""


class NonConvergent(QsfError, RuntimeError):
    """A series/product would need more terms than the context cap allows."""


class Overflow(QsfError, OverflowError):
    """A result exceeds the representable floating-point range."""


class BracketFailure(QsfError, RuntimeError):
    """A root bracket lost its sign change; signals an evaluation bug."""


class UnknownCheck(QsfError, KeyError):
    """A catalog check id does not exist."""


class DomainViolation(QsfError, ValueError):
    """Parameters fall outside a catalog entry's declared domain."""
