"""Exception hierarchy shared across the package."""


class BilbiqError(Exception):
    """Base class for all errors raised by bilbiq."""


class NotInvertible(BilbiqError):
    """A scalar has no multiplicative inverse mod n."""


class DimensionMismatch(BilbiqError):
    """Vector/matrix dimensions or moduli do not agree."""


class CapacityExceeded(BilbiqError):
    """A carrier would exceed the configured size bound."""


class ShapeError(BilbiqError):
    """An operation table is not square or tables disagree in size."""


class IndexOutOfRange(BilbiqError):
    """An operation table entry is not a valid carrier index."""


class NotAntisymmetric(BilbiqError):
    """A form matrix expected to satisfy A^T = -A does not."""


class InvariantViolation(BilbiqError):
    """A bilinear spec violates its structural constraints."""


class ParseError(BilbiqError):
    """Malformed textual input (Gauss code, spec string, matrix file)."""


class UnmatchedCrossing(ParseError):
    """A crossing id lacks either its over or its under passage."""


class SignMismatch(ParseError):
    """The two passages of one crossing carry different signs."""


class UnknownLink(BilbiqError):
    """Requested built-in link name does not exist."""
