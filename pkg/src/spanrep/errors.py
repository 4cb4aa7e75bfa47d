"""Shared exception types."""


class PaddingError(ValueError):
    """A partition cannot be padded to the requested size."""


class NotACharacterError(ArithmeticError):
    """A class function failed to decompose with nonnegative integer
    multiplicities.  This is the main exactness tripwire: it signals a bug
    in whatever produced the traces, and is never rounded away."""


class ScaleGuardError(RuntimeError):
    """A brute-force computation was asked to run beyond the size it is
    designed for.  Raised loudly instead of thrashing."""
