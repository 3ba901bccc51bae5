"""Exceptions shared across the library."""


class UsageError(ValueError):
    """Malformed request: bad ranks, bad flags, violated preconditions."""


class PoleError(ArithmeticError):
    """A denominator factor vanished at the given parameter values."""


class NonLaurentResultError(ArithmeticError):
    """An operator application failed to clear its denominators.

    The eigenoperator preserves hyperoctahedrally invariant Laurent
    polynomials, so this signals either a bug or an asymmetric input.
    """
