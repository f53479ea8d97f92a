"""Exception types shared across the package."""


class MatroidError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MatroidError):
    """Invalid input: malformed descriptions, bad arguments, overlapping sets."""


class UniverseMismatchError(DomainError):
    """Two element sets (or a set and a matroid) live over different ground sets."""


class PreconditionError(DomainError):
    """A documented operation precondition does not hold for the given input."""


class CapacityError(MatroidError):
    """An enumeration budget would be exceeded; fail fast instead of running forever."""


class InvariantViolation(MatroidError):
    """An internal consistency check failed.  Always a bug, never a user error."""
