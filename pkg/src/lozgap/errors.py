"""Exception types shared across the package."""


class LozgapError(Exception):
    """Base class for all package errors."""


class ValidationError(LozgapError, ValueError):
    """Malformed input (bad dent set, bad slot labels, bad grid, ...)."""


class GapPlacementError(ValidationError):
    """A requested gap does not fit inside the region (or is off-lattice)."""


class SymmetryError(ValidationError):
    """A symmetry was requested for a region that does not have it."""


class ParityError(ValidationError):
    """A parity precondition was violated (alpha + beta must be even)."""


class DomainError(LozgapError, ValueError):
    """A formula was evaluated outside its mathematical domain."""


class UsageError(LozgapError, ValueError):
    """An operation was called in a way its contract forbids."""


class ResourceLimitError(LozgapError, RuntimeError):
    """A resource guard tripped; the computation was refused, not truncated."""
