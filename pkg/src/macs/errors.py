"""Exception hierarchy shared by all macs modules."""


class MacsError(Exception):
    """Base class for all errors raised by this package."""


class NotAntichainError(MacsError):
    """A point set required to be an antichain fails the pairwise test."""


class NotStrictChainError(MacsError):
    """A point set required to be a strict chain fails the pairwise test."""


class WrongKindError(MacsError):
    """A point set does not match the requested classification kind."""


class NotStepMatrixError(MacsError):
    """A matrix passed where a step matrix is required violates the
    staircase property, or carries a non-step role tag."""


class NonCanonicalWordError(MacsError):
    """A word contains the forbidden substring ``hv`` (canonical words
    list all v moves before the h moves between consecutive d moves)."""


class LengthMismatchError(MacsError):
    """A word's letter counts do not match the grid shape it was given."""


class WrongOrientationError(MacsError):
    """A walk was decoded with an operation meant for the other
    orientation (ascending walks encode strict chains, descending walks
    encode antichains)."""


class NonIntegerStepError(MacsError):
    """The diagonal recurrence produced a bracket not divisible by m.

    The recurrence is conjectural; a non-integer step would falsify it
    and must surface as an error, never be rounded away.
    """


class MethodDisagreementError(MacsError):
    """Two counting methods disagreed on a cell they both cover."""


class TooLargeError(MacsError):
    """An exhaustive enumeration was requested beyond the size guard
    (``m1 + m2`` must not exceed the limit, default 20, overridable via
    the ``MACS_MAX_ENUM`` environment variable)."""
