"""Exception types shared across the package."""


class MindegError(Exception):
    """Base class for all package-specific errors."""


class InadmissibleRankError(MindegError, ValueError):
    """Requested a simple type outside the admissible rank range."""


class MixedRootSystemError(MindegError, ValueError):
    """Operands belong to different root systems."""


class NotApplicableError(MindegError):
    """A check's precondition does not hold for this input."""


class NotMinimalDegreeError(MindegError, ValueError):
    """The degree is not a minimal degree, but the operation requires one."""


class BoundViolationError(MindegError, RuntimeError):
    """The enumeration bound heuristic failed (a minimal degree escaped it)."""


class UniquenessViolationError(MindegError, RuntimeError):
    """An object asserted to be unique is missing or not unique."""


class LiftingNotFoundError(MindegError, RuntimeError):
    """No full-flag minimal degree matches the required Weyl element."""


class LiftingNotUniqueError(MindegError, RuntimeError):
    """More than one full-flag minimal degree matches the Weyl element."""


class RankTooLargeError(MindegError, ValueError):
    """Exhaustive enumeration requested above its supported rank."""


class ExceptionalCaseError(MindegError):
    """The unique excluded triple, where the checked bound provably fails."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceGuardError(MindegError, ValueError):
    """Sweep configuration exceeds the resource guard."""


class ConsistencyError(MindegError, RuntimeError):
    """An internal cross-check failed; indicates a defect, never recoverable."""
