"""Exception types raised across the package."""


class WernerTeleportError(Exception):
    """Base class for all package errors."""


class InvalidSubsystemError(WernerTeleportError, ValueError):
    """A particle label is unknown to the index map."""


class ContractViolationError(WernerTeleportError, ValueError):
    """An input breaks a numerical precondition (e.g. Hermiticity)."""


class DomainError(WernerTeleportError, ValueError):
    """A scalar parameter lies outside its allowed range."""


class InvalidStateError(WernerTeleportError, ValueError):
    """A matrix is not a valid density matrix."""


class ConvergenceError(WernerTeleportError, RuntimeError):
    """The Jacobi eigensolver hit its sweep cap."""
