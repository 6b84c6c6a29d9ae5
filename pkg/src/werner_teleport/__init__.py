"""Teleportation of entangled qubit pairs through noisy Werner channels."""
from ._kernels import BACKEND
from .errors import (
    ContractViolationError,
    ConvergenceError,
    DomainError,
    InvalidStateError,
    InvalidSubsystemError,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ContractViolationError",
    "ConvergenceError",
    "DomainError",
    "InvalidStateError",
    "InvalidSubsystemError",
    "__version__",
]
