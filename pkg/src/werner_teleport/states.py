"""State constructors and the two-qubit Bloch/correlation-tensor representation."""
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError, DomainError, InvalidStateError
from .linalg import (
    HERMITICITY_TOL,
    I2,
    PAULIS,
    PSD_TOL,
    QubitIndexMap,
    hermitian_eigenvalues,
    hermiticity_error,
    kron,
    partial_trace,
    pauli_rotation,
    projector,
)

TRACE_TOL = 1e-12
NORM_TOL = 1e-12

TWO_QUBITS = QubitIndexMap((1, 2))

_SIGMA_SUM = sum(kron(s, s) for s in PAULIS)
SINGLET = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)


@dataclass(frozen=True)
class WernerChannel:
    """Werner state parametrized by phi in [-1, 1]; entanglement is max(0, phi)."""

    phi: float

    def __post_init__(self):
        if not -1.0 <= self.phi <= 1.0:
            raise DomainError(f"Werner parameter phi={self.phi} outside [-1, 1]")

    @classmethod
    def from_entanglement(cls, ew):
        if not 0.0 <= ew <= 1.0:
            raise DomainError(f"channel entanglement {ew} outside [0, 1]")
        return cls(float(ew))

    @property
    def kappa(self):
        """Contraction factor (2 phi + 1) / 3 applied to Bloch data."""
        return (2.0 * self.phi + 1.0) / 3.0

    @property
    def entanglement(self):
        return max(0.0, self.phi)

    def density_matrix(self):
        return werner(self.phi)


def as_channel(channel):
    if isinstance(channel, WernerChannel):
        return channel
    return WernerChannel(float(channel))


@dataclass(frozen=True)
class BlochRep:
    """rho = (I + a.sigma x I + I x b.sigma + sum c_nm sigma_n x sigma_m) / 4."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", np.asarray(self.a, dtype=float).reshape(3))
        object.__setattr__(self, "b", np.asarray(self.b, dtype=float).reshape(3))
        object.__setattr__(self, "c", np.asarray(self.c, dtype=float).reshape(3, 3))

    def max_abs_diff(self, other):
        return float(
            max(
                np.max(np.abs(self.a - other.a)),
                np.max(np.abs(self.b - other.b)),
                np.max(np.abs(self.c - other.c)),
            )
        )


def werner(phi):
    """Werner density matrix (I x I - (2 phi + 1)/3 * sum_n sigma_n x sigma_n) / 4.

    phi = 1 gives the singlet, phi = -1/2 the maximally mixed state.
    """
    phi = float(phi)
    if not -1.0 <= phi <= 1.0:
        raise DomainError(f"Werner parameter phi={phi} outside [-1, 1]; state would not be PSD")
    p = (2.0 * phi + 1.0) / 3.0
    return (np.eye(4, dtype=complex) - p * _SIGMA_SUM) / 4.0


def singlet_projector():
    return projector(SINGLET)


def schmidt_pure(theta):
    """cos(theta)|00> + sin(theta)|11>, with entanglement sin(2 theta)."""
    if not -1e-15 <= theta <= np.pi / 4 + 1e-15:
        raise DomainError(f"Schmidt angle {theta} outside [0, pi/4]")
    return np.array([np.cos(theta), 0.0, 0.0, np.sin(theta)], dtype=complex)


def schmidt_angle(e12):
    """Schmidt angle whose pure state has entanglement ``e12``."""
    if not 0.0 <= e12 <= 1.0:
        raise DomainError(f"entanglement {e12} outside [0, 1]")
    return 0.5 * np.arcsin(e12)


def random_pure(seed):
    """Haar-random two-qubit pure state from 8 standard normals."""
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(8)
    psi = x[:4] + 1j * x[4:]
    return psi / np.linalg.norm(psi)


def random_mixed(seed):
    """Two-qubit marginal of a Haar-random three-qubit pure state."""
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(16)
    psi = x[:8] + 1j * x[8:]
    psi /= np.linalg.norm(psi)
    return partial_trace(projector(psi), (1, 2), QubitIndexMap((1, 2, 3)))


def random_local_unitary(rng):
    """A random single-qubit unitary built from Z-Y-Z Pauli rotations and a phase."""
    a, b, c, g = rng.uniform(0, 2 * np.pi, size=4)
    return np.exp(1j * g) * pauli_rotation(2, a) @ pauli_rotation(1, b) @ pauli_rotation(2, c)


def check_density(rho, tol=PSD_TOL):
    """Raise InvalidStateError unless ``rho`` is Hermitian, unit-trace and PSD."""
    rho = np.asarray(rho, dtype=complex)
    err = hermiticity_error(rho)
    if err > HERMITICITY_TOL:
        raise InvalidStateError(f"not Hermitian (deviation {err:.3g})")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"trace {tr!r} is not 1")
    lo = hermitian_eigenvalues(rho)[0]
    if lo < -tol:
        raise InvalidStateError(f"negative eigenvalue {lo:.3g}")
    return rho


def _pauli_products():
    ops = {}
    for n, s in enumerate(PAULIS):
        ops["a", n] = kron(s, I2)
        ops["b", n] = kron(I2, s)
        for m, t in enumerate(PAULIS):
            ops["c", n, m] = kron(s, t)
    return ops


_PAULI_PRODUCTS = _pauli_products()


def bloch_decompose(rho):
    """Local Bloch vectors and correlation matrix of a two-qubit state."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ContractViolationError(f"expected a 4x4 two-qubit matrix, got {rho.shape}")
    ops = _PAULI_PRODUCTS
    vals = {key: np.einsum("ij,ji->", rho, op) for key, op in ops.items()}
    worst = max(abs(v.imag) for v in vals.values())
    if worst > 1e-10:
        raise ContractViolationError(f"imaginary Pauli expectation {worst:.3g}; input not Hermitian")
    a = [vals["a", n].real for n in range(3)]
    b = [vals["b", n].real for n in range(3)]
    c = [[vals["c", n, m].real for m in range(3)] for n in range(3)]
    return BlochRep(a, b, c)


def bloch_matrix(rep):
    """Assemble the 4x4 matrix for ``rep`` without validating it."""
    ops = _PAULI_PRODUCTS
    rho = np.eye(4, dtype=complex)
    for n in range(3):
        rho = rho + rep.a[n] * ops["a", n] + rep.b[n] * ops["b", n]
        for m in range(3):
            rho = rho + rep.c[n, m] * ops["c", n, m]
    return rho / 4.0


def bloch_compose(rep):
    """Inverse of :func:`bloch_decompose`; rejects reps that are not PSD."""
    rho = bloch_matrix(rep)
    lo = hermitian_eigenvalues(rho)[0]
    if lo < -PSD_TOL:
        raise InvalidStateError(f"Bloch data gives a non-PSD matrix (min eigenvalue {lo:.3g})")
    return rho
