"""Dense complex-matrix kernel for few-qubit density matrices.

Matrices are plain ``numpy`` complex arrays. Every subsystem operation takes a
:class:`QubitIndexMap` that names the particle sitting in each tensor slot;
slot 0 is the most significant bit of the computational-basis index.
"""
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ContractViolationError, ConvergenceError, InvalidSubsystemError

HERMITICITY_TOL = 1e-10
EIG_TOL = 1e-13
PSD_TOL = 1e-10
MAX_JACOBI_SWEEPS = 100

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SX, SY, SZ)


@dataclass(frozen=True)
class QubitIndexMap:
    """Ordered particle labels; position in ``ordering`` is the tensor slot."""

    ordering: tuple

    def __post_init__(self):
        object.__setattr__(self, "ordering", tuple(self.ordering))
        if len(set(self.ordering)) != len(self.ordering):
            raise InvalidSubsystemError(f"duplicate particle labels in {self.ordering}")

    @property
    def n(self):
        return len(self.ordering)

    @property
    def dim(self):
        return 2 ** len(self.ordering)

    def slot(self, label):
        try:
            return self.ordering.index(label)
        except ValueError:
            raise InvalidSubsystemError(
                f"particle {label!r} not in {self.ordering}"
            ) from None

    def slots(self, labels):
        return [self.slot(label) for label in labels]


def as_matrix(a):
    return np.asarray(a, dtype=complex)


def kron(a, b):
    """Kronecker product; the slot of ``a`` is the more significant one."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(*mats):
    out = np.ones((1, 1), dtype=complex)
    for m in mats:
        out = np.kron(out, as_matrix(m))
    return out


def dagger(a):
    return as_matrix(a).conj().T


def projector(psi):
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, psi.conj())


def trace(a):
    return complex(np.trace(a))


def trace_product(a, b):
    """Tr(a b) without forming the product."""
    return complex(np.einsum("ij,ji->", a, b))


def hermiticity_error(h):
    h = as_matrix(h)
    return float(np.max(np.abs(h - h.conj().T))) if h.size else 0.0


def _check_square_qubits(rho, qmap):
    rho = as_matrix(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ContractViolationError(f"expected a square matrix, got shape {rho.shape}")
    if rho.shape[0] != qmap.dim:
        raise ContractViolationError(
            f"matrix dimension {rho.shape[0]} does not match {qmap.n} qubits"
        )
    return rho


def partial_trace(rho, keep, qmap):
    """Trace out every particle not in ``keep``.

    The result's qubits follow the order given in ``keep``.
    """
    rho = _check_square_qubits(rho, qmap)
    keep = list(keep)
    keep_slots = qmap.slots(keep)
    if len(set(keep_slots)) != len(keep_slots):
        raise InvalidSubsystemError(f"repeated labels in keep={keep}")
    n = qmap.n
    tensor = rho.reshape((2,) * (2 * n))
    ket = list(range(n))
    bra = [n + i if i in keep_slots else i for i in range(n)]
    out = keep_slots + [n + s for s in keep_slots]
    reduced = np.einsum(tensor, ket + bra, out)
    d = 2 ** len(keep)
    return reduced.reshape(d, d)


def partial_transpose(rho, transposed, qmap):
    """Transpose the indices of the single particle ``transposed``."""
    rho = _check_square_qubits(rho, qmap)
    s = qmap.slot(transposed)
    n = qmap.n
    tensor = rho.reshape((2,) * (2 * n))
    return np.swapaxes(tensor, s, n + s).reshape(rho.shape).copy()


def apply_local(rho, op, labels, qmap):
    """Return ``O rho O^dagger`` for an operator ``op`` acting on ``labels``."""
    rho = _check_square_qubits(rho, qmap)
    op = as_matrix(op)
    slots = qmap.slots(labels)
    k = len(slots)
    if op.shape != (2 ** k, 2 ** k):
        raise ContractViolationError(f"operator shape {op.shape} does not fit {k} qubits")
    n = qmap.n
    t = rho.reshape((2,) * (2 * n))
    o = op.reshape((2,) * (2 * k))
    op_in = list(range(k, 2 * k))
    t = np.tensordot(o, t, axes=(op_in, slots))
    t = np.moveaxis(t, list(range(k)), slots)
    t = np.tensordot(t, o.conj(), axes=([n + s for s in slots], op_in))
    t = np.moveaxis(t, list(range(2 * n - k, 2 * n)), [n + s for s in slots])
    return t.reshape(rho.shape)


def project_onto(rho, vec, labels, qmap):
    """Unnormalized <v| rho |v> over ``labels``, leaving the other particles.

    Equals projecting onto |v><v| and tracing out ``labels``. Returns the
    reduced matrix and the index map of the particles that remain.
    """
    rho = _check_square_qubits(rho, qmap)
    slots = qmap.slots(labels)
    k = len(slots)
    v = np.asarray(vec, dtype=complex).reshape((2,) * k)
    n = qmap.n
    t = rho.reshape((2,) * (2 * n))
    t = np.tensordot(v.conj(), t, axes=(list(range(k)), slots))
    t = np.tensordot(t, v, axes=([n - k + s for s in slots], list(range(k))))
    rest = QubitIndexMap(tuple(lab for lab in qmap.ordering if lab not in labels))
    return t.reshape(rest.dim, rest.dim), rest


def pauli_rotation(axis, angle):
    """exp(-i angle/2 * sigma_axis) for axis in {0, 1, 2}."""
    return np.cos(angle / 2) * I2 - 1j * np.sin(angle / 2) * PAULIS[axis]


def hermitian_eigenvalues(h):
    """Ascending eigenvalues of a Hermitian matrix via cyclic Jacobi sweeps."""
    h = as_matrix(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ContractViolationError(f"expected a square matrix, got shape {h.shape}")
    err = hermiticity_error(h)
    if err > HERMITICITY_TOL:
        raise ContractViolationError(f"matrix is not Hermitian (max |H - H^dagger| = {err:.3g})")
    h = (h + h.conj().T) / 2
    eigs, sweeps = _kernels.jacobi_eigvalsh(h, EIG_TOL, MAX_JACOBI_SWEEPS)
    if eigs is None:
        raise ConvergenceError(f"Jacobi did not converge in {sweeps} sweeps")
    return sorted(eigs)
