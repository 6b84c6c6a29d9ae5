"""Scalar functionals on two-qubit states.

Information quantities use the purity-based normalization in which a pure
two-qubit state carries 2 bits; they are not entropies.
"""
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError
from .linalg import hermitian_eigenvalues, kron, partial_trace, partial_transpose
from .states import SINGLET, TWO_QUBITS, bloch_decompose

NEGATIVE_EIG_CLAMP = 1e-12
CORRELATION_CROSSCHECK_TOL = 1e-10


@dataclass(frozen=True)
class InformationBreakdown:
    total: float
    individual_a: float
    individual_b: float
    correlation: float


def _real_trace_product(a, b):
    return float(np.einsum("ij,ji->", a, b).real)


def entanglement(rho, side=2):
    """Negativity-based measure: -2 times the sum of negative eigenvalues of rho^T_side."""
    pt = partial_transpose(rho, side, TWO_QUBITS)
    eigs = hermitian_eigenvalues(pt)
    neg = sum(lam for lam in eigs if lam <= -NEGATIVE_EIG_CLAMP)
    return min(1.0, max(0.0, -2.0 * neg))


def purity(rho):
    """Tr(rho^2)."""
    rho = np.asarray(rho, dtype=complex)
    return _real_trace_product(rho, rho)


def singlet_fraction(rho):
    """Overlap Tr(rho |singlet><singlet|); equals (phi + 1)/2 for werner(phi)."""
    return float(np.real(SINGLET.conj() @ np.asarray(rho, dtype=complex) @ SINGLET))


def fidelity(pure, rho):
    """Tr(|psi><psi| rho) for a pure reference state ``pure``."""
    psi = np.asarray(pure, dtype=complex).reshape(-1)
    return float(np.real(psi.conj() @ np.asarray(rho, dtype=complex) @ psi))


def marginal(rho, which):
    if which not in ("a", "b"):
        raise ValueError(f"which must be 'a' or 'b', got {which!r}")
    return partial_trace(rho, (1,) if which == "a" else (2,), TWO_QUBITS)


def total_information(rho):
    return 2.0 / 3.0 * (4.0 * purity(rho) - 1.0)


def individual_information(rho, which):
    m = marginal(rho, which)
    return 2.0 * _real_trace_product(m, m) - 1.0


def correlation_information_bloch(rho):
    """Closed form (2/3)(sum c_nm^2 - |a|^2 |b|^2) from the Bloch decomposition."""
    rep = bloch_decompose(rho)
    return 2.0 / 3.0 * (float(np.sum(rep.c**2)) - float(rep.a @ rep.a) * float(rep.b @ rep.b))


def correlation_information(rho):
    """Total information minus that of the product of the two marginals."""
    product = kron(marginal(rho, "a"), marginal(rho, "b"))
    value = total_information(rho) - total_information(product)
    closed = correlation_information_bloch(rho)
    if abs(value - closed) > CORRELATION_CROSSCHECK_TOL:
        raise ContractViolationError(
            f"correlation information paths disagree: {value!r} vs {closed!r}"
        )
    return value


def information_breakdown(rho):
    return InformationBreakdown(
        total=total_information(rho),
        individual_a=individual_information(rho, "a"),
        individual_b=individual_information(rho, "b"),
        correlation=correlation_information(rho),
    )

