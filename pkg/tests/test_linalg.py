import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from werner_teleport import linalg
from werner_teleport.errors import ContractViolationError, InvalidSubsystemError
from werner_teleport.linalg import I2, SX, SY, SZ, QubitIndexMap

from conftest import brute_partial_trace, random_density, random_hermitian


def test_kron_identity():
    assert np.array_equal(linalg.kron(I2, I2), np.eye(4))


def test_kron_x_z_block_structure():
    expected = np.array(
        [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]], dtype=complex
    )
    assert np.array_equal(linalg.kron(SX, SZ), expected)


def test_kron_dims():
    assert linalg.kron(np.ones((2, 2)), np.ones((4, 4))).shape == (8, 8)


def test_kron_associative(rng):
    a, b, c = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)) for _ in range(3))
    left = linalg.kron(a, linalg.kron(b, c))
    right = linalg.kron(linalg.kron(a, b), c)
    assert np.max(np.abs(left - right)) < 1e-14


def test_index_map_rejects_duplicates():
    with pytest.raises(InvalidSubsystemError):
        QubitIndexMap((1, 2, 1))


SINGLET = np.array([0, 1, -1, 0]) / np.sqrt(2)


def test_partial_trace_singlet_marginal():
    rho = linalg.projector(SINGLET)
    out = linalg.partial_trace(rho, (1,), QubitIndexMap((1, 2)))
    assert np.allclose(out, I2 / 2, atol=1e-15)


def test_partial_trace_product(rng):
    ra, rb = random_density(rng, 2), random_density(rng, 4)
    m = QubitIndexMap(("a", "b1", "b2"))
    assert np.allclose(linalg.partial_trace(linalg.kron(ra, rb), ("a",), m), ra, atol=1e-14)
    assert np.allclose(linalg.partial_trace(linalg.kron(ra, rb), ("b1", "b2"), m), rb, atol=1e-14)


def test_partial_trace_keep_all_is_identity(rng):
    rho = random_density(rng, 8)
    m = QubitIndexMap((1, 2, 3))
    assert np.array_equal(linalg.partial_trace(rho, (1, 2, 3), m), rho)


def test_partial_trace_keep_order_permutes(rng):
    ra, rb = random_density(rng, 2), random_density(rng, 2)
    m = QubitIndexMap((1, 2))
    swapped = linalg.partial_trace(linalg.kron(ra, rb), (2, 1), m)
    assert np.allclose(swapped, linalg.kron(rb, ra), atol=1e-15)


@pytest.mark.parametrize("keep", [(0,), (2,), (0, 2), (3, 1), (1, 2, 3), ()])
def test_partial_trace_matches_brute_force(rng, keep):
    rho = random_density(rng, 16)
    labels = ("w", "x", "y", "z")
    m = QubitIndexMap(labels)
    got = linalg.partial_trace(rho, [labels[k] for k in keep], m)
    assert np.max(np.abs(got - brute_partial_trace(rho, 4, list(keep)))) < 1e-14


def test_partial_trace_unknown_label():
    with pytest.raises(InvalidSubsystemError):
        linalg.partial_trace(np.eye(4) / 4, (3,), QubitIndexMap((1, 2)))


def test_partial_trace_preserves_unit_trace(rng):
    m = QubitIndexMap((1, 2, 3, 4, 5))
    for _ in range(20):
        rho = random_density(rng, 32)
        keep = sorted(rng.choice([1, 2, 3, 4, 5], size=rng.integers(0, 6), replace=False))
        assert abs(np.trace(linalg.partial_trace(rho, keep, m)) - 1) < 1e-12


def test_partial_transpose_product(rng):
    ra, rb = random_density(rng, 2), random_density(rng, 2)
    out = linalg.partial_transpose(linalg.kron(ra, rb), "b", QubitIndexMap(("a", "b")))
    assert np.allclose(out, linalg.kron(ra, rb.T), atol=1e-15)


def test_partial_transpose_singlet_spectrum():
    pt = linalg.partial_transpose(linalg.projector(SINGLET), 2, QubitIndexMap((1, 2)))
    assert np.allclose(linalg.hermitian_eigenvalues(pt), [-0.5, 0.5, 0.5, 0.5], atol=1e-12)


def test_partial_transpose_matches_index_swap(rng):
    rho = random_density(rng, 8)
    got = linalg.partial_transpose(rho, "y", QubitIndexMap(("x", "y", "z")))
    expected = np.empty_like(rho)
    for i in range(8):
        for j in range(8):
            # swap the middle bit of i and j
            bi, bj = (i >> 1) & 1, (j >> 1) & 1
            ii = (i & ~2) | (bj << 1)
            jj = (j & ~2) | (bi << 1)
            expected[i, j] = rho[ii, jj]
    assert np.array_equal(got, expected)


def test_partial_transpose_involution_and_norms(rng):
    m = QubitIndexMap((1, 2, 3))
    for label in (1, 2, 3):
        h = random_hermitian(rng, 8)
        pt = linalg.partial_transpose(h, label, m)
        assert np.array_equal(linalg.partial_transpose(pt, label, m), h)
        assert linalg.hermiticity_error(pt) < 1e-15
        assert abs(np.trace(pt) - np.trace(h)) < 1e-12
        assert abs(np.linalg.norm(pt) - np.linalg.norm(h)) < 1e-12
        assert abs(sum(linalg.hermitian_eigenvalues(pt)) - np.trace(h).real) < 1e-12


def test_partial_transpose_unknown_label():
    with pytest.raises(InvalidSubsystemError):
        linalg.partial_transpose(np.eye(4), 7, QubitIndexMap((1, 2)))


def test_apply_local_matches_embedded_operator(rng):
    rho = random_density(rng, 16)
    m = QubitIndexMap((1, 2, 3, 4))
    u = linalg.kron(linalg.pauli_rotation(0, 0.3), linalg.pauli_rotation(1, 1.1))
    got = linalg.apply_local(rho, u, (4, 2), m)
    # u on slots (2, 3), then permute so its first qubit sits on slot 3 (label 4)
    # and its second on slot 1 (label 2)
    t = np.kron(np.eye(4), u).reshape((2,) * 8)
    perm = [0, 3, 1, 2]
    t = np.transpose(t, perm + [4 + p for p in perm])
    full = t.reshape(16, 16)
    assert np.max(np.abs(got - full @ rho @ full.conj().T)) < 1e-14


def test_project_onto_equals_project_then_trace(rng):
    rho = random_density(rng, 16)
    m = QubitIndexMap((1, 2, 3, 5))
    v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    v /= np.linalg.norm(v)
    reduced, rest = linalg.project_onto(rho, v, (1, 3), m)
    ref = linalg.partial_trace(linalg.apply_local(rho, linalg.projector(v), (1, 3), m), (2, 5), m)
    assert rest.ordering == (2, 5)
    assert np.max(np.abs(reduced - ref)) < 1e-14


def test_eigenvalues_diagonal():
    assert linalg.hermitian_eigenvalues(np.diag([3.0, 1.0, 4.0, 2.0])) == [1.0, 2.0, 3.0, 4.0]


def test_eigenvalues_pauli():
    assert np.allclose(linalg.hermitian_eigenvalues(SX), [-1, 1], atol=1e-15)
    assert np.allclose(linalg.hermitian_eigenvalues(SY), [-1, 1], atol=1e-15)


@pytest.mark.parametrize("phi", [-1.0, -0.5, 0.0, 0.4, 1.0])
def test_eigenvalues_werner_partial_transpose(phi):
    # analytic: {(1 - 3p)/4, (1 + p)/4 x3}, p = (2 phi + 1)/3
    p = (2 * phi + 1) / 3
    w = (np.eye(4) - p * sum(linalg.kron(s, s) for s in (SX, SY, SZ))) / 4
    pt = linalg.partial_transpose(w, 2, QubitIndexMap((1, 2)))
    expected = sorted([(1 - 3 * p) / 4] + [(1 + p) / 4] * 3)
    assert np.allclose(linalg.hermitian_eigenvalues(pt), expected, atol=1e-14)


def test_eigenvalues_recover_rotated_diagonal(rng):
    for _ in range(20):
        d = np.sort(rng.uniform(-2, 2, 4))
        u = linalg.kron(
            linalg.pauli_rotation(0, rng.uniform(0, 6)) @ linalg.pauli_rotation(2, rng.uniform(0, 6)),
            linalg.pauli_rotation(1, rng.uniform(0, 6)) @ linalg.pauli_rotation(0, rng.uniform(0, 6)),
        )
        cnot = np.eye(4)[[0, 1, 3, 2]]
        u = u @ cnot @ linalg.kron(linalg.pauli_rotation(1, rng.uniform(0, 6)), I2)
        h = u @ np.diag(d) @ u.conj().T
        assert np.max(np.abs(np.array(linalg.hermitian_eigenvalues(h)) - d)) < 1e-9


@pytest.mark.parametrize("dim", [1, 2, 3, 8, 32, 64])
def test_eigenvalues_against_numpy(rng, dim):
    h = random_hermitian(rng, dim)
    got = np.array(linalg.hermitian_eigenvalues(h))
    assert np.max(np.abs(got - np.linalg.eigvalsh(h))) < 1e-10 * max(1, np.abs(h).max() * dim)
    assert abs(got.sum() - np.trace(h).real) < 1e-10


def test_eigenvalues_degenerate():
    assert np.allclose(linalg.hermitian_eigenvalues(np.eye(5) * 0.25), [0.25] * 5)
    assert linalg.hermitian_eigenvalues(np.zeros((3, 3))) == [0.0, 0.0, 0.0]


def test_eigenvalues_reject_non_hermitian():
    with pytest.raises(ContractViolationError):
        linalg.hermitian_eigenvalues(np.array([[0, 1], [0, 0]], dtype=complex))


def test_eigenvalues_tolerate_tiny_asymmetry():
    h = np.array([[1, 1e-12], [0, -1]], dtype=complex)
    assert np.allclose(linalg.hermitian_eigenvalues(h), [-1, 1])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_eigenvalues_property(nq, seed):
    h = random_hermitian(np.random.default_rng(seed), 2**nq)
    got = linalg.hermitian_eigenvalues(h)
    assert len(got) == 2**nq
    assert got == sorted(got)
    assert abs(sum(got) - np.trace(h).real) < 1e-10
