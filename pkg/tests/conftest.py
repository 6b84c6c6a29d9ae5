import numpy as np
import pytest

from werner_teleport import linalg

ACCEPTANCE_RESULTS = []


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""

    def record(number, title, passed, detail=""):
        ACCEPTANCE_RESULTS.append((number, title, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {title}: {detail}")


def brute_partial_trace(rho, n, keep):
    """Index-by-index reference partial trace; ``keep`` are slot positions in order."""
    d = 2 ** len(keep)
    out = np.zeros((d, d), dtype=complex)
    for i in range(2**n):
        for j in range(2**n):
            bi = [(i >> (n - 1 - s)) & 1 for s in range(n)]
            bj = [(j >> (n - 1 - s)) & 1 for s in range(n)]
            if any(bi[s] != bj[s] for s in range(n) if s not in keep):
                continue
            r = int("".join(str(bi[s]) for s in keep), 2) if keep else 0
            c = int("".join(str(bj[s]) for s in keep), 2) if keep else 0
            out[r, c] += rho[i, j]
    return out


def random_hermitian(rng, d):
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (a + a.conj().T) / 2


def random_density(rng, d):
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def local_conjugate(rho, ua, ub):
    u = linalg.kron(ua, ub)
    return u @ rho @ u.conj().T
