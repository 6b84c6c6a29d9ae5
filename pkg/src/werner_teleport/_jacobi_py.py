"""Pure-Python cyclic Jacobi eigenvalue kernel for Hermitian matrices.

This is the fallback used when the compiled ``_jacobi_c`` extension is not
available. Both kernels implement the same rotation sequence so their results
agree to rounding.
"""
from math import copysign, sqrt


def jacobi_eigvalsh(a, tol, max_sweeps):
    """Diagonalize the Hermitian matrix ``a`` by cyclic complex Jacobi sweeps.

    Returns ``(eigenvalues, sweeps)`` with eigenvalues unsorted, or
    ``(None, max_sweeps)`` if the off-diagonal mass never fell below
    ``tol * max(1, ||a||_F)``.
    """
    m = [[complex(x) for x in row] for row in a]
    n = len(m)
    scale = sqrt(sum(abs(x) ** 2 for row in m for x in row))
    threshold = tol * max(1.0, scale)

    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            row = m[i]
            for j in range(n):
                if i != j:
                    off += row[j].real ** 2 + row[j].imag ** 2
        if sqrt(off) < threshold:
            return [m[i][i].real for i in range(n)], sweep
        if sweep == max_sweeps:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p][q]
                r = abs(apq)
                if r == 0.0:
                    continue
                ph = apq / r
                tau = (m[q][q].real - m[p][p].real) / (2.0 * r)
                t = copysign(1.0, tau) / (abs(tau) + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                # J = diag(1, conj(ph)) @ [[c, s], [-s, c]] acting on (p, q)
                jqp = -s * ph.conjugate()
                jqq = c * ph.conjugate()
                for k in range(n):
                    row = m[k]
                    akp = row[p]
                    akq = row[q]
                    row[p] = akp * c + akq * jqp
                    row[q] = akp * s + akq * jqq
                rp = m[p]
                rq = m[q]
                cjqp = jqp.conjugate()
                cjqq = jqq.conjugate()
                for k in range(n):
                    apk = rp[k]
                    aqk = rq[k]
                    rp[k] = c * apk + cjqp * aqk
                    rq[k] = s * apk + cjqq * aqk
                rp[q] = 0j
                rq[p] = 0j
                rp[p] = complex(rp[p].real, 0.0)
                rq[q] = complex(rq[q].real, 0.0)

    return None, max_sweeps
