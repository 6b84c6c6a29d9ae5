# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi eigenvalue kernel for Hermitian matrices.

Mirrors ``_jacobi_py.jacobi_eigvalsh`` rotation for rotation.
"""
import numpy as np

from libc.math cimport sqrt, fabs, copysign


def jacobi_eigvalsh(a, double tol, int max_sweeps):
    cdef double complex[:, ::1] m = np.array(a, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t i, j, k, p, q
    cdef int sweep
    cdef double off, scale = 0.0, threshold, r, tau, t, c, s
    cdef double complex ph, jqp, jqq, cjqp, cjqq, akp, akq, apk, aqk, x

    for i in range(n):
        for j in range(n):
            x = m[i, j]
            scale += x.real * x.real + x.imag * x.imag
    threshold = tol * max(1.0, sqrt(scale))

    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    x = m[i, j]
                    off += x.real * x.real + x.imag * x.imag
        if sqrt(off) < threshold:
            return [m[i, i].real for i in range(n)], sweep
        if sweep == max_sweeps:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                x = m[p, q]
                r = sqrt(x.real * x.real + x.imag * x.imag)
                if r == 0.0:
                    continue
                ph = x / r
                tau = (m[q, q].real - m[p, p].real) / (2.0 * r)
                t = copysign(1.0, tau) / (fabs(tau) + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                jqp = -s * ph.conjugate()
                jqq = c * ph.conjugate()
                for k in range(n):
                    akp = m[k, p]
                    akq = m[k, q]
                    m[k, p] = akp * c + akq * jqp
                    m[k, q] = akp * s + akq * jqq
                cjqp = jqp.conjugate()
                cjqq = jqq.conjugate()
                for k in range(n):
                    apk = m[p, k]
                    aqk = m[q, k]
                    m[p, k] = c * apk + cjqp * aqk
                    m[q, k] = s * apk + cjqq * aqk
                m[p, q] = 0.0
                m[q, p] = 0.0
                m[p, p] = m[p, p].real
                m[q, q] = m[q, q].real

    return None, max_sweeps
