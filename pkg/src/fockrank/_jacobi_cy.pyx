# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi sweep; arithmetic mirrors _jacobi_py exactly."""

from libc.math cimport fabs, sqrt


def cyclic_sweep(double[:, ::1] a, double[:, ::1] v):
    """Run one cyclic Jacobi sweep in place (see _jacobi_py.cyclic_sweep)."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i
    cdef double apq, app, aqq, theta, t, c, s, g, h

    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            app = a[p, p]
            aqq = a[q, q]
            theta = (aqq - app) / (2.0 * apq)
            if fabs(theta) > 1e150:
                t = 0.5 / theta
            else:
                t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
            c = 1.0 / sqrt(t * t + 1.0)
            s = t * c

            for i in range(n):
                g = a[i, p]
                h = a[i, q]
                a[i, p] = c * g - s * h
                a[i, q] = s * g + c * h
            for i in range(n):
                g = a[p, i]
                h = a[q, i]
                a[p, i] = c * g - s * h
                a[q, i] = s * g + c * h
            a[p, p] = app - t * apq
            a[q, q] = aqq + t * apq
            a[p, q] = 0.0
            a[q, p] = 0.0

            for i in range(n):
                g = v[i, p]
                h = v[i, q]
                v[i, p] = c * g - s * h
                v[i, q] = s * g + c * h
