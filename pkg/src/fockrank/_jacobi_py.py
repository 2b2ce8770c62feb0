"""Pure-Python cyclic Jacobi sweep, the fallback for the compiled kernel.

Both kernels apply identical rotations in identical order; convergence
control and eigenpair post-processing live in eigenkit.
"""

import math


def cyclic_sweep(a, v):
    """Run one cyclic Jacobi sweep in place.

    a: (n, n) float64 symmetric working matrix.
    v: (n, n) float64 accumulated rotation product (columns become the
       eigenvectors once the off-diagonal mass is gone).
    """
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            app = a[p, p]
            aqq = a[q, q]
            theta = (aqq - app) / (2.0 * apq)
            if abs(theta) > 1e150:  # theta**2 would overflow
                t = 0.5 / theta
            else:
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
            c = 1.0 / math.sqrt(t * t + 1.0)
            s = t * c

            col_p = a[:, p].copy()
            col_q = a[:, q]
            a[:, p] = c * col_p - s * col_q
            a[:, q] = s * col_p + c * col_q
            row_p = a[p, :].copy()
            row_q = a[q, :]
            a[p, :] = c * row_p - s * row_q
            a[q, :] = s * row_p + c * row_q
            # closed forms for the rotated 2x2 block (the rotation zeroes
            # a[p, q] exactly by construction)
            a[p, p] = app - t * apq
            a[q, q] = aqq + t * apq
            a[p, q] = 0.0
            a[q, p] = 0.0

            vcol_p = v[:, p].copy()
            vcol_q = v[:, q]
            v[:, p] = c * vcol_p - s * vcol_q
            v[:, q] = s * vcol_p + c * vcol_q
