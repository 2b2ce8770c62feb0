"""Select the Jacobi sweep kernel at import time.

The compiled extension is optional; the pure-Python kernel is a drop-in
replacement.  ``JACOBI_BACKEND`` records which one is active.
"""

try:
    from fockrank._jacobi_cy import cyclic_sweep

    JACOBI_BACKEND = "cython"
except ImportError:  # extension not built on this install
    from fockrank._jacobi_py import cyclic_sweep

    JACOBI_BACKEND = "python"

__all__ = ["cyclic_sweep", "JACOBI_BACKEND"]
