"""Dense symmetric eigendecomposition and Gram-matrix SVD.

The eigensolver is a cyclic Jacobi iteration: guaranteed convergence on
symmetric input, and every rotation preserves the Frobenius norm.  The
singular value decomposition of a t x N matrix A is obtained from the
eigendecomposition of the smaller of its two Gram matrices,

    L = A A^T   (t x t)      R = A^T A   (N x N),

whose nonzero spectra agree; the missing side is recovered through
V = A^T U S^-1 (or U = A V S^-1).  Singular values are the square roots
of the retained eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from fockrank import _jacobi
from fockrank.errors import BadRank, NoConvergence, RankDeficient

#: relative threshold on off-diagonal mass for Jacobi convergence
JACOBI_TOL = 1e-12
#: hard cap on Jacobi sweeps before giving up
MAX_SWEEPS = 100
#: eigenvalues below ZERO_CUTOFF * lambda_max count as zero
ZERO_CUTOFF = 1e-10


@dataclass(frozen=True, eq=False)
class SymmetricMatrix:
    """Square matrix validated to be exactly symmetric at construction."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.array(self.entries, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        if not np.array_equal(m, m.T):
            raise ValueError("matrix is not exactly symmetric")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def order(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Eigenvalues sorted descending, paired with orthonormal column vectors."""

    values: np.ndarray   # (n,)
    vectors: np.ndarray  # (n, n); column a pairs with values[a]


@dataclass(frozen=True, eq=False)
class SvdFactors:
    """Reduced SVD A ~ U diag(S) V^T with r retained factors."""

    U: np.ndarray  # t x r
    S: np.ndarray  # (r,), descending, all positive
    V: np.ndarray  # N x r
    r: int


def _max_offdiag(a: np.ndarray) -> float:
    n = a.shape[0]
    if n < 2:
        return 0.0
    mask = ~np.eye(n, dtype=bool)
    return float(np.abs(a[mask]).max())


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    # make each eigenvector's largest-magnitude component positive
    lead = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[lead, np.arange(vectors.shape[1])])
    signs[signs == 0.0] = 1.0
    return vectors * signs


def jacobi_eigen(m: Union[SymmetricMatrix, np.ndarray], *,
                 max_sweeps: int = MAX_SWEEPS, _sweep=None) -> EigenDecomposition:
    """Diagonalize a symmetric matrix with cyclic Jacobi rotations.

    Sweeps run until the largest off-diagonal magnitude drops to
    JACOBI_TOL times the largest diagonal magnitude, raising NoConvergence
    past ``max_sweeps`` sweeps.  Eigenpairs come back sorted by descending
    eigenvalue with a deterministic sign convention.
    """
    if not isinstance(m, SymmetricMatrix):
        m = SymmetricMatrix(np.asarray(m))
    sweep = _sweep if _sweep is not None else _jacobi.cyclic_sweep
    n = m.order
    a = np.array(m.entries, dtype=np.float64, order="C")
    v = np.eye(n, dtype=np.float64)

    sweeps = 0
    while True:
        off = _max_offdiag(a)
        if off <= JACOBI_TOL * float(np.abs(np.diag(a)).max(initial=0.0)):
            break
        if sweeps >= max_sweeps:
            raise NoConvergence(
                f"Jacobi iteration still has off-diagonal residual {off:.3e} "
                f"after {max_sweeps} sweeps", residual=off)
        sweep(a, v)
        sweeps += 1

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = _fix_signs(v[:, order])
    values.setflags(write=False)
    vectors.setflags(write=False)
    return EigenDecomposition(values=values, vectors=vectors)


def svd_via_gram(a: np.ndarray, r: Union[int, str] = "auto") -> SvdFactors:
    """Reduced SVD of ``a`` through the eigenproblem of its smaller Gram matrix.

    ``r`` is the requested number of factors or "auto" for every
    eigenvalue above the zero cutoff; at most the numerical rank is
    retained.  Raises RankDeficient when nothing survives the cutoff.
    """
    A = np.asarray(a, dtype=np.float64)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {A.shape}")
    if r != "auto":
        if not isinstance(r, (int, np.integer)) or r < 1:
            raise BadRank(f"requested rank must be a positive integer, got {r!r}")
    if not A.any():
        raise RankDeficient("matrix is zero, no singular value above cutoff")

    t, n = A.shape
    use_left = t <= n
    gram = A @ A.T if use_left else A.T @ A
    gram = (gram + gram.T) * 0.5  # force bitwise symmetry after BLAS
    eig = jacobi_eigen(SymmetricMatrix(gram))

    lam = eig.values
    lam_max = float(lam[0])
    if lam_max <= 0.0:
        raise RankDeficient("no positive eigenvalue above cutoff")
    rank = int(np.count_nonzero(lam >= ZERO_CUTOFF * lam_max))
    keep = rank if r == "auto" else min(int(r), rank)

    S = np.sqrt(lam[:keep])
    W = eig.vectors[:, :keep]
    if use_left:
        U = W
        V = (A.T @ U) / S
    else:
        V = W
        U = (A @ V) / S
    return SvdFactors(U=U.copy(), S=S.copy(), V=V.copy(), r=keep)


def truncate(f: SvdFactors, r: int) -> SvdFactors:
    """Keep the first ``r`` factors without recomputation."""
    if not isinstance(r, (int, np.integer)) or not 1 <= r <= f.r:
        raise BadRank(f"rank must lie in [1, {f.r}], got {r!r}")
    r = int(r)
    return SvdFactors(U=f.U[:, :r].copy(), S=f.S[:r].copy(), V=f.V[:, :r].copy(), r=r)
