import math

import numpy as np
import pytest

import fockrank._jacobi_py as jacobi_py
from fockrank import _jacobi
from fockrank.corpus import left_matrix
from fockrank.eigenkit import (
    EigenDecomposition,
    SymmetricMatrix,
    jacobi_eigen,
    svd_via_gram,
    truncate,
)
from fockrank.errors import BadRank, NoConvergence, RankDeficient

BACKENDS = [("python", jacobi_py.cyclic_sweep)]
try:
    import fockrank._jacobi_cy as jacobi_cy

    BACKENDS.append(("cython", jacobi_cy.cyclic_sweep))
except ImportError:
    pass

GF_SINGULAR_VALUES = (4.0989, 2.3616, 1.2737)
GF_TERM_FACTOR_1 = (0.4201, 0.2995, 0.1206, 0.1576, 0.1206, 0.2626,
                    0.4201, 0.4201, 0.2626, 0.3151, 0.2995)


def _random_symmetric(rng, n, span=5):
    m = rng.integers(-span, span + 1, size=(n, n)).astype(float)
    return (m + m.T) / 2.0


class TestSymmetricMatrix:
    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            SymmetricMatrix(np.array([[1.0, 2.0], [2.0000001, 1.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            SymmetricMatrix(np.zeros((2, 3)))


class TestJacobiEigen:
    def test_identity(self):
        eig = jacobi_eigen(np.eye(3))
        assert np.allclose(eig.values, [1.0, 1.0, 1.0])
        assert np.allclose(eig.vectors @ eig.vectors.T, np.eye(3), atol=1e-12)

    def test_two_by_two_closed_form(self):
        eig = jacobi_eigen(np.array([[2.0, 1.0], [1.0, 2.0]]))
        assert eig.values == pytest.approx([3.0, 1.0], abs=1e-12)
        inv_sqrt2 = 1.0 / math.sqrt(2.0)
        assert eig.vectors[:, 0] == pytest.approx([inv_sqrt2, inv_sqrt2], abs=1e-12)
        assert eig.vectors[:, 1] == pytest.approx([inv_sqrt2, -inv_sqrt2], abs=1e-12)

    def test_gf_left_matrix_spectrum(self, gf_index):
        eig = jacobi_eigen(left_matrix(gf_index).astype(float))
        above = eig.values[eig.values >= 1e-10 * eig.values[0]]
        assert len(above) == 3
        roots = np.sqrt(above)
        assert roots == pytest.approx(GF_SINGULAR_VALUES, abs=5e-5)

    @pytest.mark.parametrize("backend,sweep", BACKENDS)
    def test_orthonormality_and_residual(self, backend, sweep):
        rng = np.random.default_rng(7)
        for _ in range(20):
            m = _random_symmetric(rng, int(rng.integers(1, 9)))
            eig = jacobi_eigen(m, _sweep=sweep)
            n = m.shape[0]
            assert np.abs(eig.vectors.T @ eig.vectors - np.eye(n)).max() <= 1e-10
            for a in range(n):
                resid = m @ eig.vectors[:, a] - eig.values[a] * eig.vectors[:, a]
                assert np.abs(resid).max() <= 1e-8 * max(1.0, abs(eig.values[a]))

    @pytest.mark.parametrize("backend,sweep", BACKENDS)
    def test_matches_numpy_eigenvalues(self, backend, sweep):
        rng = np.random.default_rng(13)
        for _ in range(20):
            m = _random_symmetric(rng, int(rng.integers(2, 9)))
            got = jacobi_eigen(m, _sweep=sweep).values
            expected = np.sort(np.linalg.eigvalsh(m))[::-1]
            assert got == pytest.approx(expected, abs=1e-9)

    @pytest.mark.parametrize("backend,sweep", BACKENDS)
    def test_sweep_preserves_frobenius_norm(self, backend, sweep):
        rng = np.random.default_rng(21)
        for _ in range(10):
            a = _random_symmetric(rng, 7)
            v = np.eye(7)
            before = np.linalg.norm(a)
            sweep(a, v)
            assert np.linalg.norm(a) == pytest.approx(before, rel=1e-10)

    def test_sign_convention(self):
        eig = jacobi_eigen(np.array([[2.0, 1.0], [1.0, 2.0]]))
        for a in range(2):
            col = eig.vectors[:, a]
            assert col[np.argmax(np.abs(col))] > 0

    def test_no_convergence_reports_residual(self):
        m = np.array([[0.0, 1.0], [1.0, 0.0]])
        with pytest.raises(NoConvergence) as err:
            jacobi_eigen(m, max_sweeps=0)
        assert err.value.residual == pytest.approx(1.0)

    def test_backends_agree(self, gf_index):
        if len(BACKENDS) < 2:
            pytest.skip("compiled kernel not built")
        m = left_matrix(gf_index).astype(float)
        results = [jacobi_eigen(m, _sweep=sweep) for _, sweep in BACKENDS]
        for other in results[1:]:
            assert other.values == pytest.approx(results[0].values, abs=1e-10)
            assert np.abs(np.abs(other.vectors) - np.abs(results[0].vectors)).max() <= 1e-8


class TestSvdViaGram:
    def test_gf_factors(self, gf_index):
        f = svd_via_gram(gf_index.A, 3)
        assert f.r == 3
        assert f.S == pytest.approx(GF_SINGULAR_VALUES, abs=5e-5)
        assert np.abs(f.U[:, 0]) == pytest.approx(GF_TERM_FACTOR_1, abs=5e-5)

    def test_identity(self):
        f = svd_via_gram(np.eye(2), "auto")
        assert f.S == pytest.approx([1.0, 1.0])
        assert np.abs(f.U) == pytest.approx(np.eye(2), abs=1e-12)
        assert np.abs(f.V) == pytest.approx(np.eye(2), abs=1e-12)

    def test_rank_one_column(self):
        f = svd_via_gram(np.array([[3.0], [4.0]]), "auto")
        assert f.r == 1
        assert f.S == pytest.approx([5.0])
        assert f.U[:, 0] == pytest.approx([0.6, 0.8])

    def test_orthonormal_factors(self, gf_index):
        f = svd_via_gram(gf_index.A, "auto")
        assert np.abs(f.U.T @ f.U - np.eye(f.r)).max() <= 1e-10
        assert np.abs(f.V.T @ f.V - np.eye(f.r)).max() <= 1e-10

    def test_full_rank_reconstruction(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            a = rng.integers(-3, 4, size=(6, 4)).astype(float)
            if not a.any():
                continue
            f = svd_via_gram(a, "auto")
            err = np.linalg.norm(a - f.U @ np.diag(f.S) @ f.V.T)
            assert err <= 1e-8 * np.linalg.norm(a)

    def test_reconstruction_error_non_increasing_in_rank(self, gf_index):
        a = gf_index.A.astype(float)
        f = svd_via_gram(a, "auto")
        errors = []
        for r in range(1, f.r + 1):
            fr = truncate(f, r)
            errors.append(np.linalg.norm(a - fr.U @ np.diag(fr.S) @ fr.V.T))
        assert all(e1 >= e2 - 1e-12 for e1, e2 in zip(errors, errors[1:]))

    def test_left_right_spectra_agree(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            a = rng.integers(-4, 5, size=(5, 3)).astype(float)
            if not a.any():
                continue
            left = np.linalg.eigvalsh(a @ a.T)
            right = np.linalg.eigvalsh(a.T @ a)
            cutoff = 1e-10 * max(left.max(), right.max())
            l_nz = np.sort(left[left >= cutoff])[::-1]
            r_nz = np.sort(right[right >= cutoff])[::-1]
            assert len(l_nz) == len(r_nz)
            assert l_nz == pytest.approx(r_nz, rel=1e-8)
            # the gram-side solver retains exactly that shared spectrum
            f = svd_via_gram(a, "auto")
            assert f.S ** 2 == pytest.approx(l_nz, rel=1e-8)

    def test_storage_order_irrelevant(self, gf_index):
        c_order = np.ascontiguousarray(gf_index.A.astype(float))
        f_order = np.asfortranarray(gf_index.A.astype(float))
        fc = svd_via_gram(c_order, "auto")
        ff = svd_via_gram(f_order, "auto")
        assert fc.S == pytest.approx(ff.S, abs=1e-12)
        assert np.abs(fc.U - ff.U).max() <= 1e-9

    def test_zero_matrix_is_rank_deficient(self):
        with pytest.raises(RankDeficient):
            svd_via_gram(np.zeros((3, 2)), "auto")

    def test_requested_rank_capped_at_numerical_rank(self, gf_index):
        f = svd_via_gram(gf_index.A, 10)
        assert f.r == 3

    def test_bad_requested_rank(self):
        with pytest.raises(BadRank):
            svd_via_gram(np.eye(2), 0)


class TestTruncate:
    def test_gf_prefix(self, gf_index):
        f = svd_via_gram(gf_index.A, "auto")
        f2 = truncate(f, 2)
        assert f2.r == 2
        assert f2.S == pytest.approx(GF_SINGULAR_VALUES[:2], abs=5e-5)
        assert f2.U.shape == (11, 2)
        assert f2.V.shape == (3, 2)

    def test_full_rank_is_identity_operation(self, gf_index):
        f = svd_via_gram(gf_index.A, "auto")
        same = truncate(f, f.r)
        assert np.array_equal(same.U, f.U)
        assert np.array_equal(same.S, f.S)
        assert np.array_equal(same.V, f.V)

    def test_zero_rank_rejected(self, gf_index):
        f = svd_via_gram(gf_index.A, "auto")
        with pytest.raises(BadRank):
            truncate(f, 0)
        with pytest.raises(BadRank):
            truncate(f, f.r + 1)


def test_selected_backend_is_reported():
    assert _jacobi.JACOBI_BACKEND in ("cython", "python")
