import numpy as np
import pytest

from relphase import (ETA, GradedElement, QoElement, basis, commutator,
                      d_basis, exponential_flow, graded_bracket, is_in_qo,
                      is_quasi_orthogonal, qo_basis, qo_from_operator,
                      qo_realize)
from relphase.liealgebra import QO_BASIS_PAIRS


def antisym(coeffs):
    c = np.asarray(coeffs, dtype=complex)
    return c - c.T


class TestQoRealize:
    def test_single_plane_double_counts(self):
        coeffs = np.zeros((4, 4), dtype=complex)
        coeffs[0, 1], coeffs[1, 0] = 1, -1
        q = qo_realize(coeffs)
        np.testing.assert_allclose(q.matrix, 2 * d_basis(0, 1))

    def test_zero_tensor(self):
        q = qo_realize(np.zeros((4, 4)))
        np.testing.assert_array_equal(q.matrix, np.zeros((4, 4)))

    def test_rejects_symmetric_input(self):
        coeffs = np.zeros((4, 4), dtype=complex)
        coeffs[0, 1] = coeffs[1, 0] = 1
        with pytest.raises(ValueError):
            qo_realize(coeffs)

    def test_lowered_matrix_antisymmetric(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            q = qo_realize(antisym(rng.standard_normal((4, 4))
                                   + 1j * rng.standard_normal((4, 4))))
            lowered = q.matrix.T @ ETA
            np.testing.assert_allclose(lowered, -lowered.T, atol=1e-12)

    def test_roundtrip_through_operator(self):
        rng = np.random.default_rng(6)
        q = qo_realize(antisym(rng.standard_normal((4, 4))))
        q2 = qo_from_operator(q.matrix)
        np.testing.assert_allclose(q2.coeffs, q.coeffs, atol=1e-12)

    def test_from_operator_rejects_outsiders(self):
        with pytest.raises(ValueError):
            qo_from_operator(np.eye(4))


class TestMembership:
    def test_identity_in_group_not_algebra(self):
        assert is_quasi_orthogonal(np.eye(4))
        assert not is_in_qo(np.eye(4))

    def test_boost_flow_in_group(self):
        for phi in (0.5, 1.0, 2.0):
            assert is_quasi_orthogonal(exponential_flow(d_basis(0, 1), phi))

    def test_scaling_breaks_group(self):
        assert not is_quasi_orthogonal(np.diag([2.0, 1.0, 1.0, 1.0]))

    def test_generators_in_algebra(self):
        assert is_in_qo(d_basis(0, 1))
        assert is_in_qo(1j * d_basis(2, 3))

    def test_algebra_exponentiates_into_group(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            q = qo_realize(antisym(rng.standard_normal((4, 4))
                                   + 1j * rng.standard_normal((4, 4))))
            for t in (0.1, 1.0, 2.5):
                assert is_quasi_orthogonal(exponential_flow(q.matrix, t))


class TestCommutator:
    def test_self_commutator(self):
        np.testing.assert_array_equal(commutator(d_basis(0, 1), d_basis(0, 1)),
                                      np.zeros((4, 4)))

    def test_shared_index(self):
        # one contraction survives: eta_11 d_basis(0,2)
        np.testing.assert_allclose(commutator(d_basis(0, 1), d_basis(1, 2)),
                                   -d_basis(0, 2))

    def test_disjoint_indices_commute(self):
        np.testing.assert_array_equal(commutator(d_basis(0, 1), d_basis(2, 3)),
                                      np.zeros((4, 4)))

    def test_full_bracket_table(self):
        dmat = qo_basis()
        for (m, n) in QO_BASIS_PAIRS:
            for (a, b) in QO_BASIS_PAIRS:
                lhs = commutator(dmat[(m, n)], dmat[(a, b)])
                rhs = (ETA[n, a] * d_basis(m, b) - ETA[m, a] * d_basis(n, b)
                       + ETA[n, b] * d_basis(a, m) - ETA[m, b] * d_basis(a, n))
                np.testing.assert_allclose(lhs, rhs, atol=1e-13)


class TestDimension:
    def test_six_independent_generators(self):
        flat = np.stack([d_basis(*p).reshape(16) for p in QO_BASIS_PAIRS])
        assert np.linalg.matrix_rank(flat, tol=1e-10) == 6

    def test_every_algebra_member_in_span(self):
        # nullspace of X -> X^T eta + eta X has dimension 6 and projects
        # onto the generator span without loss
        constraint = np.zeros((16, 16))
        eye = np.eye(4)
        for i in range(4):
            for j in range(4):
                e = np.outer(eye[i], eye[j])
                constraint[:, 4 * i + j] = (e.T @ ETA + ETA @ e).reshape(16)
        rank = np.linalg.matrix_rank(constraint, tol=1e-10)
        assert 16 - rank == 6
        _, _, vh = np.linalg.svd(constraint)
        null_basis = vh[rank:]
        flat = np.stack([d_basis(*p).reshape(16) for p in QO_BASIS_PAIRS])
        proj = null_basis @ np.linalg.pinv(flat) @ flat
        assert np.abs(proj - null_basis).max() < 1e-12


class TestGradedBracket:
    def test_operator_acts_on_vector(self):
        x = GradedElement.from_operator(qo_from_operator(d_basis(0, 1)))
        y = GradedElement.from_vector(basis(0))
        br = graded_bracket(x, y)
        np.testing.assert_allclose(br.l1, -basis(1), atol=1e-14)
        assert br.l2 == 0

    def test_vector_pair_lands_in_scalars(self):
        br = graded_bracket(GradedElement.from_vector(basis(0)),
                            GradedElement.from_vector(1j * basis(0)))
        assert br.l2 == pytest.approx(1.0)
        np.testing.assert_array_equal(br.l1, np.zeros(4))

    def test_scalars_are_central(self):
        one = GradedElement.from_scalar(1.0)
        rng = np.random.default_rng(8)
        x = GradedElement(qo_realize(antisym(rng.standard_normal((4, 4)))),
                          rng.standard_normal(4), 2.0 + 1j)
        br = graded_bracket(one, x)
        assert br.norm() < 1e-15

    def test_antisymmetry(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            def elem():
                return GradedElement(
                    qo_realize(antisym(rng.standard_normal((4, 4))
                                       + 1j * rng.standard_normal((4, 4)))),
                    rng.standard_normal(4) + 1j * rng.standard_normal(4),
                    complex(*rng.standard_normal(2)))
            x, y = elem(), elem()
            assert (graded_bracket(x, y) + graded_bracket(y, x)).norm() < 1e-12

    def test_jacobi_on_real_form(self):
        rng = np.random.default_rng(10)
        for _ in range(100):
            def elem():
                return GradedElement(
                    qo_realize(antisym(rng.standard_normal((4, 4)))),
                    rng.standard_normal(4) + 1j * rng.standard_normal(4),
                    complex(*rng.standard_normal(2)))
            x, y, z = elem(), elem(), elem()
            s = (graded_bracket(graded_bracket(x, y), z)
                 + graded_bracket(graded_bracket(y, z), x)
                 + graded_bracket(graded_bracket(z, x), y))
            assert s.norm() / max(1.0, x.norm() * y.norm() * z.norm()) < 1e-10

    def test_jacobi_defect_for_imaginary_operator(self):
        # documented limitation: an imaginary grade-0 part breaks the mixed
        # Jacobi identity because the grade-2 pairing is real-valued
        a = GradedElement.from_operator(qo_from_operator(1j * d_basis(0, 1)))
        v = GradedElement.from_vector(basis(0))
        w = GradedElement.from_vector(basis(1))
        s = (graded_bracket(graded_bracket(a, v), w)
             + graded_bracket(graded_bracket(v, w), a)
             + graded_bracket(graded_bracket(w, a), v))
        assert s.l2 == pytest.approx(-2.0)


class TestQoElementArithmetic:
    def test_add_and_scale(self):
        q1 = qo_from_operator(d_basis(0, 1))
        q2 = qo_from_operator(d_basis(2, 3))
        s = q1 + 2j * q2
        np.testing.assert_allclose(s.matrix, d_basis(0, 1) + 2j * d_basis(2, 3))

    def test_immutability(self):
        q = qo_from_operator(d_basis(0, 1))
        with pytest.raises(ValueError):
            q.matrix[0, 0] = 5.0
