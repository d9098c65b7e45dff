"""Unit tests for the conjugation constructors and their certification."""

import numpy as np
import pytest

from hardyconj import (
    AntilinearMap,
    NotUnitaryError,
    canonical_conjugation,
    coefficient_matrix,
    conjugation_from_unitary,
    factor_diagonal,
    orthonormalize,
    phase_conjugation,
    random_unitary,
    rotation_conjugation,
    sequence_conjugation,
    sequence_unitary,
    unimodular,
    verify_conjugation,
)


def random_angles(rng, n):
    return rng.uniform(0.0, 2.0 * np.pi, n)


class TestUnimodular:
    def test_renormalizes(self):
        v = unimodular([1.0 + 1e-14])
        assert abs(v[0]) == 1.0

    def test_error_names_offending_index(self):
        with pytest.raises(ValueError, match="index 2"):
            unimodular([1.0, 1j, 0.5])

    def test_start_index_shifts_error_message(self):
        with pytest.raises(ValueError, match="index 3"):
            unimodular([1.0, 1j, 0.5], start_index=1)


class TestCanonicalConjugation:
    def test_entrywise_conjugation(self):
        j = canonical_conjugation(2)
        np.testing.assert_allclose(j([1 + 1j, 2.0]), [1 - 1j, 2.0])

    def test_involution_on_random_vectors(self):
        j = canonical_conjugation(8)
        rng = np.random.default_rng(1)
        for _ in range(100):
            f = rng.standard_normal(8) + 1j * rng.standard_normal(8)
            np.testing.assert_allclose(j(j(f)), f, atol=1e-15)

    def test_fixes_real_basis_vectors(self):
        j = canonical_conjugation(4)
        for n in range(4):
            e = np.zeros(4)
            e[n] = 1.0
            np.testing.assert_allclose(j(e), e)


class TestRotationConjugation:
    def test_unit_rotation_is_canonical(self):
        np.testing.assert_allclose(
            rotation_conjugation(1.0, 5).a_matrix, canonical_conjugation(5).a_matrix
        )

    def test_half_turn(self):
        op = rotation_conjugation(-1.0, 3)
        np.testing.assert_allclose(op([1.0, 1.0, 1.0]), [1.0, -1.0, 1.0])

    def test_quarter_turn(self):
        op = rotation_conjugation(1j, 3)
        np.testing.assert_allclose(op([0.0, 1.0, 0.0]), [0.0, -1j, 0.0])

    def test_rejects_non_unimodular(self):
        with pytest.raises(ValueError, match="modulus"):
            rotation_conjugation(2.0, 4)


class TestPhaseConjugation:
    def test_conjugate_powers_reproduce_rotation(self):
        rng = np.random.default_rng(3)
        for theta in random_angles(rng, 10):
            lam = np.exp(1j * theta)
            alpha = np.conj(lam ** np.arange(16))
            np.testing.assert_allclose(
                phase_conjugation(alpha).a_matrix,
                rotation_conjugation(lam, 16).a_matrix,
                atol=1e-12,
            )

    def test_all_ones_is_canonical(self):
        np.testing.assert_allclose(
            phase_conjugation(np.ones(6)).a_matrix, canonical_conjugation(6).a_matrix
        )

    def test_two_entry_example(self):
        op = phase_conjugation([1.0, -1.0])
        np.testing.assert_allclose(op([1j, 1j]), [-1j, 1j])

    def test_rejects_non_unimodular_entry(self):
        with pytest.raises(ValueError, match="index 1"):
            phase_conjugation([1.0, 0.9, 1j])


class TestSequenceConjugation:
    def test_constant_half_angle_matches_rotation(self):
        # constant entries exp(i theta/2) give multiplier conj(exp(i theta))**n
        rng = np.random.default_rng(7)
        for theta in random_angles(rng, 10):
            zeta = np.full(31, np.exp(1j * theta / 2.0))
            lam = np.exp(1j * theta)
            np.testing.assert_allclose(
                sequence_conjugation(zeta).a_matrix,
                rotation_conjugation(lam, 32).a_matrix,
                atol=1e-12,
            )

    def test_half_turn_multipliers_alternate(self):
        zeta = np.full(7, np.exp(1j * np.pi / 2.0))
        diag = np.diag(sequence_conjugation(zeta).a_matrix)
        np.testing.assert_allclose(diag, (-1.0) ** np.arange(8), atol=1e-12)

    def test_conjugated_root_entries_give_explicit_phases(self):
        # zeta_n = conj(exp(i theta_n / (2n))) makes coefficient n pick up exp(i theta_n)
        rng = np.random.default_rng(9)
        thetas = random_angles(rng, 15)
        n = np.arange(1, 16)
        zeta = np.conj(np.exp(1j * thetas / (2.0 * n)))
        alpha = np.concatenate(([1.0], np.exp(1j * thetas)))
        np.testing.assert_allclose(
            sequence_conjugation(zeta).a_matrix,
            phase_conjugation(alpha).a_matrix,
            atol=1e-12,
        )

    def test_all_ones_is_canonical(self):
        np.testing.assert_allclose(
            sequence_conjugation(np.ones(5)).a_matrix, canonical_conjugation(6).a_matrix
        )

    def test_rejects_non_unimodular_entry(self):
        with pytest.raises(ValueError, match="index 2"):
            sequence_conjugation([1j, 1.5])


class TestSequenceUnitary:
    def test_rescaled_basis_is_orthonormal(self):
        rng = np.random.default_rng(13)
        for _ in range(20):
            zeta = np.exp(1j * random_angles(rng, 31))
            u = sequence_unitary(zeta)
            assert np.linalg.norm(u.conj().T @ u - np.eye(32)) <= 1e-12


class TestConjugationFromUnitary:
    def test_diagonal_powers_reproduce_sequence_family(self):
        rng = np.random.default_rng(15)
        zeta = np.exp(1j * random_angles(rng, 23))
        via_unitary = conjugation_from_unitary(sequence_unitary(zeta))
        direct = sequence_conjugation(zeta)
        np.testing.assert_allclose(via_unitary.a_matrix, direct.a_matrix, atol=1e-12)

    def test_identity_gives_canonical(self):
        np.testing.assert_allclose(
            conjugation_from_unitary(np.eye(6)).a_matrix, canonical_conjugation(6).a_matrix
        )

    def test_random_unitary_passes_axioms(self):
        for seed in range(5):
            op = conjugation_from_unitary(random_unitary(24, seed))
            cert = verify_conjugation(op, trials=60, tol=1e-10, seed=seed)
            assert cert.passed

    def test_factor_is_unitary_and_transpose_symmetric(self):
        for seed in range(10):
            a = conjugation_from_unitary(random_unitary(32, seed)).a_matrix
            assert np.linalg.norm(a.conj().T @ a - np.eye(32)) <= 1e-10
            assert np.linalg.norm(a - a.T) <= 1e-10

    def test_rejects_non_unitary_and_carries_residual(self):
        with pytest.raises(NotUnitaryError) as err:
            conjugation_from_unitary(2.0 * np.eye(3))
        assert err.value.residual == pytest.approx(3.0 * np.sqrt(3.0))


class TestCoefficientMatrix:
    def test_rotation_expansion_is_diagonal_in_conjugate_powers(self):
        theta = 0.8
        lam = np.exp(1j * theta)
        b = coefficient_matrix(rotation_conjugation(lam, 12))
        np.testing.assert_allclose(b, np.diag(np.conj(lam ** np.arange(12))), atol=1e-14)

    def test_conjugated_root_sequence_expansion_is_phase_diagonal(self):
        rng = np.random.default_rng(21)
        thetas = random_angles(rng, 11)
        n = np.arange(1, 12)
        zeta = np.conj(np.exp(1j * thetas / (2.0 * n)))
        b = coefficient_matrix(sequence_conjugation(zeta))
        expected = np.diag(np.concatenate(([1.0], np.exp(1j * thetas))))
        np.testing.assert_allclose(b, expected, atol=1e-12)

    def test_canonical_gives_identity(self):
        np.testing.assert_allclose(coefficient_matrix(canonical_conjugation(4)), np.eye(4))

    def test_columns_orthonormal_for_valid_conjugations(self):
        b = coefficient_matrix(conjugation_from_unitary(random_unitary(16, 4)))
        np.testing.assert_allclose(b.conj().T @ b, np.eye(16), atol=1e-12)

    def test_returns_writable_copy(self):
        op = canonical_conjugation(3)
        b = coefficient_matrix(op)
        b[0, 0] = 7.0
        assert op.a_matrix[0, 0] == 1.0


class TestVerifyConjugation:
    def test_valid_sequence_conjugation_passes(self):
        rng = np.random.default_rng(23)
        zeta = np.exp(1j * random_angles(rng, 63))
        cert = verify_conjugation(sequence_conjugation(zeta), trials=100, seed=0)
        assert cert.passed
        assert cert.isometry_residual <= 1e-10
        assert cert.involution_residual <= 1e-10

    def test_scaling_fails_isometry_and_unitarity(self):
        cert = verify_conjugation(AntilinearMap(2.0 * np.eye(4)), trials=20, seed=1)
        assert not cert.passed
        assert cert.isometry_residual > 1e-10
        assert cert.a_unitarity_residual > 1e-10

    def test_antisymmetric_unitary_fails_involution_and_symmetry_only(self):
        op = AntilinearMap(np.array([[0.0, 1.0], [-1.0, 0.0]]))
        cert = verify_conjugation(op, trials=50, seed=2)
        assert not cert.passed
        assert cert.isometry_residual <= 1e-10
        assert cert.a_unitarity_residual <= 1e-10
        assert cert.involution_residual > 1e-10
        assert cert.a_symmetry_residual > 1e-10

    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError, match="trials"):
            verify_conjugation(canonical_conjugation(2), trials=0)


class TestFactorDiagonal:
    def test_rotation_factor_has_half_angle_entries(self):
        # small angle keeps every principal square root on the expected branch
        theta = 0.3
        u = factor_diagonal(rotation_conjugation(np.exp(1j * theta), 8))
        np.testing.assert_allclose(np.diag(u), np.exp(1j * theta / 2.0 * np.arange(8)), atol=1e-12)

    def test_canonical_factors_to_identity(self):
        np.testing.assert_allclose(factor_diagonal(canonical_conjugation(5)), np.eye(5))

    def test_round_trip_on_random_diagonal_conjugations(self):
        rng = np.random.default_rng(29)
        for _ in range(50):
            d = np.exp(1j * random_angles(rng, 16))
            op = AntilinearMap(np.diag(d))
            rebuilt = conjugation_from_unitary(factor_diagonal(op))
            assert np.linalg.norm(rebuilt.a_matrix - op.a_matrix) <= 1e-10

    def test_rejects_non_diagonal(self):
        op = conjugation_from_unitary(random_unitary(6, 0))
        with pytest.raises(ValueError, match="not diagonal"):
            factor_diagonal(op)

    def test_rejects_non_unimodular_diagonal(self):
        with pytest.raises(ValueError, match="unimodular"):
            factor_diagonal(AntilinearMap(np.diag([1.0, 0.5])))


class TestRandomUnitary:
    def test_dimension_one_is_unimodular(self):
        u = random_unitary(1, 0)
        assert abs(abs(u[0, 0]) - 1.0) <= 1e-12

    def test_deterministic_in_seed(self):
        np.testing.assert_array_equal(random_unitary(8, 42), random_unitary(8, 42))

    def test_unitarity_across_seeds(self):
        for seed in range(20):
            u = random_unitary(64, seed)
            assert np.linalg.norm(u.conj().T @ u - np.eye(64)) <= 1e-10

    def test_orthonormalize_rejects_rank_deficient(self):
        with pytest.raises(ValueError, match="rank"):
            orthonormalize(np.zeros((3, 3)))


class TestAxiomSuite:
    """Every constructor family satisfies both axioms at small and medium size."""

    @pytest.mark.parametrize("dim", [8, 64])
    def test_all_families(self, dim):
        rng = np.random.default_rng(31)
        ops = [canonical_conjugation(dim)]
        for _ in range(3):
            ops.append(rotation_conjugation(np.exp(1j * rng.uniform(0, 2 * np.pi)), dim))
            ops.append(phase_conjugation(np.exp(1j * random_angles(rng, dim))))
            ops.append(sequence_conjugation(np.exp(1j * random_angles(rng, dim - 1))))
            ops.append(conjugation_from_unitary(random_unitary(dim, rng.integers(1 << 31))))
        for op in ops:
            cert = verify_conjugation(op, trials=40, tol=1e-10, seed=0)
            assert cert.passed, cert
