"""Constructors and certification for conjugations on coefficient space.

A conjugation is an antilinear map C that is isometric (<Cf, Cg> = <g, f>)
and involutive (C^2 = I). In the factored form C(f) = A @ conj(f) these two
axioms are equivalent to the linear factor A being unitary and
transpose-symmetric, which is what :func:`verify_conjugation` certifies.

The constructors cover the diagonal families (plain coefficient
conjugation, a rotation twist by a unimodular scalar, an explicit phase
per coefficient, and squared powers of a unimodular sequence) plus the
general form U* . conj . U for any unitary U.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import AntilinearMap, adjoint, frobenius_norm, inner_product

__all__ = [
    "ConjugationCert",
    "NotUnitaryError",
    "canonical_conjugation",
    "coefficient_matrix",
    "conjugation_from_unitary",
    "factor_diagonal",
    "orthonormalize",
    "phase_conjugation",
    "random_unitary",
    "rotation_conjugation",
    "sequence_conjugation",
    "sequence_unitary",
    "squared_powers",
    "unimodular",
    "verify_conjugation",
]

#: Construction-time tolerance on |value| == 1; inputs inside it are
#: renormalized to exact modulus one so downstream residuals reflect the
#: algebra, not input noise.
UNIMODULAR_TOL = 1e-12


def unimodular(values, tol: float = UNIMODULAR_TOL, start_index: int = 0) -> np.ndarray:
    """Check every entry has modulus 1 within ``tol``, then renormalize.

    ``start_index`` sets the index reported in the error message; the
    squared-sequence family is conventionally indexed from 1.
    """
    v = np.atleast_1d(np.asarray(values, dtype=np.complex128))
    if v.ndim != 1:
        raise ValueError(f"expected a 1-D sequence, got shape {v.shape}")
    mod = np.abs(v)
    bad = np.nonzero(~np.isfinite(mod) | (np.abs(mod - 1.0) > tol))[0]
    if bad.size:
        k = int(bad[0])
        raise ValueError(
            f"entry at index {k + start_index} has modulus {mod[k]:.12g}, "
            f"expected 1 within {tol:g}"
        )
    return v / mod


def canonical_conjugation(dim: int) -> AntilinearMap:
    """Entrywise coefficient conjugation, i.e. f(z) -> conj(f(conj(z)))."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    return AntilinearMap(np.eye(dim, dtype=np.complex128))


def rotation_conjugation(lam: complex, dim: int) -> AntilinearMap:
    """Conjugation twisted by a disk rotation: f(z) -> conj(f(lam * conj(z))).

    Coefficient n picks up the factor conj(lam**n); ``lam`` must be
    unimodular.
    """
    if dim < 1:
        raise ValueError("dimension must be positive")
    lam = complex(unimodular([lam])[0])
    diag = np.conj(lam ** np.arange(dim))
    return AntilinearMap(np.diag(diag))


def phase_conjugation(phases) -> AntilinearMap:
    """Conjugation followed by a fixed unimodular phase per coefficient.

    ``phases`` lists the multipliers for coefficients 0 .. N-1; the result
    acts on dimension N = len(phases).
    """
    alpha = unimodular(phases)
    return AntilinearMap(np.diag(alpha))


def squared_powers(zeta) -> np.ndarray:
    """Multipliers zeta_n ** (2n) for n = 0 .. len(zeta), entry 0 fixed to 1.

    ``zeta`` is indexed from 1, so ``zeta[j]`` is the entry for n = j + 1.
    No unimodularity check is performed here.
    """
    z = np.asarray(zeta, dtype=np.complex128)
    n = np.arange(1, z.size + 1)
    return np.concatenate(([1.0 + 0.0j], z ** (2 * n)))


def sequence_conjugation(zeta) -> AntilinearMap:
    """Conjugation with multiplier conj(zeta_n ** (2n)) on coefficient n.

    ``zeta`` lists the unimodular entries for indices 1 .. N-1; the result
    acts on dimension N = len(zeta) + 1, with multiplier 1 at n = 0. A
    constant sequence with value w reduces to ``rotation_conjugation(w**2)``.
    """
    z = unimodular(zeta, start_index=1)
    return AntilinearMap(np.diag(np.conj(squared_powers(z))))


def sequence_unitary(zeta) -> np.ndarray:
    """Diagonal unitary sending the monomial z^n to (zeta_n * z)^n.

    Its columns are the rescaled orthonormal basis {1, zeta_1 z,
    zeta_2^2 z^2, ...}; feeding it to :func:`conjugation_from_unitary`
    reproduces :func:`sequence_conjugation` on the same sequence.
    """
    z = unimodular(zeta, start_index=1)
    n = np.arange(1, z.size + 1)
    return np.diag(np.concatenate(([1.0 + 0.0j], z ** n)))


class NotUnitaryError(ValueError):
    """Input matrix failed the unitarity check; carries the residual."""

    def __init__(self, residual: float, tol: float):
        self.residual = residual
        self.tol = tol
        super().__init__(
            f"matrix is not unitary: ||U*U - I||_F = {residual:.3e} exceeds {tol:g}"
        )


def conjugation_from_unitary(u, tol: float = 1e-8) -> AntilinearMap:
    """Conjugation U* . conj . U for a unitary U; the linear factor is U^H conj(U).

    Every conjugation on the full space arises this way, and the factor
    U^H conj(U) is automatically unitary and transpose-symmetric.
    """
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {u.shape}")
    residual = frobenius_norm(adjoint(u) @ u - np.eye(u.shape[0]))
    if residual > tol:
        raise NotUnitaryError(residual, tol)
    return AntilinearMap(adjoint(u) @ np.conj(u))


def coefficient_matrix(op: AntilinearMap) -> np.ndarray:
    """Matrix whose column n holds the expansion coefficients of op(z^n).

    Since op(e_n) = a_matrix @ conj(e_n) = a_matrix[:, n], this is exactly
    the linear factor; it is returned as a fresh writable copy.
    """
    return op.a_matrix.copy()


def factor_diagonal(op: AntilinearMap, tol: float = 1e-10) -> np.ndarray:
    """Diagonal unitary U with conjugation_from_unitary(U) equal to ``op``.

    Requires the linear factor of ``op`` to be diagonal with unimodular
    entries within ``tol``. Each U entry is the principal square root of
    the conjugated diagonal entry; any other branch choice differs by a
    sign and produces the same conjugation.
    """
    a = op.a_matrix
    d = np.diag(a).copy()
    off = frobenius_norm(a - np.diag(d))
    if off > tol:
        raise ValueError(f"linear factor is not diagonal: off-diagonal norm {off:.3e}")
    if np.max(np.abs(np.abs(d) - 1.0)) > tol:
        raise ValueError("diagonal entries are not unimodular")
    d /= np.abs(d)
    return np.diag(np.sqrt(np.conj(d)))


def orthonormalize(matrix) -> np.ndarray:
    """Orthonormalize columns by modified Gram-Schmidt with a second pass.

    The re-orthogonalization pass keeps ||Q*Q - I||_F near machine epsilon
    even at a few hundred dimensions.
    """
    q = np.array(matrix, dtype=np.complex128)
    if q.ndim != 2 or q.shape[0] != q.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {q.shape}")
    n = q.shape[1]
    for _ in range(2):
        for j in range(n):
            nrm = np.linalg.norm(q[:, j])
            if nrm == 0.0:
                raise ValueError("columns are rank deficient")
            q[:, j] /= nrm
            if j + 1 < n:
                q[:, j + 1 :] -= np.outer(q[:, j], np.conj(q[:, j]) @ q[:, j + 1 :])
    return q


def random_unitary(dim: int, seed) -> np.ndarray:
    """Seeded random unitary: orthonormalized standard complex Gaussian matrix.

    Deterministic in ``seed`` (anything accepted by
    ``numpy.random.default_rng``).
    """
    if dim < 1:
        raise ValueError("dimension must be positive")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return orthonormalize(z)


@dataclass(frozen=True)
class ConjugationCert:
    """Residuals of the two conjugation axioms and of the factor structure.

    ``isometry_residual`` and ``involution_residual`` come from seeded
    random sampling; ``a_unitarity_residual`` = ||A*A - I||_F and
    ``a_symmetry_residual`` = ||A - A^T||_F are deterministic matrix
    checks. ``passed`` is True iff all four are at most ``tol``.
    """

    isometry_residual: float
    involution_residual: float
    a_unitarity_residual: float
    a_symmetry_residual: float
    tol: float
    passed: bool


def _unit_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def verify_conjugation(
    op: AntilinearMap, trials: int = 100, tol: float = 1e-10, seed=0
) -> ConjugationCert:
    """Certify the conjugation axioms for an antilinear map.

    Never raises on failure: invalid candidates are part of the intended
    input space, and the certificate reports how they fail.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    a = op.a_matrix
    n = op.dim
    eye = np.eye(n)
    a_unitarity = frobenius_norm(adjoint(a) @ a - eye)
    a_symmetry = frobenius_norm(a - a.T)

    rng = np.random.default_rng(seed)
    isometry = 0.0
    involution = 0.0
    for _ in range(trials):
        f = _unit_vector(rng, n)
        g = _unit_vector(rng, n)
        isometry = max(isometry, abs(inner_product(op(f), op(g)) - inner_product(g, f)))
        involution = max(involution, float(np.linalg.norm(op(op(f)) - f)))

    passed = max(isometry, involution, a_unitarity, a_symmetry) <= tol
    return ConjugationCert(
        isometry_residual=isometry,
        involution_residual=involution,
        a_unitarity_residual=a_unitarity,
        a_symmetry_residual=a_symmetry,
        tol=tol,
        passed=passed,
    )
