"""Band-limited symbols, Toeplitz finite sections, and symmetry criteria.

A Toeplitz operator with symbol phi acts by multiplication followed by
projection onto nonnegative frequencies; its N x N finite section has
entries c(j - k) where c(n) is the n-th Laurent coefficient of phi. An
operator T is symmetric with respect to a conjugation C when C T = T* C.

For a diagonal conjugation with multipliers w_n on the conjugated
coefficients this identity is equivalent, entry by entry and with no
truncation error, to

    c(j - k) * w_j == w_k * c(k - j)   for all 0 <= j, k < N,

while the classical one-sided criterion reads c(n) * w_n == c(-n) for
n >= 0. The two coincide whenever w is multiplicative in the index (in
particular for the rotation family w_n = lam**n) but the one-sided form
is weaker in general; :func:`explore_symmetry` measures how often they
disagree against the operator-residual oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .conjugations import (
    conjugation_from_unitary,
    orthonormalize,
    sequence_conjugation,
    squared_powers,
    unimodular,
)
from .core import AntilinearMap, frobenius_norm

__all__ = [
    "ConditionReport",
    "ExplorationRecord",
    "EXPLORE_MODES",
    "LaurentSymbol",
    "SymmetryReport",
    "diagonal_multipliers",
    "entrywise_condition",
    "evaluate_on_grid",
    "explore_symmetry",
    "fourier_coefficients",
    "generate_symmetric_symbol",
    "matrix_bandwidth",
    "multiply_truncate",
    "onesided_condition",
    "random_symbol",
    "rotation_condition",
    "rotation_multipliers",
    "run_trial",
    "sequence_condition",
    "sequence_entrywise_condition",
    "sequence_multipliers",
    "summarize_exploration",
    "symmetry_report",
    "symmetry_residual",
    "toeplitz_section",
]

DEFAULT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class LaurentSymbol:
    """Trigonometric polynomial sum_{|n| <= band} c(n) z^n.

    Coefficients are stored densely: ``coeffs[k]`` holds c(k - band).
    Instances are immutable; two symbols compare equal iff band and all
    coefficients match exactly.
    """

    band: int
    coeffs: np.ndarray

    def __post_init__(self):
        if self.band < 0:
            raise ValueError("band must be nonnegative")
        c = np.asarray(self.coeffs, dtype=np.complex128).copy()
        if c.shape != (2 * self.band + 1,):
            raise ValueError(
                f"coefficient array has shape {c.shape}, expected ({2 * self.band + 1},)"
            )
        if not np.all(np.isfinite(c)):
            raise ValueError("symbol coefficients contain non-finite entries")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_pairs(cls, pairs, band: int | None = None) -> "LaurentSymbol":
        """Build from a mapping or iterable of (n, value); missing n are zero."""
        items = dict(pairs)
        if band is None:
            band = max((abs(int(n)) for n in items), default=0)
        c = np.zeros(2 * band + 1, dtype=np.complex128)
        for n, value in items.items():
            n = int(n)
            if abs(n) > band:
                raise ValueError(f"coefficient index {n} exceeds band {band}")
            c[n + band] = value
        return cls(band, c)

    def coeff(self, n: int) -> complex:
        """c(n), zero outside the band."""
        if abs(n) > self.band:
            return 0.0 + 0.0j
        return complex(self.coeffs[n + self.band])

    def coeff_array(self) -> np.ndarray:
        """Dense copy of c(-band) .. c(band)."""
        return self.coeffs.copy()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSymbol):
            return NotImplemented
        return self.band == other.band and bool(np.array_equal(self.coeffs, other.coeffs))


def random_symbol(band: int, rng: np.random.Generator, scale: float = 1.0) -> LaurentSymbol:
    """Random symbol with complex Gaussian coefficients damped by 1/(1+|n|).

    The decay mimics a smooth symbol and keeps residual magnitudes
    comparable across random trials.
    """
    n = np.arange(-band, band + 1)
    raw = rng.standard_normal(2 * band + 1) + 1j * rng.standard_normal(2 * band + 1)
    return LaurentSymbol(band, scale * raw / (1.0 + np.abs(n)))


def evaluate_on_grid(symbol: LaurentSymbol, num_points: int) -> np.ndarray:
    """Values of the symbol at the num_points-th roots of unity.

    Direct power-sum evaluation, independent of any FFT path, so it can
    serve as a synthesis oracle for :func:`fourier_coefficients`.
    """
    if num_points < 1:
        raise ValueError("need at least one grid point")
    z = np.exp(2j * np.pi * np.arange(num_points) / num_points)
    out = np.zeros(num_points, dtype=np.complex128)
    for n in range(-symbol.band, symbol.band + 1):
        out += symbol.coeff(n) * z**n
    return out


def fourier_coefficients(samples, band: int) -> LaurentSymbol:
    """Laurent coefficients c(n), |n| <= band, from uniform circle samples.

    ``samples`` holds the symbol values at exp(2 pi i k / K) for
    k = 0 .. K-1. Exact (to roundoff) for trigonometric polynomials of
    degree <= band once K >= 2*band + 1; fewer samples alias and raise.
    """
    samples = np.asarray(samples, dtype=np.complex128)
    if samples.ndim != 1:
        raise ValueError(f"expected a 1-D sample array, got shape {samples.shape}")
    k = samples.size
    if k < 2 * band + 1:
        raise ValueError(
            f"{k} samples alias at band {band}; need at least {2 * band + 1}"
        )
    spectrum = np.fft.fft(samples) / k
    if band == 0:
        return LaurentSymbol(0, spectrum[:1])
    coeffs = np.concatenate((spectrum[-band:], spectrum[: band + 1]))
    return LaurentSymbol(band, coeffs)


def toeplitz_section(symbol: LaurentSymbol, dim: int) -> np.ndarray:
    """N x N finite section with entries c(j - k)."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    col = np.array([symbol.coeff(j) for j in range(dim)])
    row = np.array([symbol.coeff(-k) for k in range(dim)])
    return scipy.linalg.toeplitz(col, row)


def multiply_truncate(symbol: LaurentSymbol, f) -> np.ndarray:
    """Coefficients 0 .. len(f)-1 of phi * f by direct convolution.

    This is the multiply-then-project oracle for :func:`toeplitz_section`.
    """
    f = np.asarray(f, dtype=np.complex128)
    if f.ndim != 1 or f.size == 0:
        raise ValueError(f"expected a nonempty 1-D vector, got shape {f.shape}")
    full = np.convolve(symbol.coeff_array(), f)
    return full[symbol.band : symbol.band + f.size]


def matrix_bandwidth(matrix, tol: float = 1e-12) -> int:
    """Smallest B with all entries beyond the B-th diagonals below ``tol``."""
    m = np.abs(np.asarray(matrix))
    rows, cols = np.nonzero(m >= tol)
    if rows.size == 0:
        return 0
    return int(np.max(np.abs(rows - cols)))


def symmetry_residual(op: AntilinearMap, section, window: int | None = None) -> float:
    """Frobenius norm of the leading window of A conj(T) - T^H A.

    With C(f) = A conj(f), the identity C T = T* C holds on the section
    iff this matrix vanishes; the residual is exactly zero-truncation for
    diagonal A, while for banded A a reduced window isolates the algebra
    from edge effects.
    """
    a = op.a_matrix
    t = np.asarray(section, dtype=np.complex128)
    if t.shape != a.shape:
        raise ValueError(f"section shape {t.shape} does not match operator shape {a.shape}")
    n = t.shape[0]
    w = n if window is None else int(window)
    if not 0 < w <= n:
        raise ValueError(f"window must be in 1..{n}, got {w}")
    r = a @ np.conj(t) - np.conj(t).T @ a
    return frobenius_norm(r[:w, :w])


def rotation_multipliers(lam: complex, count: int) -> np.ndarray:
    """Multipliers lam**n for n = 0 .. count-1."""
    lam = complex(unimodular([lam])[0])
    return lam ** np.arange(count)


def sequence_multipliers(zeta, count: int) -> np.ndarray:
    """Multipliers zeta_n ** (2n) for n = 0 .. count-1 (1 at n = 0).

    ``zeta`` is indexed from 1 and must cover indices 1 .. count-1.
    """
    z = unimodular(zeta, start_index=1)
    if z.size < count - 1:
        raise ValueError(
            f"sequence covers indices 1..{z.size}, need 1..{count - 1}"
        )
    return squared_powers(z[: count - 1])


def diagonal_multipliers(op: AntilinearMap, tol: float = 1e-10) -> np.ndarray:
    """Coefficient-condition multipliers conj(d_n) * d_0 of a diagonal conjugation.

    For the rotation family this gives lam**n, for an explicit phase
    family conj(phase_n) * phase_0, and for the squared-sequence family
    zeta_n ** (2n).
    """
    a = op.a_matrix
    d = np.diag(a).copy()
    off = frobenius_norm(a - np.diag(d))
    if off > tol:
        raise ValueError(f"linear factor is not diagonal: off-diagonal norm {off:.3e}")
    # validate but do not renormalize: constructed diagonals are exact already,
    # and renormalizing here would perturb multipliers that the one-sided
    # completion rule reproduces bit for bit
    if np.max(np.abs(np.abs(d) - 1.0)) > 1e-8:
        raise ValueError("diagonal entries are not unimodular")
    return np.conj(d) * d[0]


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a coefficient criterion: flag plus worst violation."""

    holds: bool
    max_violation: float
    tol: float


def onesided_condition(symbol: LaurentSymbol, multipliers, tol: float = DEFAULT_TOL) -> ConditionReport:
    """Check c(n) * w_n == c(-n) for n = 0 .. band.

    Negative n give the equivalent constraints (the multipliers are
    unimodular), so scanning n >= 0 suffices.
    """
    m = symbol.band
    w = np.asarray(multipliers, dtype=np.complex128)
    if w.size < m + 1:
        raise ValueError(f"multipliers cover 0..{w.size - 1}, need 0..{m}")
    # scalar arithmetic on purpose: it matches the completion rule in
    # generate_symmetric_symbol bit for bit, so completed symbols report a
    # violation of exactly zero
    violation = max(
        abs(symbol.coeff(n) * w[n] - symbol.coeff(-n)) for n in range(m + 1)
    )
    violation = float(violation)
    return ConditionReport(holds=violation <= tol, max_violation=violation, tol=tol)


def entrywise_condition(
    symbol: LaurentSymbol, multipliers, dim: int, tol: float = DEFAULT_TOL
) -> ConditionReport:
    """Check c(j-k) * w_j == w_k * c(k-j) over the full dim x dim section.

    Equivalent to a vanishing :func:`symmetry_residual` for the diagonal
    conjugation with these multipliers; stated on coefficients it needs no
    matrix products. Scaling the section by the multipliers turns the
    check into plain transpose symmetry.
    """
    w = np.asarray(multipliers, dtype=np.complex128)
    if w.size < dim:
        raise ValueError(f"multipliers cover 0..{w.size - 1}, need 0..{dim - 1}")
    t = toeplitz_section(symbol, dim)
    s = w[:dim, None] * t
    violation = float(np.max(np.abs(s - s.T)))
    return ConditionReport(holds=violation <= tol, max_violation=violation, tol=tol)


def rotation_condition(symbol: LaurentSymbol, lam: complex, tol: float = DEFAULT_TOL) -> ConditionReport:
    """One-sided criterion c(n) * lam**n == c(-n) for the rotation family."""
    return onesided_condition(symbol, rotation_multipliers(lam, symbol.band + 1), tol)


def sequence_condition(symbol: LaurentSymbol, zeta, tol: float = DEFAULT_TOL) -> ConditionReport:
    """One-sided criterion c(n) * zeta_n**(2n) == c(-n)."""
    return onesided_condition(symbol, sequence_multipliers(zeta, symbol.band + 1), tol)


def sequence_entrywise_condition(
    symbol: LaurentSymbol, zeta, dim: int, tol: float = DEFAULT_TOL
) -> ConditionReport:
    """Two-index criterion for the squared-sequence family on a dim section."""
    return entrywise_condition(symbol, sequence_multipliers(zeta, dim), dim, tol)


def generate_symmetric_symbol(onesided, zero_coeff: complex = 0.0, zeta=()) -> LaurentSymbol:
    """Complete one-sided data into a symbol satisfying the one-sided criterion.

    ``onesided`` maps n >= 1 to c(n); the negative side is filled in as
    c(-n) = c(n) * zeta_n**(2n), which makes the one-sided criterion hold
    with violation exactly zero. ``zeta`` must cover indices 1 .. max n.
    """
    items = {int(n): complex(v) for n, v in dict(onesided).items()}
    if any(n < 1 for n in items):
        raise ValueError("one-sided coefficients are indexed from 1")
    band = max(items, default=0)
    w = sequence_multipliers(zeta, band + 1)
    c = np.zeros(2 * band + 1, dtype=np.complex128)
    c[band] = zero_coeff
    for n, value in items.items():
        c[band + n] = value
        c[band - n] = value * w[n]
    return LaurentSymbol(band, c)


@dataclass(frozen=True)
class SymmetryReport:
    """Operator residual next to the coefficient-criterion verdicts.

    ``coeff_condition_holds`` and ``max_coeff_violation`` refer to the
    one-sided criterion; ``agree`` records whether that verdict matches
    the residual oracle at the same tolerance. The entrywise fields hold
    the two-index criterion. All three condition fields are None when the
    conjugation is not diagonal, where no coefficient criterion applies.
    """

    residual: float
    window: int
    coeff_condition_holds: bool | None
    max_coeff_violation: float | None
    agree: bool | None
    tol: float
    entrywise_holds: bool | None = None
    entrywise_violation: float | None = None


def symmetry_report(
    op: AntilinearMap,
    symbol: LaurentSymbol,
    dim: int,
    tol: float = DEFAULT_TOL,
    window: int | None = None,
) -> SymmetryReport:
    """Residual oracle plus both coefficient criteria for one symbol.

    The default window is the full section for a diagonal conjugation
    (where the residual is truncation-free) and dim - band - bandwidth(A)
    otherwise.
    """
    if symbol.band > dim - 1:
        raise ValueError(f"band {symbol.band} exceeds dim - 1 = {dim - 1}")
    t = toeplitz_section(symbol, dim)
    bw = matrix_bandwidth(op.a_matrix)
    if window is None:
        window = dim if bw == 0 else max(1, dim - symbol.band - bw)
    residual = symmetry_residual(op, t, window)
    if bw == 0:
        w = diagonal_multipliers(op)
        one = onesided_condition(symbol, w, tol)
        ent = entrywise_condition(symbol, w, dim, tol)
        return SymmetryReport(
            residual=residual,
            window=window,
            coeff_condition_holds=one.holds,
            max_coeff_violation=one.max_violation,
            agree=(residual <= tol) == one.holds,
            tol=tol,
            entrywise_holds=ent.holds,
            entrywise_violation=ent.max_violation,
        )
    return SymmetryReport(
        residual=residual,
        window=window,
        coeff_condition_holds=None,
        max_coeff_violation=None,
        agree=None,
        tol=tol,
    )


EXPLORE_MODES = ("mixed", "generic", "symmetrized", "constant", "unitary")


@dataclass(frozen=True)
class ExplorationRecord:
    """One randomized probe, reproducible from (seed, trial) alone."""

    trial: int
    seed: tuple
    mode: str
    zeta: np.ndarray | None
    symbol: LaurentSymbol
    report: SymmetryReport


def run_trial(
    trial: int, dim: int, band: int, seed: int, mode: str = "mixed", tol: float = DEFAULT_TOL
) -> ExplorationRecord:
    """Run a single exploration trial; (seed, trial) fixes every draw."""
    if not dim > band >= 1:
        raise ValueError("need dim > band >= 1")
    if mode not in EXPLORE_MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {EXPLORE_MODES}")
    resolved = ("generic", "symmetrized", "constant")[trial % 3] if mode == "mixed" else mode
    rng = np.random.default_rng((seed, trial))

    if resolved == "unitary":
        z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        op = conjugation_from_unitary(orthonormalize(z))
        symbol = random_symbol(band, rng)
        residual = symmetry_residual(op, toeplitz_section(symbol, dim))
        report = SymmetryReport(
            residual=residual,
            window=dim,
            coeff_condition_holds=None,
            max_coeff_violation=None,
            agree=None,
            tol=tol,
        )
        return ExplorationRecord(trial, (seed, trial), resolved, None, symbol, report)

    if resolved == "constant":
        zeta = np.full(dim - 1, np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)))
    else:
        zeta = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, dim - 1))

    if resolved == "generic":
        symbol = random_symbol(band, rng)
    else:
        raw = rng.standard_normal(band + 1) + 1j * rng.standard_normal(band + 1)
        onesided = {n: raw[n] / (1.0 + n) for n in range(1, band + 1)}
        symbol = generate_symmetric_symbol(onesided, zero_coeff=raw[0], zeta=zeta)

    op = sequence_conjugation(zeta)
    report = symmetry_report(op, symbol, dim, tol)
    return ExplorationRecord(trial, (seed, trial), resolved, zeta, symbol, report)


def explore_symmetry(
    num_trials: int,
    dim: int,
    band: int,
    seed: int,
    mode: str = "mixed",
    tol: float = DEFAULT_TOL,
) -> list[ExplorationRecord]:
    """Randomized probes of the coefficient criteria against the residual oracle.

    Modes: ``generic`` draws an unconstrained symbol and sequence;
    ``symmetrized`` builds the symbol from the one-sided completion rule,
    so the one-sided criterion holds by construction while the operator
    may still fail to be symmetric; ``constant`` does the same with a
    constant sequence, where all criteria provably coincide; ``unitary``
    draws a dense random conjugation and records the raw residual only;
    ``mixed`` cycles generic, symmetrized, constant. Trials are
    independent and each reseeds from (seed, trial), so any record can be
    regenerated alone by :func:`run_trial`.
    """
    if num_trials < 1:
        raise ValueError("need at least one trial")
    return [run_trial(t, dim, band, seed, mode, tol) for t in range(num_trials)]


def summarize_exploration(records) -> dict:
    """Aggregate counts for an exploration run.

    Tracks how often the one-sided criterion agrees with the residual
    oracle, which trials disagree (reproducible via their seeds), whether
    the entrywise criterion ever mismatches the oracle (it should not),
    and the largest residual among trials where the one-sided criterion
    holds.
    """
    checked = [r for r in records if r.report.coeff_condition_holds is not None]
    disagreements = [r.trial for r in checked if not r.report.agree]
    entrywise_mismatches = [
        r.trial
        for r in checked
        if r.report.entrywise_holds != (r.report.residual <= r.report.tol)
    ]
    holding = [r.report.residual for r in checked if r.report.coeff_condition_holds]
    return {
        "trials": len(records),
        "onesided_checked": len(checked),
        "onesided_agreements": len(checked) - len(disagreements),
        "onesided_disagreements": len(disagreements),
        "disagreement_trials": disagreements,
        "entrywise_mismatch_trials": entrywise_mismatches,
        "max_residual_when_condition_holds": max(holding) if holding else None,
    }
