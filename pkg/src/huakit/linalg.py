"""Dense complex Hermitian linear algebra.

Spectral decomposition, matrix functional calculus, Loewner-order
comparison with tolerance-aware verdicts, operator norms, and positive
square roots / inverses. All matrices are immutable numpy arrays
(write-protected views); every operation returns a fresh matrix.

Loewner comparisons always report the signed minimum eigenvalue of the
difference rather than attempting a Cholesky factorization, so that
near-equality cases carry a usable gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import (
    ConvergenceError,
    DimensionMismatchError,
    DomainViolationError,
    SingularityError,
)
from .functions import ScalarFunction


@dataclass(frozen=True)
class TolerancePolicy:
    """Relative/absolute tolerance pair used by every comparison."""

    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self):
        for name in ("rel", "abs"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0:
                raise ValueError(f"tolerance {name} must be finite and >= 0, got {v}")


DEFAULT_TOL = TolerancePolicy()

# Relative Hermiticity slack accepted at construction time.
HERMITICITY_RTOL = 1e-12


class Verdict(Enum):
    HOLDS = "HOLDS"
    EQUALITY = "EQUALITY"
    FAILS = "FAILS"


class SpectralDecomposition(NamedTuple):
    eigenvalues: np.ndarray  # real, ascending
    eigenvectors: np.ndarray  # unitary; columns are eigenvectors


@dataclass(frozen=True)
class OrderReport:
    """Outcome of a Loewner comparison L vs R."""

    gap: float        # lambda_min(L - R)
    threshold: float  # -(rel*(||L|| + ||R||) + abs)
    verdict: Verdict
    max_abs_diff: float  # lambda_max(|L - R|), used for the equality band


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def as_matrix(entries) -> np.ndarray:
    """Validate and return an immutable complex matrix."""
    m = np.array(entries, dtype=np.complex128)
    if m.ndim != 2 or m.size == 0:
        raise DimensionMismatchError(f"expected a nonempty 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise ValueError("matrix entries must be finite")
    return _freeze(m)


def hermitian_part(m) -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    return _freeze((m + m.conj().T) / 2.0)


def as_hermitian(entries, rtol: float = HERMITICITY_RTOL) -> np.ndarray:
    """Validate Hermiticity within `rtol` (relative) and return (M + M*)/2."""
    m = as_matrix(entries)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"Hermitian matrix must be square, got {m.shape}")
    scale = max(1.0, float(np.linalg.norm(m)))
    resid = float(np.linalg.norm(m - m.conj().T))
    if resid > rtol * scale:
        raise ValueError(
            f"matrix is not Hermitian: ||M - M*|| = {resid:.3e} exceeds {rtol:.1e} relative"
        )
    return hermitian_part(m)


def frobenius(m) -> float:
    return float(np.linalg.norm(np.asarray(m)))


def spectral_decompose(h, tol: TolerancePolicy = DEFAULT_TOL) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Reconstruction satisfies ||U diag(w) U* - H||_F <= rel*||H||_F + abs.
    """
    h = np.asarray(h, dtype=np.complex128)
    try:
        w, u = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        off = float(np.linalg.norm(h - np.diag(np.diagonal(h))))
        raise ConvergenceError(
            f"eigensolver failed to converge (off-diagonal residual {off:.3e})", off
        ) from exc
    return SpectralDecomposition(_freeze(w), _freeze(u))


def eigenvalues(h) -> np.ndarray:
    return np.linalg.eigvalsh(np.asarray(h, dtype=np.complex128))


def min_eigenvalue(h) -> float:
    return float(eigenvalues(h)[0])


def max_eigenvalue(h) -> float:
    return float(eigenvalues(h)[-1])


def apply_function(h, f: ScalarFunction, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Functional calculus f(H) = U diag(f(w)) U* for Hermitian H.

    The spectrum must lie in f's domain up to `tol.abs`; eigenvalues within
    that slack of a closed endpoint are clamped onto it (roundoff from
    products like X*X), anything further out is a hard error.
    """
    w, u = spectral_decompose(h, tol)
    bad = f.domain.first_violation(w, tol.abs)
    if bad is not None:
        raise DomainViolationError(
            f"eigenvalue {bad!r} outside domain {f.domain} of {f.label}", bad
        )
    fw = f(f.domain.clamp(w))
    return hermitian_part((u * fw) @ u.conj().T)


def operator_norm(x) -> float:
    """Largest singular value, computed as sqrt(lambda_max(X* X))."""
    x = np.asarray(x, dtype=np.complex128)
    if x.size == 0:
        raise DimensionMismatchError("operator_norm of an empty matrix")
    if x.ndim == 1:
        x = x[:, None]
    gram = x.conj().T @ x
    top = max_eigenvalue(hermitian_part(gram))
    return math.sqrt(max(top, 0.0))


def absolute_value_squared(x) -> np.ndarray:
    """X* X, the module |x|^2 in the full matrix model; positive semidefinite."""
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim == 1:
        x = x[:, None]
    return hermitian_part(x.conj().T @ x)


def _spectral_map(h, weights_fn, tol: TolerancePolicy):
    w, u = spectral_decompose(h, tol)
    return w, hermitian_part((u * weights_fn(w)) @ u.conj().T)


def positive_sqrt(h, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Positive square root; eigenvalues in [-abs, 0) are clamped to 0."""
    w, u = spectral_decompose(h, tol)
    lo = float(w[0])
    if lo < -tol.abs:
        raise DomainViolationError(
            f"matrix is not positive semidefinite: min eigenvalue {lo:.3e}", lo
        )
    return hermitian_part((u * np.sqrt(np.maximum(w, 0.0))) @ u.conj().T)


def positive_inverse(h, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Inverse of a strictly positive matrix (lambda_min > abs tolerance)."""
    w, u = spectral_decompose(h, tol)
    lo = float(w[0])
    if lo <= tol.abs:
        raise SingularityError(
            f"spectrum touches zero: min eigenvalue {lo:.3e}", lo
        )
    return hermitian_part((u * (1.0 / w)) @ u.conj().T)


def positive_inverse_sqrt(h, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """H^(-1/2) for strictly positive H, from a single decomposition."""
    w, u = spectral_decompose(h, tol)
    lo = float(w[0])
    if lo <= tol.abs:
        raise SingularityError(
            f"spectrum touches zero: min eigenvalue {lo:.3e}", lo
        )
    return hermitian_part((u * (1.0 / np.sqrt(w))) @ u.conj().T)


def loewner_gap(l, r, tol: TolerancePolicy = DEFAULT_TOL) -> OrderReport:
    """Compare Hermitian L vs R in the Loewner order.

    gap = lambda_min(L - R). HOLDS iff gap >= -(rel*(||L||+||R||) + abs);
    EQUALITY iff additionally lambda_max(|L - R|) stays inside that band.
    """
    l = np.asarray(l, dtype=np.complex128)
    r = np.asarray(r, dtype=np.complex128)
    if l.shape != r.shape:
        raise DimensionMismatchError(f"shape mismatch {l.shape} vs {r.shape}")
    diff = eigenvalues(hermitian_part(l - r))
    gap = float(diff[0])
    band = tol.rel * (_herm_norm(l) + _herm_norm(r)) + tol.abs
    max_abs = float(np.max(np.abs(diff)))
    if max_abs <= band:
        verdict = Verdict.EQUALITY
    elif gap >= -band:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.FAILS
    return OrderReport(gap=gap, threshold=-band, verdict=verdict, max_abs_diff=max_abs)


def _herm_norm(h) -> float:
    return float(np.max(np.abs(eigenvalues(hermitian_part(h)))))
