"""Finite-dimensional models of Hilbert C*-modules.

Two concrete models:

  * FULL(m, k): the space of m x k complex matrices over the full matrix
    algebra of k x k matrices, with <x, y> = x* y. Its center is trivial,
    so central positive elements are nonnegative multiples of the identity.
  * DIAGONAL(m, k): m-tuples over the commutative algebra of diagonal
    k x k matrices (stored as length-k vectors). Every element is central,
    which supplies genuinely non-scalar central weights.

Elements of both models are stored as immutable (m, k) complex arrays; a
DIAGONAL element's row i holds the diagonal entries of its i-th component.
Algebra elements are (k, k) matrices in FULL and (k,) vectors in DIAGONAL.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatchError, ModelMismatchError
from .functions import ScalarFunction
from .linalg import (
    DEFAULT_TOL,
    OrderReport,
    TolerancePolicy,
    Verdict,
    apply_function,
    as_matrix,
    hermitian_part,
    loewner_gap,
    operator_norm,
)
from .errors import DomainViolationError


class Model(Enum):
    FULL = "full"
    DIAGONAL = "diagonal"


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ModuleElement:
    model: Model
    data: np.ndarray  # shape (m, k), complex

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape


@dataclass(frozen=True)
class AlgebraElement:
    model: Model
    data: np.ndarray  # (k, k) for FULL, (k,) for DIAGONAL

    @property
    def k(self) -> int:
        return self.data.shape[-1]


@dataclass(frozen=True)
class CentralPositive:
    """A positive central algebra element.

    Stored as a length-k vector of nonnegative reals; in the FULL model all
    entries are equal (the element gamma * I), in the DIAGONAL model they
    are the diagonal weights.
    """

    model: Model
    values: np.ndarray  # (k,), real, >= 0

    @property
    def k(self) -> int:
        return self.values.shape[0]

    def norm(self) -> float:
        return float(np.max(self.values)) if self.values.size else 0.0

    def apply(self, f) -> np.ndarray:
        """Componentwise functional calculus; valid because c is central."""
        return np.asarray(f(self.values), dtype=float)

    def to_algebra(self) -> AlgebraElement:
        if self.model is Model.FULL:
            return AlgebraElement(Model.FULL, _freeze(np.eye(self.k, dtype=np.complex128) * self.values[0]))
        return AlgebraElement(Model.DIAGONAL, _freeze(self.values.astype(np.complex128)))


def module_element(model: Model, data) -> ModuleElement:
    arr = np.array(data, dtype=np.complex128)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.size == 0:
        raise DimensionMismatchError(f"module element must be a nonempty (m, k) array, got {arr.shape}")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise ValueError("module element entries must be finite")
    return ModuleElement(model, _freeze(arr))


def algebra_element(model: Model, data) -> AlgebraElement:
    arr = np.array(data, dtype=np.complex128)
    if model is Model.FULL:
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.size == 0:
            raise DimensionMismatchError(f"FULL algebra element must be square, got {arr.shape}")
    else:
        arr = arr.reshape(-1)
        if arr.size == 0:
            raise DimensionMismatchError("DIAGONAL algebra element must be nonempty")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise ValueError("algebra element entries must be finite")
    return AlgebraElement(model, _freeze(arr))


def central_positive_full(gamma: float, k: int, tol: TolerancePolicy = DEFAULT_TOL) -> CentralPositive:
    g = float(gamma)
    if g < -tol.abs:
        raise ValueError(f"central element must be positive, got {g}")
    return CentralPositive(Model.FULL, _freeze(np.full(k, max(g, 0.0))))


def central_positive_diagonal(values, tol: TolerancePolicy = DEFAULT_TOL) -> CentralPositive:
    v = np.asarray(values, dtype=float).reshape(-1)
    if v.size == 0:
        raise DimensionMismatchError("central element must be nonempty")
    if np.min(v) < -tol.abs:
        raise ValueError(f"central element must be positive, min entry {np.min(v)}")
    return CentralPositive(Model.DIAGONAL, _freeze(np.maximum(v, 0.0)))


def central_positive(a: AlgebraElement, tol: TolerancePolicy = DEFAULT_TOL) -> CentralPositive:
    """Validate that an algebra element is central and positive, and wrap it."""
    if a.model is Model.FULL:
        k = a.k
        gamma = float(np.trace(a.data).real) / k
        resid = float(np.linalg.norm(a.data - gamma * np.eye(k)))
        scale = max(1.0, abs(gamma) * k)
        if resid > 1e-12 * scale:
            raise ValueError(
                f"element is not central in the full matrix algebra (residual {resid:.3e})"
            )
        return central_positive_full(gamma, k, tol)
    imag = float(np.max(np.abs(a.data.imag))) if a.data.size else 0.0
    if imag > tol.abs:
        raise ValueError(f"positive element must be self-adjoint, imaginary residue {imag:.3e}")
    return central_positive_diagonal(a.data.real, tol)


def _check_same_model(x: ModuleElement, y: ModuleElement):
    if x.model is not y.model:
        raise ModelMismatchError(f"mixed models {x.model.value} vs {y.model.value}")
    if x.shape[1] != y.shape[1]:
        raise DimensionMismatchError(f"algebra ranks differ: {x.shape} vs {y.shape}")


def inner_product(x: ModuleElement, y: ModuleElement) -> AlgebraElement:
    """<x, y>: x* y in FULL, slotwise sum_i conj(x_i) y_i in DIAGONAL."""
    _check_same_model(x, y)
    if x.shape[0] != y.shape[0]:
        raise DimensionMismatchError(f"element sizes differ: {x.shape} vs {y.shape}")
    if x.model is Model.FULL:
        return AlgebraElement(Model.FULL, _freeze(x.data.conj().T @ y.data))
    return AlgebraElement(Model.DIAGONAL, _freeze(np.sum(x.data.conj() * y.data, axis=0)))


def right_action(x: ModuleElement, a: AlgebraElement) -> ModuleElement:
    if x.model is not a.model:
        raise ModelMismatchError(f"mixed models {x.model.value} vs {a.model.value}")
    if x.model is Model.FULL:
        if x.shape[1] != a.data.shape[0]:
            raise DimensionMismatchError(f"cannot act: {x.shape} . {a.data.shape}")
        return ModuleElement(Model.FULL, _freeze(x.data @ a.data))
    if x.shape[1] != a.k:
        raise DimensionMismatchError(f"cannot act: {x.shape} . ({a.k},)")
    return ModuleElement(Model.DIAGONAL, _freeze(x.data * a.data[None, :]))


def scale_columns(x: ModuleElement, weights) -> ModuleElement:
    """Right action by a central element given as a length-k weight vector."""
    w = np.asarray(weights)
    if w.ndim == 0:
        w = np.full(x.shape[1], complex(w))
    if w.shape != (x.shape[1],):
        raise DimensionMismatchError(f"weights {w.shape} do not match rank {x.shape[1]}")
    return ModuleElement(x.model, _freeze(x.data * w[None, :]))


def module_norm(x: ModuleElement) -> float:
    """||x|| = ||<x, x>||^(1/2) with the algebra's operator norm."""
    g = inner_product(x, x)
    return float(np.sqrt(max(alg_norm(g), 0.0)))


def elementary_operator(u: ModuleElement, v: ModuleElement, x: ModuleElement) -> ModuleElement:
    """x -> u <v, x>; its operator norm is bounded by ||u|| ||v||."""
    return right_action(u, inner_product(v, x))


def apply_operator(t, x: ModuleElement) -> ModuleElement:
    """Left action of an (m', m) matrix; a bounded module map in both models."""
    tm = as_matrix(t)
    if tm.shape[1] != x.shape[0]:
        raise DimensionMismatchError(f"operator {tm.shape} cannot act on element {x.shape}")
    return ModuleElement(x.model, _freeze(tm @ x.data))


def zero_element(model: Model, m: int, k: int) -> ModuleElement:
    return ModuleElement(model, _freeze(np.zeros((m, k), dtype=np.complex128)))


# -- algebra arithmetic ------------------------------------------------------

def _check_alg_pair(a: AlgebraElement, b: AlgebraElement):
    if a.model is not b.model:
        raise ModelMismatchError(f"mixed models {a.model.value} vs {b.model.value}")
    if a.data.shape != b.data.shape:
        raise DimensionMismatchError(f"algebra shapes differ: {a.data.shape} vs {b.data.shape}")


def alg_add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_alg_pair(a, b)
    return AlgebraElement(a.model, _freeze(a.data + b.data))


def alg_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_alg_pair(a, b)
    if a.model is Model.FULL:
        return AlgebraElement(Model.FULL, _freeze(a.data @ b.data))
    return AlgebraElement(Model.DIAGONAL, _freeze(a.data * b.data))


def alg_adjoint(a: AlgebraElement) -> AlgebraElement:
    if a.model is Model.FULL:
        return AlgebraElement(Model.FULL, _freeze(a.data.conj().T.copy()))
    return AlgebraElement(Model.DIAGONAL, _freeze(a.data.conj()))


def alg_scale(a: AlgebraElement, weights) -> AlgebraElement:
    """Multiply by a central coefficient (scalar or length-k vector of reals)."""
    w = np.asarray(weights)
    if a.model is Model.FULL:
        if w.ndim != 0 and np.ptp(w) > 1e-15 * max(1.0, float(np.max(np.abs(w)))):
            raise ValueError("FULL-model central coefficients must be constant")
        s = complex(w) if w.ndim == 0 else complex(w.reshape(-1)[0])
        return AlgebraElement(Model.FULL, _freeze(s * a.data))
    if w.ndim == 0:
        w = np.full(a.k, complex(w))
    return AlgebraElement(Model.DIAGONAL, _freeze(a.data * w))


def alg_identity(model: Model, k: int) -> AlgebraElement:
    if model is Model.FULL:
        return AlgebraElement(Model.FULL, _freeze(np.eye(k, dtype=np.complex128)))
    return AlgebraElement(Model.DIAGONAL, _freeze(np.ones(k, dtype=np.complex128)))


def alg_norm(a: AlgebraElement) -> float:
    if a.model is Model.FULL:
        return operator_norm(a.data)
    return float(np.max(np.abs(a.data))) if a.data.size else 0.0


def alg_apply(a: AlgebraElement, f: ScalarFunction, tol: TolerancePolicy = DEFAULT_TOL) -> AlgebraElement:
    """Functional calculus of a self-adjoint algebra element."""
    if a.model is Model.FULL:
        return AlgebraElement(Model.FULL, apply_function(hermitian_part(a.data), f, tol))
    vals = a.data.real
    bad = f.domain.first_violation(vals, tol.abs)
    if bad is not None:
        raise DomainViolationError(
            f"entry {bad!r} outside domain {f.domain} of {f.label}", bad
        )
    return AlgebraElement(Model.DIAGONAL, _freeze(np.asarray(f(f.domain.clamp(vals)), dtype=np.complex128)))


def alg_loewner(a: AlgebraElement, b: AlgebraElement, tol: TolerancePolicy = DEFAULT_TOL) -> OrderReport:
    """Loewner comparison of self-adjoint algebra elements."""
    _check_alg_pair(a, b)
    if a.model is Model.FULL:
        return loewner_gap(hermitian_part(a.data), hermitian_part(b.data), tol)
    diff = a.data.real - b.data.real
    gap = float(np.min(diff))
    band = tol.rel * (alg_norm(a) + alg_norm(b)) + tol.abs
    max_abs = float(np.max(np.abs(diff)))
    if max_abs <= band:
        verdict = Verdict.EQUALITY
    elif gap >= -band:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.FAILS
    return OrderReport(gap=gap, threshold=-band, verdict=verdict, max_abs_diff=max_abs)
