"""Catalog of scalar functions with known operator-convexity status.

Each entry bundles a vectorized callable with its natural domain, a
convexity/concavity classification used to pick inequality directions, and
(where applicable) a certified lower bound M > 0 with f(t) >= t + M on
[0, inf), which some Hua-type verifiers require.

Classification facts baked into the catalog:
  * t^p is operator convex on its domain for p in [-1, 0] u [1, 2] and
    operator concave for p in [0, 1];
  * log is operator concave, 1/t operator convex, both on (0, inf);
  * t^3 and exp are convex but NOT operator convex -- they are the stock
    counterexample feedstock for the falsifier.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from .errors import DomainViolationError


class ConvexityStatus(Enum):
    OPERATOR_CONVEX = "operator_convex"
    OPERATOR_CONCAVE = "operator_concave"
    CONVEX_NOT_OPERATOR_CONVEX = "convex_not_operator_convex"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Interval:
    """A real interval, optionally open at either endpoint."""

    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi) or self.lo > self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.lo) and math.isfinite(self.hi)

    def contains(self, values, abs_tol: float = 0.0) -> bool:
        v = np.asarray(values, dtype=float)
        lo_ok = v > self.lo + abs_tol if self.lo_open else v >= self.lo - abs_tol
        hi_ok = v < self.hi - abs_tol if self.hi_open else v <= self.hi + abs_tol
        return bool(np.all(lo_ok) and np.all(hi_ok))

    def first_violation(self, values, abs_tol: float = 0.0) -> float | None:
        v = np.asarray(values, dtype=float)
        lo_bad = v <= self.lo + abs_tol if self.lo_open else v < self.lo - abs_tol
        hi_bad = v >= self.hi - abs_tol if self.hi_open else v > self.hi + abs_tol
        bad = np.flatnonzero(lo_bad | hi_bad)
        return None if bad.size == 0 else float(v[bad[0]])

    def clamp(self, values):
        """Clip values into the closed hull; used after a tolerant containment check."""
        return np.clip(values, self.lo, self.hi)

    def __str__(self) -> str:
        lo = "(" if self.lo_open else "["
        hi = ")" if self.hi_open else "]"
        return f"{lo}{self.lo}, {self.hi}{hi}"


REALS = Interval(-math.inf, math.inf)
NONNEGATIVE = Interval(0.0, math.inf)
POSITIVE = Interval(0.0, math.inf, lo_open=True)


@dataclass(frozen=True)
class ScalarFunction:
    """A scalar function with domain and convexity metadata.

    ``hua_shift`` is a certified M > 0 such that f(t) >= t + M for all
    t >= 0; it is None for entries without such a global bound.
    """

    name: str
    domain: Interval
    status: ConvexityStatus
    fn: Callable[[np.ndarray], np.ndarray] = field(compare=False, repr=False)
    hua_shift: float | None = None
    params: tuple = ()

    def __call__(self, t):
        return self.fn(np.asarray(t, dtype=float))

    @property
    def label(self) -> str:
        if self.params:
            inner = ",".join(f"{p:g}" for p in self.params)
            return f"{self.name}({inner})"
        return self.name

    @property
    def is_operator_convex(self) -> bool:
        return self.status is ConvexityStatus.OPERATOR_CONVEX

    @property
    def is_operator_concave(self) -> bool:
        return self.status is ConvexityStatus.OPERATOR_CONCAVE

    @property
    def is_convex(self) -> bool:
        """Ordinary convexity on the domain (every operator convex f is convex)."""
        return self.status in (
            ConvexityStatus.OPERATOR_CONVEX,
            ConvexityStatus.CONVEX_NOT_OPERATOR_CONVEX,
        )

    @property
    def is_concave(self) -> bool:
        return self.status is ConvexityStatus.OPERATOR_CONCAVE

    def value_at_zero(self) -> float:
        if not self.domain.contains(0.0):
            raise DomainViolationError(f"{self.label} is not defined at 0", 0.0)
        return float(self(0.0))


def _power_status(p: float) -> ConvexityStatus:
    if (-1.0 <= p <= 0.0) or (1.0 <= p <= 2.0):
        return ConvexityStatus.OPERATOR_CONVEX
    if 0.0 < p < 1.0:
        return ConvexityStatus.OPERATOR_CONCAVE
    # |p| beyond the operator range: still ordinary convex on the domain below.
    return ConvexityStatus.CONVEX_NOT_OPERATOR_CONVEX


def _power_domain(p: float) -> Interval:
    if p < 0:
        return POSITIVE
    if p in (0.0, 1.0, 2.0):
        return REALS
    return NONNEGATIVE


def power(p: float) -> ScalarFunction:
    """t -> t**p on (0,inf) for p<0, on [0,inf) for fractional p>=0."""
    p = float(p)
    return ScalarFunction(
        name="power",
        domain=_power_domain(p),
        status=_power_status(p),
        fn=lambda t, p=p: np.power(t, p),
        params=(p,),
    )


def square() -> ScalarFunction:
    return power(2.0)


def identity() -> ScalarFunction:
    return affine(1.0, 0.0)


def inverse() -> ScalarFunction:
    return ScalarFunction(
        name="inverse",
        domain=POSITIVE,
        status=ConvexityStatus.OPERATOR_CONVEX,
        fn=lambda t: 1.0 / t,
    )


def logarithm() -> ScalarFunction:
    return ScalarFunction(
        name="log",
        domain=POSITIVE,
        status=ConvexityStatus.OPERATOR_CONCAVE,
        fn=np.log,
    )


def exponential() -> ScalarFunction:
    # exp(t) - t >= 1 everywhere, so it is Hua-eligible with M = 1.
    return ScalarFunction(
        name="exp",
        domain=REALS,
        status=ConvexityStatus.CONVEX_NOT_OPERATOR_CONVEX,
        fn=np.exp,
        hua_shift=1.0,
    )


def cube() -> ScalarFunction:
    return ScalarFunction(
        name="cube",
        domain=NONNEGATIVE,
        status=ConvexityStatus.CONVEX_NOT_OPERATOR_CONVEX,
        fn=lambda t: t**3,
    )


def affine(a: float, b: float) -> ScalarFunction:
    """t -> a*t + b; Hua-eligible with M = b when a >= 1 and b > 0."""
    a, b = float(a), float(b)
    shift = b if (a >= 1.0 and b > 0.0) else None
    return ScalarFunction(
        name="affine",
        domain=REALS,
        status=ConvexityStatus.OPERATOR_CONVEX,
        fn=lambda t, a=a, b=b: a * t + b,
        hua_shift=shift,
        params=(a, b),
    )


def custom(knots, values, domain: Interval | None = None,
           status: ConvexityStatus = ConvexityStatus.UNKNOWN) -> ScalarFunction:
    """Piecewise-linear interpolant through (knots, values); status defaults to UNKNOWN."""
    xs = np.asarray(knots, dtype=float)
    ys = np.asarray(values, dtype=float)
    if xs.ndim != 1 or xs.shape != ys.shape or xs.size < 2:
        raise ValueError("custom function needs two matching 1-d knot/value arrays")
    if np.any(np.diff(xs) <= 0):
        raise ValueError("custom function knots must be strictly increasing")
    dom = domain if domain is not None else Interval(float(xs[0]), float(xs[-1]))
    return ScalarFunction(
        name="custom",
        domain=dom,
        status=status,
        fn=lambda t, xs=xs, ys=ys: np.interp(t, xs, ys),
    )


_ALIASES = {
    "square": lambda: power(2.0),
    "identity": identity,
    "inverse": inverse,
    "log": logarithm,
    "exp": exponential,
    "cube": cube,
}

_PARAM_RE = re.compile(r"^(?P<name>[a-z]+)\((?P<args>[^)]*)\)$")


def catalog(tag: str) -> ScalarFunction:
    """Resolve a textual tag like 'cube', 'square', 'power(1.5)' or 'affine(1,1)'."""
    key = tag.strip().lower()
    if key in _ALIASES:
        return _ALIASES[key]()
    m = _PARAM_RE.match(key)
    if m:
        name, raw = m.group("name"), m.group("args")
        try:
            args = [float(s) for s in raw.split(",")] if raw.strip() else []
        except ValueError:
            raise KeyError(f"unparseable arguments in function tag {tag!r}") from None
        if name == "power" and len(args) == 1:
            return power(args[0])
        if name == "affine" and len(args) == 2:
            return affine(args[0], args[1])
    raise KeyError(f"unknown function tag {tag!r}")


def known_tags() -> list[str]:
    return sorted(_ALIASES) + ["power(<p>)", "affine(<a>,<b>)"]
