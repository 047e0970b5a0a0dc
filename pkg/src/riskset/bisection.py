"""Bracketed bisection for thresholds of monotone predicates.

Every induced functional in the library is the boundary of a one-sided set
of reals: ``{m : X + m in A}`` is up-closed for a monotone A, and
``{m > 0 : X / m in A}`` is up-closed for a star-shaped A.  The four search
routines below differ only in which side is feasible and whether the search
runs over the whole line or over ``m > 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError, OracleInconsistencyError

DEFAULT_TOL = 1e-9
MAX_ITER = 200
DIVERGENCE_GUARD = 1e12
ZERO_GUARD = 1e-12

CONVERGED = "converged"
INFINITE = "infinite"
DEGENERATE_ZERO = "degenerate-zero"

Predicate = Callable[[float], bool]


@dataclass(frozen=True)
class GaugeResult:
    """Extended-real value of an induced functional plus solver diagnostics."""

    value: float
    iterations: int
    bracket: float
    status: str

    @property
    def finite(self) -> bool:
        return math.isfinite(self.value)

    def to_json(self) -> dict:
        return {
            "value": _json_float(self.value),
            "status": self.status,
            "iterations": self.iterations,
            "bracket": _json_float(self.bracket),
        }


def _json_float(x: float):
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _bisect(pred: Predicate, lo: float, hi: float, tol: float, feasible_high: bool,
            iterations: int) -> GaugeResult:
    # Invariant: pred(hi) == feasible_high and pred(lo) != feasible_high.
    steps = 0
    while hi - lo > tol:
        if steps >= MAX_ITER:
            raise ConvergenceError(f"no convergence after {MAX_ITER} steps; bracket [{lo}, {hi}]")
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # Adjacent floats: for |value| > tol / eps no narrower bracket exists.
            break
        if pred(mid) == feasible_high:
            hi = mid
        else:
            lo = mid
        steps += 1
    return GaugeResult(0.5 * (lo + hi), iterations + steps, hi - lo, CONVERGED)


def _check_tol(tol: float) -> None:
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")


def infimum_up(pred: Predicate, radius: float, tol: float = DEFAULT_TOL) -> GaugeResult:
    """``inf{m in R : pred(m)}`` for an up-closed ``pred``; inf of the empty set is +inf."""
    _check_tol(tol)
    lo, hi = -radius, radius
    in_lo, in_hi = pred(lo), pred(hi)
    if in_lo and not in_hi:
        raise OracleInconsistencyError(f"accepted at m={lo} but rejected at m={hi}")
    it = 0
    while not in_hi:
        lo, hi = hi, 2.0 * hi
        it += 1
        if hi > DIVERGENCE_GUARD:
            return GaugeResult(math.inf, it, math.inf, INFINITE)
        in_hi = pred(hi)
    while in_lo:
        hi, lo = lo, 2.0 * lo
        it += 1
        if lo < -DIVERGENCE_GUARD:
            return GaugeResult(-math.inf, it, math.inf, INFINITE)
        in_lo = pred(lo)
    return _bisect(pred, lo, hi, tol, True, it)


def supremum_down(pred: Predicate, radius: float, tol: float = DEFAULT_TOL) -> GaugeResult:
    """``sup{m in R : pred(m)}`` for a down-closed ``pred``; sup of the empty set is -inf."""
    _check_tol(tol)
    lo, hi = -radius, radius
    in_lo, in_hi = pred(lo), pred(hi)
    if in_hi and not in_lo:
        raise OracleInconsistencyError(f"feasible at m={hi} but not at m={lo}")
    it = 0
    while in_hi:
        lo, hi = hi, 2.0 * hi
        it += 1
        if hi > DIVERGENCE_GUARD:
            return GaugeResult(math.inf, it, math.inf, INFINITE)
        in_hi = pred(hi)
    while not in_lo:
        hi, lo = lo, 2.0 * lo
        it += 1
        if lo < -DIVERGENCE_GUARD:
            return GaugeResult(-math.inf, it, math.inf, INFINITE)
        in_lo = pred(lo)
    return _bisect(pred, lo, hi, tol, False, it)


def infimum_up_positive(pred: Predicate, tol: float = DEFAULT_TOL) -> GaugeResult:
    """``inf{m > 0 : pred(m)}`` for ``pred`` up-closed on (0, inf).

    Returns 0 (degenerate-zero) when every m down to the zero guard is
    feasible, +inf when nothing up to the divergence guard is.
    """
    _check_tol(tol)
    it = 0
    if pred(1.0):
        hi, lo = 1.0, 0.5
        while pred(lo):
            hi, lo = lo, 0.5 * lo
            it += 1
            if lo < ZERO_GUARD:
                return GaugeResult(0.0, it, hi, DEGENERATE_ZERO)
    else:
        lo, hi = 1.0, 2.0
        while not pred(hi):
            lo, hi = hi, 2.0 * hi
            it += 1
            if hi > DIVERGENCE_GUARD:
                return GaugeResult(math.inf, it, math.inf, INFINITE)
    return _bisect(pred, lo, hi, tol, True, it)


def supremum_down_positive(pred: Predicate, tol: float = DEFAULT_TOL) -> GaugeResult:
    """``sup{m > 0 : pred(m)}`` for ``pred`` down-closed on (0, inf); sup of the empty set is 0."""
    _check_tol(tol)
    it = 0
    if pred(1.0):
        lo, hi = 1.0, 2.0
        while pred(hi):
            lo, hi = hi, 2.0 * hi
            it += 1
            if hi > DIVERGENCE_GUARD:
                return GaugeResult(math.inf, it, math.inf, INFINITE)
    else:
        hi, lo = 1.0, 0.5
        while not pred(lo):
            hi, lo = lo, 0.5 * lo
            it += 1
            if lo < ZERO_GUARD:
                return GaugeResult(0.0, it, hi, DEGENERATE_ZERO)
    return _bisect(pred, lo, hi, tol, False, it)
