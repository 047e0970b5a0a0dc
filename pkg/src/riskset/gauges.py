"""Functionals induced by acceptance sets, and sets induced by functionals.

``rho``               inf{m : X + m in A}          (monetary risk measure)
``psi_complement``    sup{m : X + m not in A}
``minkowski_dev``     inf{m > 0 : X / m in A}      (Minkowski deviation / gauge)
``cogauge_complement`` sup{m > 0 : X / m not in A}

Preconditions are enforced through the declared flags of the set, not by
re-auditing here; theorem suites compose an audit with a gauge explicitly.
Results are accurate to ``tol`` in absolute terms; whether the infimum is
attained cannot be decided by bisection.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from .accept_sets import MONOTONE, SCALAR_STABLE, STAR_SHAPED, AcceptanceSet
from .bisection import (
    CONVERGED,
    DEFAULT_TOL,
    DEGENERATE_ZERO,
    INFINITE,
    GaugeResult,
    infimum_up,
    infimum_up_positive,
    supremum_down,
    supremum_down_positive,
)
from .errors import ContractError
from .prob_core import RandVar

__all__ = [
    "GaugeResult",
    "CONVERGED",
    "INFINITE",
    "DEGENERATE_ZERO",
    "DEFAULT_TOL",
    "rho",
    "psi_complement",
    "minkowski_dev",
    "cogauge_complement",
    "acceptance_from_rho",
    "sublevel_from_dev",
]


def _require(A: AcceptanceSet, flag: str, op: str) -> None:
    if flag not in A.declared:
        raise ContractError(f"{op} needs a set declared {flag!r}; {A.name} is not (audit it first)")


def rho(A: AcceptanceSet, X: RandVar, tol: float = DEFAULT_TOL) -> GaugeResult:
    _require(A, MONOTONE, "rho")
    member = A.member
    return infimum_up(lambda m: member(X + m), X.sup_norm() + 1.0, tol)


def psi_complement(A: AcceptanceSet, X: RandVar, tol: float = DEFAULT_TOL) -> GaugeResult:
    """Largest cash addition that keeps X unacceptable; -inf when the complement is empty."""
    _require(A, MONOTONE, "psi_complement")
    member = A.member
    return supremum_down(lambda m: not member(X + m), X.sup_norm() + 1.0, tol)


def minkowski_dev(A: AcceptanceSet, X: RandVar, tol: float = DEFAULT_TOL) -> GaugeResult:
    _require(A, STAR_SHAPED, "minkowski_dev")
    member = A.member
    return infimum_up_positive(lambda m: member(X / m), tol)


def cogauge_complement(A: AcceptanceSet, X: RandVar, tol: float = DEFAULT_TOL) -> GaugeResult:
    """Largest shrink factor keeping X unacceptable; 0 when no shrink does."""
    _require(A, STAR_SHAPED, "cogauge_complement")
    member = A.member
    return supremum_down_positive(lambda m: not member(X / m), tol)


def acceptance_from_rho(
    risk: Callable[[RandVar], float],
    name: str = "induced",
    declared: Iterable[str] = (),
    dim: Optional[int] = None,
) -> AcceptanceSet:
    """``{X : risk(X) <= 0}``.

    Flags are not inferred from ``risk``; pass ``declared`` when the caller
    knows the functional's axioms (a monotone risk yields a monotone set).
    """
    return AcceptanceSet(name, lambda X: risk(X) <= 0.0, frozenset(declared), dim)


def sublevel_from_dev(
    dev: Callable[[RandVar], float],
    k: float = 1.0,
    name: str = "sublevel",
    declared: Iterable[str] = (STAR_SHAPED, SCALAR_STABLE),
    dim: Optional[int] = None,
) -> AcceptanceSet:
    """``{X : dev(X) <= k}``.

    The default flags hold whenever ``dev`` is a deviation measure (positive
    homogeneity gives star-shapedness, translation insensitivity gives
    stability under scalar addition).
    """
    if not k > 0.0:
        raise ValueError(f"level k must be positive, got {k}")
    k = float(k)
    return AcceptanceSet(f"{name}?k={k!r}", lambda X: dev(X) <= k, frozenset(declared), dim)
