"""Closed-form risk and deviation measures used as ground truth.

Quantile convention: the lower quantile ``inf{x : P(X <= x) >= alpha}``.
Expected shortfall averages the lower tail of mass ``alpha`` and splits the
atom that straddles the quantile, which keeps it comonotonic additive on
atomic spaces for every alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ContractError, DomainError
from .prob_core import RandVar, expectation, is_comonotonic, is_constant

KINDS = ("neg-expectation", "var", "es", "entropic", "sd", "mad")
RISK_KINDS = ("neg-expectation", "var", "es", "entropic")
DEVIATION_KINDS = ("sd", "mad")

# Prefix sums closer than this to alpha are recomputed exactly, so that the
# quantile position does not depend on summation order.
_TIE_BAND = 1e-12


def _check_alpha(alpha: float) -> float:
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    return float(alpha)


def _sorted_outcomes(X: RandVar) -> list[tuple[float, float]]:
    return sorted(zip(X.values, X.space.probs))


def _quantile_position(pairs: list[tuple[float, float]], alpha: float) -> int:
    cum = 0.0
    last = len(pairs) - 1
    for i, (_, p) in enumerate(pairs):
        cum += p
        if abs(cum - alpha) <= _TIE_BAND:
            cum = math.fsum(q for _, q in pairs[: i + 1])
        if cum >= alpha or i == last:
            return i
    return last


def lower_quantile(X: RandVar, alpha: float) -> float:
    alpha = _check_alpha(alpha)
    pairs = _sorted_outcomes(X)
    return pairs[_quantile_position(pairs, alpha)][0]


def value_at_risk(X: RandVar, alpha: float) -> float:
    return -lower_quantile(X, alpha)


def expected_shortfall(X: RandVar, alpha: float) -> float:
    """``-(1/alpha) * (E[X 1{X<q}] + q (alpha - P(X<q)))`` with q the lower alpha-quantile."""
    alpha = _check_alpha(alpha)
    pairs = _sorted_outcomes(X)
    k = _quantile_position(pairs, alpha)
    q = pairs[k][0]
    tail_x, tail_p = [], []
    for x, p in pairs[:k]:
        if x < q:
            tail_x.append(x * p)
            tail_p.append(p)
    tail = math.fsum(tail_x)
    mass = math.fsum(tail_p)
    return -(tail + q * (alpha - mass)) / alpha


def entropic_risk(X: RandVar, theta: float) -> float:
    if not theta > 0.0:
        raise DomainError(f"theta must be positive, got {theta}")
    exps = [-theta * x for x in X.values]
    top = max(exps)
    probs = X.space.probs
    # Dividing by the weight total makes constants (and 0) exact.
    s = math.fsum(p * math.exp(e - top) for p, e in zip(probs, exps)) / math.fsum(probs)
    return (top + math.log(s)) / theta


def _anchored(X: RandVar) -> list[float]:
    """Centred deviations of X, measured from the first outcome.

    Anchoring makes exact cash shifts give bit-identical results.
    """
    x0 = X.values[0]
    probs = X.space.probs
    d = [x - x0 for x in X.values]
    mu = math.fsum(p * x for p, x in zip(probs, d))
    return [x - mu for x in d]


def std_dev(X: RandVar) -> float:
    if is_constant(X):
        return 0.0
    dev = _anchored(X)
    return math.sqrt(math.fsum(p * e ** 2 for p, e in zip(X.space.probs, dev)))


def mean_abs_dev(X: RandVar) -> float:
    if is_constant(X):
        return 0.0
    dev = _anchored(X)
    return math.fsum(p * abs(e) for p, e in zip(X.space.probs, dev))


@dataclass(frozen=True)
class MeasureSpec:
    kind: str
    alpha: float | None = None
    theta: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown measure kind {self.kind!r}; expected one of {KINDS}")
        if self.kind in ("var", "es"):
            if self.alpha is None:
                raise DomainError(f"{self.kind} needs alpha")
            _check_alpha(self.alpha)
        if self.kind == "entropic":
            if self.theta is None or not self.theta > 0.0:
                raise DomainError(f"entropic needs theta > 0, got {self.theta}")


def evaluate(spec: MeasureSpec, X: RandVar) -> float:
    kind = spec.kind
    if kind == "neg-expectation":
        return -expectation(X)
    if kind == "var":
        return value_at_risk(X, spec.alpha)
    if kind == "es":
        return expected_shortfall(X, spec.alpha)
    if kind == "entropic":
        return entropic_risk(X, spec.theta)
    if kind == "sd":
        return std_dev(X)
    return mean_abs_dev(X)


def comonotonic_additivity_defect(spec: MeasureSpec, X: RandVar, Y: RandVar) -> float:
    """``evaluate(X+Y) - evaluate(X) - evaluate(Y)`` for a comonotonic pair."""
    if not is_comonotonic(X, Y):
        raise ContractError("comonotonic_additivity_defect needs a comonotonic pair")
    return evaluate(spec, X + Y) - evaluate(spec, X) - evaluate(spec, Y)
