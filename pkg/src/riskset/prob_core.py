"""Finite probability spaces, random variables and dependence predicates.

Everything here is immutable.  Random variables are short tuples of floats
bound to a :class:`ProbSpace`; the spaces used throughout the library have a
handful of outcomes, so plain Python arithmetic beats numpy round-trips in
the hot loops of the gauges.  Randomness is always passed in explicitly as a
``numpy.random.Generator``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, DomainError

PROB_SUM_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class ProbSpace:
    """Finite outcome set with strictly positive weights summing to one."""

    probs: tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if not probs:
            raise DomainError("a probability space needs at least one outcome")
        if not all(p > 0.0 and math.isfinite(p) for p in probs):
            raise DomainError(f"weights must be finite and strictly positive: {probs}")
        if abs(math.fsum(probs) - 1.0) > PROB_SUM_TOL:
            raise DomainError(f"weights sum to {math.fsum(probs)!r}, not 1")

    @property
    def n(self) -> int:
        return len(self.probs)

    @classmethod
    def uniform(cls, n: int) -> "ProbSpace":
        if n < 1:
            raise DomainError("n must be positive")
        return cls((1.0 / n,) * n)

    def rv(self, values: Iterable[float]) -> "RandVar":
        return RandVar(tuple(values), self)

    def constant(self, c: float) -> "RandVar":
        return RandVar((float(c),) * self.n, self)


@dataclass(frozen=True, slots=True)
class RandVar:
    """A payoff per outcome of ``space``."""

    values: tuple[float, ...]
    space: ProbSpace

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.space.n:
            raise DimensionError(
                f"{len(values)} values for a space with {self.space.n} outcomes"
            )
        if not all(map(math.isfinite, values)):
            raise DomainError(f"random variable values must be finite: {values}")

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def _derived(cls, values: tuple, space: ProbSpace) -> "RandVar":
        """Arithmetic results: values are already floats of the right length."""
        if not all(map(math.isfinite, values)):
            raise DomainError(f"random variable values must be finite: {values}")
        rv = object.__new__(cls)
        object.__setattr__(rv, "values", values)
        object.__setattr__(rv, "space", space)
        return rv

    def _other(self, other) -> tuple[float, ...] | None:
        if isinstance(other, RandVar):
            same_space(self, other)
            return other.values
        return None

    def __add__(self, other) -> "RandVar":
        vals = self._other(other)
        if vals is None:
            c = float(other)
            return RandVar._derived(tuple([x + c for x in self.values]), self.space)
        return RandVar._derived(tuple([x + y for x, y in zip(self.values, vals)]), self.space)

    __radd__ = __add__

    def __sub__(self, other) -> "RandVar":
        vals = self._other(other)
        if vals is None:
            c = float(other)
            return RandVar._derived(tuple([x - c for x in self.values]), self.space)
        return RandVar._derived(tuple([x - y for x, y in zip(self.values, vals)]), self.space)

    def __neg__(self) -> "RandVar":
        return RandVar._derived(tuple([-x for x in self.values]), self.space)

    def __mul__(self, scalar: float) -> "RandVar":
        a = float(scalar)
        return RandVar._derived(tuple([a * x for x in self.values]), self.space)

    __rmul__ = __mul__

    def __truediv__(self, scalar: float) -> "RandVar":
        a = float(scalar)
        return RandVar._derived(tuple([x / a for x in self.values]), self.space)

    def __le__(self, other: "RandVar") -> bool:
        """Pointwise (almost sure) order."""
        return all(x <= y for x, y in zip(self.values, self._other(other)))

    def sup_norm(self) -> float:
        return max(abs(x) for x in self.values)

    def to_json(self) -> dict:
        return {"probs": list(self.space.probs), "values": list(self.values)}

    @classmethod
    def from_json(cls, data: dict) -> "RandVar":
        values = data["values"]
        probs = data.get("probs")
        space = ProbSpace.uniform(len(values)) if probs is None else ProbSpace(probs)
        return cls(tuple(values), space)


@dataclass(frozen=True, slots=True)
class ConeElementSpec:
    """Coefficients of ``gamma*(lam*X) + (1-gamma)*(delta*Y)``."""

    gamma: float
    lam: float
    delta: float

    def __post_init__(self):
        if not (0.0 <= self.gamma <= 1.0):
            raise DomainError(f"gamma must lie in [0, 1], got {self.gamma}")
        if not (self.lam >= 0.0 and math.isfinite(self.lam)):
            raise DomainError(f"lambda must be finite and >= 0, got {self.lam}")
        if not (self.delta >= 0.0 and math.isfinite(self.delta)):
            raise DomainError(f"delta must be finite and >= 0, got {self.delta}")

    @property
    def weights(self) -> tuple[float, float]:
        """Effective coefficients on X and Y."""
        return self.gamma * self.lam, (1.0 - self.gamma) * self.delta


def same_space(X: RandVar, Y: RandVar) -> ProbSpace:
    if X.space is not Y.space and X.space != Y.space:
        raise DimensionError("random variables live on different probability spaces")
    return X.space


def is_constant(X: RandVar) -> bool:
    first = X.values[0]
    return all(v == first for v in X.values)


def is_comonotonic(X: RandVar, Y: RandVar) -> bool:
    """Exact check that no outcome pair moves X and Y in strictly opposite directions.

    Sorting by (X, Y) reduces the all-pairs condition to: every block of tied
    X values has all its Y values at or above every Y value of earlier blocks.
    """
    same_space(X, Y)
    order = sorted(zip(X.values, Y.values))
    running_max = -math.inf
    i = 0
    n = len(order)
    while i < n:
        x = order[i][0]
        j = i
        block_max = -math.inf
        while j < n and order[j][0] == x:
            y = order[j][1]
            if y < running_max:
                return False
            block_max = max(block_max, y)
            j += 1
        running_max = max(running_max, block_max)
        i = j
    return True


def cone_element(X: RandVar, Y: RandVar, spec: ConeElementSpec) -> RandVar:
    """Element of conv(cone({X} u {Y})) selected by ``spec``."""
    space = same_space(X, Y)
    g, lam, d = spec.gamma, spec.lam, spec.delta
    h = 1.0 - g
    return RandVar._derived(
        tuple(g * (lam * x) + h * (d * y) for x, y in zip(X.values, Y.values)), space
    )


def expectation(X: RandVar) -> float:
    return math.fsum(p * x for p, x in zip(X.space.probs, X.values))


def covariance(X: RandVar, Y: RandVar) -> float:
    same_space(X, Y)
    exy = math.fsum(p * x * y for p, x, y in zip(X.space.probs, X.values, Y.values))
    return exy - expectation(X) * expectation(Y)


def variance(X: RandVar) -> float:
    mu = expectation(X)
    return math.fsum(p * (x - mu) ** 2 for p, x in zip(X.space.probs, X.values))


# -- random generation -------------------------------------------------------

DEFAULT_DIMS = (2, 3, 4, 8)


def random_space(rng: np.random.Generator, n: int, uniform_prob: float = 0.25) -> ProbSpace:
    """Dirichlet(1) weights, or the uniform space with probability ``uniform_prob``."""
    if n == 1:
        return ProbSpace((1.0,))
    if rng.random() < uniform_prob:
        return ProbSpace.uniform(n)
    w = rng.dirichlet(np.ones(n))
    # Dirichlet can underflow to exactly zero on rare draws.
    w = np.maximum(w, 1e-9)
    w = w / w.sum()
    return ProbSpace(tuple(w.tolist()))


def random_scale(rng: np.random.Generator) -> float:
    """Log-uniform magnitude in [1e-2, 1e2]."""
    return float(10.0 ** rng.uniform(-2.0, 2.0))


def random_randvar(rng: np.random.Generator, space: ProbSpace, grid: bool = False) -> RandVar:
    """A generic payoff: location + scale * noise, optionally snapped to a half-integer grid."""
    scale = random_scale(rng)
    loc = scale * rng.normal()
    vals = loc + scale * rng.normal(size=space.n)
    if grid:
        vals = np.round(vals * 2.0) / 2.0
    return RandVar(tuple(vals.tolist()), space)


def monotone_along(
    order: Sequence[int], rng: np.random.Generator, tie_prob: float = 0.25
) -> tuple[float, ...]:
    """Values that are nondecreasing along ``order``.

    Cumulative sums of nonnegative increments (zero with probability
    ``tie_prob`` to produce ties), re-centred on a randomly chosen level of
    the path and then shifted by a random scalar.
    """
    n = len(order)
    scale = random_scale(rng)
    incr = rng.exponential(scale, size=n)
    incr[0] = 0.0
    incr[rng.random(n) < tie_prob] = 0.0
    path = np.cumsum(incr)
    path = path - path[int(rng.integers(n))] + scale * rng.normal()
    vals = [0.0] * n
    for pos, idx in enumerate(order):
        vals[idx] = float(path[pos])
    return tuple(vals)


def sample_comonotonic_pair(space: ProbSpace, rng: np.random.Generator) -> tuple[RandVar, RandVar]:
    """Two random variables sharing a latent ordering of outcomes, hence comonotonic."""
    order = rng.permutation(space.n).tolist()
    return (
        RandVar(monotone_along(order, rng), space),
        RandVar(monotone_along(order, rng), space),
    )


def product_space(a: ProbSpace, b: ProbSpace) -> ProbSpace:
    """Outcome (i, j) is stored at index ``i * b.n + j``."""
    w = [p * q for p in a.probs for q in b.probs]
    total = math.fsum(w)
    return ProbSpace(tuple(x / total for x in w))


def lift_first(X: RandVar, prod: ProbSpace, m: int) -> RandVar:
    return RandVar(tuple(X.values[k // m] for k in range(prod.n)), prod)


def lift_second(Y: RandVar, prod: ProbSpace, m: int) -> RandVar:
    return RandVar(tuple(Y.values[k % m] for k in range(prod.n)), prod)


def sample_independent_pair(
    space_a: ProbSpace, space_b: ProbSpace, rng: np.random.Generator
) -> tuple[ProbSpace, RandVar, RandVar]:
    """Independent (X, Y) on the product space: X reads the first coordinate, Y the second."""
    prod = product_space(space_a, space_b)
    xa = random_randvar(rng, space_a)
    yb = random_randvar(rng, space_b)
    return prod, lift_first(xa, prod, space_b.n), lift_second(yb, prod, space_b.n)


def project_uncorrelated(X: RandVar, Y: RandVar) -> RandVar:
    """Shift ``Y`` along ``X`` so that Cov(X, result) = 0 (X must be non-constant)."""
    return Y - X * (covariance(X, Y) / variance(X))


def project_unit_covariance(X: RandVar, Y: RandVar) -> RandVar:
    """Shift ``Y`` along ``X`` so that Cov(X, result) = 1 (X must be non-constant)."""
    return Y + X * ((1.0 - covariance(X, Y)) / variance(X))
