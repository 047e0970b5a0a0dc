"""Acceptance sets as membership oracles, a catalog of named sets, and axiom audits.

A set is a black-box predicate over random variables plus a set of *declared*
structural flags.  Declarations are claims; the ``check_*`` auditors try to
falsify them by sampling.  An audit verdict of ``pass`` only means no
counterexample turned up in the given number of trials.  A ``fail`` always
carries a witness that reproduces the violation exactly through the raw
membership predicate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence
from urllib.parse import parse_qsl

import numpy as np

from . import reference_measures as rm
from .bisection import DEFAULT_TOL, infimum_up
from .errors import DimensionError, DomainError
from .prob_core import (
    DEFAULT_DIMS,
    ProbSpace,
    RandVar,
    expectation,
    is_constant,
    monotone_along,
    random_randvar,
    random_scale,
    random_space,
)

MONOTONE = "monotone"
NORMALIZED = "normalized"
CONVEX = "convex"
COMONOTONIC_CONVEX = "comonotonic-convex"
COMPLEMENT_COMONOTONIC_CONVEX = "complement-comonotonic-convex"
STAR_SHAPED = "star-shaped"
SCALAR_STABLE = "scalar-stable"
RADIALLY_BOUNDED = "radially-bounded"
CLOSED = "closed"

FLAGS = (
    MONOTONE,
    NORMALIZED,
    CONVEX,
    COMONOTONIC_CONVEX,
    COMPLEMENT_COMONOTONIC_CONVEX,
    STAR_SHAPED,
    SCALAR_STABLE,
    RADIALLY_BOUNDED,
    CLOSED,
)
AUDITABLE_FLAGS = FLAGS[:-1]

# Convexity restricted to a sampled class of payoffs (a cone, a span, ...).
CONVEX_IN_CLASS = "convex-in-class"
COMPLEMENT_CONVEX_IN_CLASS = "complement-convex-in-class"
_CONVEXITY_AXIOMS = (CONVEX, COMONOTONIC_CONVEX, COMPLEMENT_COMONOTONIC_CONVEX,
                     CONVEX_IN_CLASS, COMPLEMENT_CONVEX_IN_CLASS)

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

REJECTION_FACTOR = 50
RADIAL_GUARD = 1e12


@dataclass(frozen=True)
class AcceptanceSet:
    """Membership oracle with declared (unaudited) structural flags.

    ``dim`` pins the number of outcomes for sets that only make sense on one
    space size; ``None`` means any space.
    """

    name: str
    member: Callable[[RandVar], bool] = field(repr=False, compare=False)
    declared: frozenset = frozenset()
    dim: Optional[int] = None

    def __contains__(self, X: RandVar) -> bool:
        return self.member(X)

    def has(self, flag: str) -> bool:
        return flag in self.declared


def _require_dim(X: RandVar, n: int, name: str) -> None:
    if X.n != n:
        raise DimensionError(f"{name} is defined on {n}-outcome spaces, got n={X.n}")


def complement_view(A: AcceptanceSet) -> AcceptanceSet:
    """Logical negation of membership; no flags are inferred."""
    member = A.member
    return AcceptanceSet(f"complement({A.name})", lambda X: not member(X), frozenset(), A.dim)


def intersection(A: AcceptanceSet, B: AcceptanceSet) -> AcceptanceSet:
    kept = {MONOTONE, CONVEX, COMONOTONIC_CONVEX, STAR_SHAPED, SCALAR_STABLE, CLOSED}
    ma, mb = A.member, B.member
    return AcceptanceSet(
        f"intersection({A.name};{B.name})",
        lambda X: ma(X) and mb(X),
        frozenset(A.declared & B.declared & kept),
        A.dim or B.dim,
    )


def union(A: AcceptanceSet, B: AcceptanceSet) -> AcceptanceSet:
    kept = {MONOTONE, STAR_SHAPED, SCALAR_STABLE, CLOSED}
    ma, mb = A.member, B.member
    return AcceptanceSet(
        f"union({A.name};{B.name})",
        lambda X: ma(X) or mb(X),
        frozenset(A.declared & B.declared & kept),
        A.dim or B.dim,
    )


def _fmt(x: float) -> str:
    return repr(float(x))


def halfspace(c: float = 0.0, weights: Optional[Sequence[float]] = None) -> AcceptanceSet:
    """``{X : E[Z X] >= c}``; ``Z`` defaults to the constant 1."""
    c = float(c)
    flags = {CONVEX, COMONOTONIC_CONVEX, COMPLEMENT_COMONOTONIC_CONVEX, CLOSED}
    if c <= 0.0:
        flags.add(STAR_SHAPED)
    if weights is None:
        flags.add(MONOTONE)
        if c == 0.0:
            flags.add(NORMALIZED)
        return AcceptanceSet(
            f"halfspace?c={_fmt(c)}", lambda X: expectation(X) >= c, frozenset(flags)
        )
    z = tuple(float(w) for w in weights)
    n = len(z)
    if all(w >= 0.0 for w in z):
        flags.add(MONOTONE)

    def member(X: RandVar) -> bool:
        _require_dim(X, n, "halfspace")
        return math.fsum(p * w * x for p, w, x in zip(X.space.probs, z, X.values)) >= c

    zs = ",".join(_fmt(w) for w in z)
    return AcceptanceSet(f"halfspace?c={_fmt(c)}&z={zs}", member, frozenset(flags), n)


# -- catalog -----------------------------------------------------------------

CATALOG_NAMES = ("expectation", "var", "es", "entropic", "fig1", "simplex_q1", "sd_ball", "mad_ball")

_MONETARY_COHERENT = {MONOTONE, NORMALIZED, COMONOTONIC_CONVEX, STAR_SHAPED, CLOSED}


def _positive(name: str, value: Optional[float]) -> float:
    if value is None or not value > 0.0 or not math.isfinite(value):
        raise DomainError(f"{name} must be a positive number, got {value}")
    return float(value)


def catalog(
    name: str,
    *,
    alpha: Optional[float] = None,
    theta: Optional[float] = None,
    r: Optional[float] = None,
    strict: bool = False,
    n: Optional[int] = None,
) -> AcceptanceSet:
    """Named acceptance sets.

    ``n`` optionally states the space size the set will be queried on.  Two
    flags genuinely depend on it: the VaR set is convex on two outcomes when
    alpha <= 1/2, and the sd/mad balls have comonotonic convex complements on
    two outcomes (centered payoffs span a line there).  Without ``n`` the
    declarations describe spaces with three or more outcomes.

    ``strict=True`` is only meaningful for ``fig1`` and yields the open
    variant ``y - |x| < 1``.
    """
    small = n is not None and n <= 2

    if name == "expectation":
        flags = _MONETARY_COHERENT | {CONVEX, COMPLEMENT_COMONOTONIC_CONVEX}
        return AcceptanceSet("catalog:expectation", lambda X: expectation(X) >= 0.0, frozenset(flags))

    if name in ("var", "es"):
        if alpha is None or not (0.0 < alpha < 1.0):
            raise DomainError(f"{name} needs alpha in (0, 1), got {alpha}")
        a = float(alpha)
        flags = _MONETARY_COHERENT | {COMPLEMENT_COMONOTONIC_CONVEX}
        if name == "es":
            flags |= {CONVEX}
            member = lambda X: rm.expected_shortfall(X, a) <= 0.0
        else:
            if small and a <= 0.5:
                flags |= {CONVEX}
            member = lambda X: rm.value_at_risk(X, a) <= 0.0
        return AcceptanceSet(f"catalog:{name}?alpha={_fmt(a)}", member, frozenset(flags))

    if name == "entropic":
        t = _positive("theta", theta)
        flags = {MONOTONE, NORMALIZED, CONVEX, COMONOTONIC_CONVEX, STAR_SHAPED, CLOSED}
        return AcceptanceSet(
            f"catalog:entropic?theta={_fmt(t)}",
            lambda X: rm.entropic_risk(X, t) <= 0.0,
            frozenset(flags),
        )

    if name in ("sd_ball", "mad_ball"):
        rad = _positive("r", r)
        fn = rm.std_dev if name == "sd_ball" else rm.mean_abs_dev
        flags = {CONVEX, COMONOTONIC_CONVEX, STAR_SHAPED, SCALAR_STABLE, RADIALLY_BOUNDED, CLOSED}
        if small:
            flags.add(COMPLEMENT_COMONOTONIC_CONVEX)
        return AcceptanceSet(f"catalog:{name}?r={_fmt(rad)}", lambda X: fn(X) <= rad, frozenset(flags))

    if name in ("fig1", "simplex_q1"):
        if n is not None and n != 2:
            raise DimensionError(f"{name} lives on 2-outcome spaces, requested n={n}")
        if name == "fig1":
            if strict:
                def member(X: RandVar) -> bool:
                    _require_dim(X, 2, "fig1")
                    return X.values[1] - abs(X.values[0]) < 1.0

                return AcceptanceSet("catalog:fig1?strict=1", member, frozenset({STAR_SHAPED}), 2)

            def member(X: RandVar) -> bool:
                _require_dim(X, 2, "fig1")
                return X.values[1] - abs(X.values[0]) <= 1.0

            flags = {STAR_SHAPED, COMPLEMENT_COMONOTONIC_CONVEX, CLOSED}
            return AcceptanceSet("catalog:fig1", member, frozenset(flags), 2)

        def member(X: RandVar) -> bool:
            _require_dim(X, 2, "simplex_q1")
            u, v = X.values
            return u >= 0.0 and v >= 0.0 and abs(u) + abs(v) <= 1.0

        flags = {CONVEX, COMONOTONIC_CONVEX, STAR_SHAPED, RADIALLY_BOUNDED, CLOSED}
        return AcceptanceSet("catalog:simplex_q1", member, frozenset(flags), 2)

    raise DomainError(f"unknown catalog set {name!r}; expected one of {CATALOG_NAMES}")


_FLOAT_PARAMS = {"alpha", "theta", "r", "c"}


def parse_set(text: str, n: Optional[int] = None) -> AcceptanceSet:
    """Parse CLI set strings such as ``catalog:es?alpha=0.05`` or ``complement(catalog:fig1)``."""
    text = text.strip()
    if text.startswith("complement(") and text.endswith(")"):
        return complement_view(parse_set(text[len("complement("):-1], n))
    head, _, query = text.partition("?")
    try:
        params = dict(parse_qsl(query, keep_blank_values=False, strict_parsing=bool(query)))
    except ValueError as exc:
        raise DomainError(f"malformed set parameters in {text!r}: {exc}") from None
    kwargs: dict = {}
    for key, raw in params.items():
        try:
            if key in _FLOAT_PARAMS:
                kwargs[key] = float(raw)
            elif key == "strict":
                kwargs[key] = raw.lower() in ("1", "true", "yes")
            elif key == "z":
                kwargs["weights"] = [float(w) for w in raw.split(",")]
            else:
                raise DomainError(f"unknown set parameter {key!r} in {text!r}")
        except ValueError:
            raise DomainError(f"parameter {key}={raw!r} is not a number") from None
    if head == "halfspace":
        return halfspace(kwargs.get("c", 0.0), kwargs.get("weights"))
    if head.startswith("catalog:"):
        if "c" in kwargs or "weights" in kwargs:
            raise DomainError(f"catalog sets take alpha/theta/r/strict, got {sorted(kwargs)}")
        return catalog(head[len("catalog:"):], n=n, **kwargs)
    raise DomainError(f"unrecognised set spec {text!r}")


# -- samplers ----------------------------------------------------------------


class UnrestrictedSampler:
    """Independent generic payoffs; a fifth of the draws sit on a half-integer grid."""

    name = "unrestricted"

    def latent(self, space: ProbSpace, rng: np.random.Generator):
        return None

    def draw(self, latent, space: ProbSpace, rng: np.random.Generator) -> RandVar:
        return random_randvar(rng, space, grid=rng.random() < 0.2)


class ComonotonicSampler:
    """Payoffs nondecreasing along a shared latent permutation, so any two draws are comonotonic."""

    name = "comonotonic"

    def latent(self, space: ProbSpace, rng: np.random.Generator):
        return rng.permutation(space.n).tolist()

    def draw(self, latent, space: ProbSpace, rng: np.random.Generator) -> RandVar:
        return RandVar(monotone_along(latent, rng), space)


UNRESTRICTED = UnrestrictedSampler()
COMONOTONIC = ComonotonicSampler()


def mix(X: RandVar, Y: RandVar, lam: float) -> RandVar:
    """``lam*X + (1-lam)*Y``; audits and replays both go through here."""
    h = 1.0 - lam
    return RandVar._derived(tuple([lam * x + h * y for x, y in zip(X.values, Y.values)]), X.space)


_SCALE_CAP = math.log(1e4)
_SHIFT_CAP = 64.0


def _paths(X: RandVar, allow_shift: bool, allow_scale: bool):
    unit = 1.0 + X.sup_norm()
    out = []
    if allow_scale:
        out += [(lambda s: X * math.exp(s), _SCALE_CAP), (lambda s: X * math.exp(-s), _SCALE_CAP)]
    if allow_shift:
        out += [(lambda s: X + s * unit, _SHIFT_CAP), (lambda s: X - s * unit, _SHIFT_CAP)]
    return out


def push_to_boundary(
    S: AcceptanceSet, X: RandVar, rng: np.random.Generator, allow_shift: bool = True,
    allow_scale: bool = True,
) -> RandVar:
    """Move a member of ``S`` to just inside the boundary of ``S``.

    Only positive rescaling (by at most 1e4 either way) and, optionally, cash
    shifts are used, so comonotonicity with any partner is preserved.  The
    result keeps a random margin of 1e-5..1e-2 path units from the boundary so
    that round-off cannot manufacture violations on truly convex sets.
    """
    paths = _paths(X, allow_shift, allow_scale)
    if not paths:
        return X
    margin = 10.0 ** rng.uniform(-5.0, -2.0)
    for k in rng.permutation(len(paths)):
        f, cap = paths[k]
        s_in, s_out = 0.0, 1.0 / 16.0
        while S.member(f(s_out)):
            s_in, s_out = s_out, 2.0 * s_out
            if s_out > cap:
                break
        else:
            for _ in range(30):
                mid = 0.5 * (s_in + s_out)
                if S.member(f(mid)):
                    s_in = mid
                else:
                    s_out = mid
            s = s_in - margin
            if s <= 0.0:
                return X
            candidate = f(s)
            return candidate if S.member(candidate) else X
    return X


# -- audits ------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    points: tuple
    scalar: Optional[float] = None
    trial: Optional[int] = None

    def to_json(self) -> dict:
        out = {"points": [p.to_json() for p in self.points], "trial": self.trial}
        if self.scalar is not None:
            out["scalar"] = self.scalar
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Witness":
        return cls(
            tuple(RandVar.from_json(p) for p in data["points"]),
            data.get("scalar"),
            data.get("trial"),
        )


@dataclass(frozen=True)
class AxiomAudit:
    """Outcome of a sampled axiom check against ``target``."""

    axiom: str
    target: AcceptanceSet = field(repr=False)
    trials: int
    verdict: str
    witness: Optional[Witness] = None
    draws: int = 0
    note: str = ""

    def replay(self) -> bool:
        """True when the witness still violates the axiom through the raw predicate."""
        if self.witness is None:
            return False
        return replay_witness(self.axiom, self.target, self.witness)

    def to_json(self) -> dict:
        out = {
            "axiom": self.axiom,
            "set": self.target.name,
            "trials": self.trials,
            "verdict": self.verdict,
            "draws": self.draws,
        }
        if self.note:
            out["note"] = self.note
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def _radial_never_exits(S: AcceptanceSet, X: RandVar) -> tuple[bool, float]:
    delta = 1.0
    while S.member(X * delta):
        delta *= 2.0
        if delta > RADIAL_GUARD:
            return True, delta
    return False, delta


def replay_witness(axiom: str, S: AcceptanceSet, w: Witness) -> bool:
    """Re-evaluate a witness with the raw membership predicate of ``S``."""
    pts = w.points
    if axiom == MONOTONE:
        X, B = pts
        return S.member(X) and all(b >= 0.0 for b in B.values) and not S.member(X + B)
    if axiom in _CONVEXITY_AXIOMS:
        X, Y = pts
        return S.member(X) and S.member(Y) and not S.member(mix(X, Y, w.scalar))
    if axiom == STAR_SHAPED:
        (X,) = pts
        return S.member(X) and 0.0 <= w.scalar <= 1.0 and not S.member(X * w.scalar)
    if axiom == SCALAR_STABLE:
        (X,) = pts
        return S.member(X) and not S.member(X + w.scalar)
    if axiom == RADIALLY_BOUNDED:
        (X,) = pts
        return S.member(X) and not is_constant(X) and _radial_never_exits(S, X)[0]
    if axiom == NORMALIZED:
        (X,) = pts
        threshold = infimum_up(lambda m: S.member(X.space.constant(m)), 1.0).value
        return not abs(threshold) <= DEFAULT_TOL
    raise ValueError(f"no replay rule for axiom {axiom!r}")


class _NonConstant:
    """Unrestricted draws nudged off the constants."""

    name = "nonconstant"

    def latent(self, space, rng):
        return None

    def draw(self, latent, space, rng):
        X = UNRESTRICTED.draw(latent, space, rng)
        return X + space.rv(range(space.n)) if is_constant(X) else X


_NONCONSTANT = _NonConstant()
RESTART_AFTER = 10


class _Trials:
    """Per-trial randomness and the shared rejection budget of one audit."""

    def __init__(self, S, rng, trials, space, dims):
        if trials < 1:
            raise ValueError("trials must be >= 1")
        self.S = S
        self.trials = trials
        self.base = int(rng.integers(2**63))
        self.space = space
        self.dims = (S.dim,) if S.dim is not None else tuple(dims)
        self.left = REJECTION_FACTOR * trials
        self.draws = 0

    def rng(self, t: int) -> np.random.Generator:
        return np.random.default_rng([self.base, t])

    def space_for(self, rng) -> ProbSpace:
        if self.space is not None:
            return self.space
        n = self.dims[int(rng.integers(len(self.dims)))]
        return random_space(rng, n)

    def conditioned(self, g, sampler, count: int = 1) -> Optional[list]:
        """``count`` members of the audited set sharing one space and sampler latent.

        A fresh space and latent are drawn after ``RESTART_AFTER`` misses, since
        some latents (an ordering, a near-degenerate weight) can make the set
        unreachable.  Returns None once the audit's budget is spent.
        """
        member = self.S.member
        while self.left > 0:
            sp = self.space_for(g)
            if sampler is _NONCONSTANT and sp.n == 1:
                return None
            latent = sampler.latent(sp, g)
            pts: list = []
            misses = 0
            while len(pts) < count and misses < RESTART_AFTER and self.left > 0:
                self.left -= 1
                self.draws += 1
                X = sampler.draw(latent, sp, g)
                if member(X):
                    pts.append(X)
                else:
                    misses += 1
            if len(pts) == count:
                return pts
        return None


def _result(axiom, S, tr: _Trials, done: int, witness=None, note="") -> AxiomAudit:
    if witness is not None:
        return AxiomAudit(axiom, S, done, FAIL, witness, tr.draws, note)
    if done < tr.trials:
        note = note or f"rejection budget of {REJECTION_FACTOR}x trials exhausted after {done} trials"
        return AxiomAudit(axiom, S, done, INCONCLUSIVE, None, tr.draws, note)
    return AxiomAudit(axiom, S, done, PASS, None, tr.draws, note)


def _one(tr: _Trials, g, nonconstant: bool = False) -> Optional[RandVar]:
    pts = tr.conditioned(g, _NONCONSTANT if nonconstant else UNRESTRICTED)
    return None if pts is None else pts[0]


def check_monotone(A, rng, trials, *, space=None, dims=DEFAULT_DIMS) -> AxiomAudit:
    """Members stay members after adding a nonnegative bump."""
    tr = _Trials(A, rng, trials, space, dims)
    for t in range(trials):
        g = tr.rng(t)
        X = _one(tr, g)
        if X is None:
            return _result(MONOTONE, A, tr, t)
        bump = g.exponential(random_scale(g), size=X.n)
        bump[g.random(X.n) < 0.3] = 0.0
        B = RandVar(tuple(bump.tolist()), X.space)
        if not A.member(X + B):
            return _result(MONOTONE, A, tr, t + 1, Witness((X, B), None, t))
    return _result(MONOTONE, A, tr, trials)


def check_normalized(A, tol: float = DEFAULT_TOL, *, space=None) -> AxiomAudit:
    """Bisect the smallest accepted constant; pass iff it lies within ``tol`` of zero.

    Meaningful for monotone sets, where accepted constants form an up-closed ray.
    """
    sp = space or ProbSpace.uniform(A.dim or 2)
    probe = sp.constant(0.0)
    res = infimum_up(lambda m: A.member(sp.constant(m)), 1.0, tol)
    if not res.finite:
        side = "all constants accepted" if res.value < 0 else "no constant accepted"
        return AxiomAudit(NORMALIZED, A, 1, FAIL, Witness((probe,), res.value),
                          res.iterations, f"{side} up to the 1e12 guard")
    if abs(res.value) <= tol:
        return AxiomAudit(NORMALIZED, A, 1, PASS, None, res.iterations,
                          f"threshold {res.value!r}")
    return AxiomAudit(NORMALIZED, A, 1, FAIL, Witness((probe,), res.value), res.iterations,
                      f"threshold {res.value!r}")


def check_convex_on_pairs(
    A, pair_sampler, rng, trials, *, space=None, dims=DEFAULT_DIMS,
    push_prob: float = 0.5, axiom: Optional[str] = None, allow_shift: bool = True,
    allow_scale: bool = True,
) -> AxiomAudit:
    """Mixtures of member pairs drawn from ``pair_sampler`` must stay members.

    Each pair member is conditioned into ``A`` by rejection and then, with
    probability ``push_prob``, moved close to the boundary of ``A`` (thin
    violation regions hug the boundary).
    """
    if axiom is None:
        axiom = COMONOTONIC_CONVEX if pair_sampler.name == "comonotonic" else CONVEX
    tr = _Trials(A, rng, trials, space, dims)
    for t in range(trials):
        g = tr.rng(t)
        pts = tr.conditioned(g, pair_sampler, 2)
        if pts is None:
            return _result(axiom, A, tr, t)
        for i in range(2):
            if g.random() < push_prob:
                pts[i] = push_to_boundary(A, pts[i], g, allow_shift, allow_scale)
        lam = float(g.random())
        if not A.member(mix(pts[0], pts[1], lam)):
            return _result(axiom, A, tr, t + 1, Witness(tuple(pts), lam, t))
    return _result(axiom, A, tr, trials)


def _draw_lambda(g) -> float:
    u = g.random()
    if u < 0.1:
        return 0.0
    if u < 0.3:
        return float(10.0 ** g.uniform(-8.0, 0.0))
    return float(g.random())


def _on_grid(X: RandVar) -> bool:
    return all((2.0 * v).is_integer() for v in X.values)


# Grid draws can sit exactly on a boundary; their transforms are snapped to
# exactly representable scalars so round-off cannot push them across it.


def check_star_shaped(A, rng, trials, *, space=None, dims=DEFAULT_DIMS) -> AxiomAudit:
    tr = _Trials(A, rng, trials, space, dims)
    for t in range(trials):
        g = tr.rng(t)
        X = _one(tr, g)
        if X is None:
            return _result(STAR_SHAPED, A, tr, t)
        lam = _draw_lambda(g)
        if lam > 0.0 and _on_grid(X):
            lam = 2.0 ** round(math.log2(lam))
        if not A.member(X * lam):
            return _result(STAR_SHAPED, A, tr, t + 1, Witness((X,), lam, t))
    return _result(STAR_SHAPED, A, tr, trials)


def check_scalar_stable(A, rng, trials, *, space=None, dims=DEFAULT_DIMS) -> AxiomAudit:
    tr = _Trials(A, rng, trials, space, dims)
    for t in range(trials):
        g = tr.rng(t)
        X = _one(tr, g)
        if X is None:
            return _result(SCALAR_STABLE, A, tr, t)
        c = float(random_scale(g) * g.normal())
        if _on_grid(X):
            c = round(2.0 * c) / 2.0
        if not A.member(X + c):
            return _result(SCALAR_STABLE, A, tr, t + 1, Witness((X,), c, t))
    return _result(SCALAR_STABLE, A, tr, trials)


def check_radially_bounded(A, rng, trials, *, space=None, dims=DEFAULT_DIMS) -> AxiomAudit:
    """Every non-constant member must leave ``A`` under repeated doubling before 1e12."""
    tr = _Trials(A, rng, trials, space, dims)
    for t in range(trials):
        g = tr.rng(t)
        X = _one(tr, g, nonconstant=True)
        if X is None:
            return _result(RADIALLY_BOUNDED, A, tr, t)
        stuck, delta = _radial_never_exits(A, X)
        if stuck:
            return _result(RADIALLY_BOUNDED, A, tr, t + 1, Witness((X,), delta, t))
    return _result(RADIALLY_BOUNDED, A, tr, trials)


def audit_flag(A: AcceptanceSet, flag: str, rng, trials: int, *, space=None,
               dims=DEFAULT_DIMS, tol: float = DEFAULT_TOL) -> AxiomAudit:
    """Run the auditor matching a declared flag name."""
    kw = {"space": space, "dims": dims}
    if flag == MONOTONE:
        return check_monotone(A, rng, trials, **kw)
    if flag == NORMALIZED:
        return check_normalized(A, tol, space=space)
    if flag == CONVEX:
        return check_convex_on_pairs(A, UNRESTRICTED, rng, trials, **kw)
    if flag == COMONOTONIC_CONVEX:
        return check_convex_on_pairs(A, COMONOTONIC, rng, trials, **kw)
    if flag == COMPLEMENT_COMONOTONIC_CONVEX:
        return check_convex_on_pairs(complement_view(A), COMONOTONIC, rng, trials,
                                     axiom=COMPLEMENT_COMONOTONIC_CONVEX, **kw)
    if flag == STAR_SHAPED:
        return check_star_shaped(A, rng, trials, **kw)
    if flag == SCALAR_STABLE:
        return check_scalar_stable(A, rng, trials, **kw)
    if flag == RADIALLY_BOUNDED:
        return check_radially_bounded(A, rng, trials, **kw)
    if flag == CLOSED:
        return AxiomAudit(CLOSED, A, 0, INCONCLUSIVE, note="closedness is not black-box auditable")
    raise ValueError(f"unknown flag {flag!r}")


def audit_all(A: AcceptanceSet, seed: int, trials: int, *, space=None,
              dims=DEFAULT_DIMS, flags: Iterable[str] = AUDITABLE_FLAGS) -> dict:
    """Audit every flag with its own seeded stream; returns ``{flag: AxiomAudit}``."""
    out = {}
    for i, flag in enumerate(flags):
        rng = np.random.default_rng([seed, 1000 + i])
        out[flag] = audit_flag(A, flag, rng, trials, space=space, dims=dims)
    return out
