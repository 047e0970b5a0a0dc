"""Seeded, replayable property suites linking acceptance sets to their gauges.

Every suite draws its inputs from generators seeded by ``(seed, stage, trial)``,
so any single trial can be regenerated in isolation, and condenses what it saw
into a :class:`PropertyReport`.

Verdicts are asymmetric.  ``pass`` means no counterexample turned up in the
trials run.  ``fail`` always ships a counterexample whose defect is recomputed
by :func:`replay` through the same raw operations.  Implications whose premise
is itself audited come out ``inconclusive`` when that audit is.

Suite identifiers:

==========================  ====================================================
``risk-corisk``             rho_A equals the complement functional psi
``gauge-cogauge``           Minkowski gauge equals the complement cogauge
``sandwich``                {rho < 0} in A in {rho <= 0}, and {D < 1} in A in {D <= 1}
``additivity-in-class``     convexity of A and its complement inside a class C
``cone-comonotonicity``     members of conv(cone{X, Y}) are pairwise comonotonic
``comonotonic-additivity``  rho_A comonotonic additive iff A and A^c comonotonic convex
``deviation-additivity``    sub/super-linearity and cone additivity of D_A
``deviation-comonotonic``   comonotonic additive deviations and their sub-level sets
``fig1-counterexample``     the gauge of {y - |x| <= 1} is not concave
==========================  ====================================================
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import reference_measures as rm
from .accept_sets import (
    COMONOTONIC,
    COMONOTONIC_CONVEX,
    COMPLEMENT_COMONOTONIC_CONVEX,
    COMPLEMENT_CONVEX_IN_CLASS,
    CONVEX_IN_CLASS,
    FAIL,
    INCONCLUSIVE,
    MONOTONE,
    NORMALIZED,
    PASS,
    STAR_SHAPED,
    UNRESTRICTED,
    AcceptanceSet,
    AxiomAudit,
    check_convex_on_pairs,
    check_monotone,
    check_normalized,
    check_radially_bounded,
    check_scalar_stable,
    check_star_shaped,
    complement_view,
    mix,
    parse_set,
    replay_witness,
    Witness,
)
from .bisection import DEFAULT_TOL
from .errors import ContractError, DomainError
from .gauges import cogauge_complement, minkowski_dev, psi_complement, rho, sublevel_from_dev
from .prob_core import (
    DEFAULT_DIMS,
    ConeElementSpec,
    ProbSpace,
    RandVar,
    cone_element,
    is_comonotonic,
    is_constant,
    lift_second,
    product_space,
    project_unit_covariance,
    project_uncorrelated,
    random_randvar,
    random_scale,
    random_space,
    sample_comonotonic_pair,
)

SCHEMA = "riskset-report/1"
SLACK = 1e-12
CONSISTENCY_FACTOR = 10.0
LEVELS = (0.5, 1.0, 2.0)
CONE_SEARCH = tuple(2.0 ** k for k in range(-20, 21))
VACUOUS = "vacuous"

SUITES = (
    "risk-corisk",
    "gauge-cogauge",
    "sandwich",
    "additivity-in-class",
    "cone-comonotonicity",
    "comonotonic-additivity",
    "deviation-additivity",
    "deviation-comonotonic",
    "fig1-counterexample",
)
CLASS_SPECS = ("comonotonic-span", "independent", "uncorrelated", "unit-covariance")
DEV_NAMES = ("gauge", "sd", "mad")


def slack(k: float, tol: float) -> float:
    """Allowance for a composite assertion built from ``k`` bisection results."""
    return k * tol + SLACK


# -- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    set: Optional[str]
    sampler: str
    trials: int
    seed: int
    tolerance: float = DEFAULT_TOL
    dims: tuple = DEFAULT_DIMS

    def __post_init__(self):
        if self.trials < 1:
            raise DomainError(f"trials must be >= 1, got {self.trials}")
        if not self.tolerance > 0.0:
            raise DomainError(f"tolerance must be positive, got {self.tolerance}")
        if self.seed < 0:
            raise DomainError(f"seed must be non-negative, got {self.seed}")

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "set": self.set,
            "sampler": self.sampler,
            "trials": self.trials,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "dims": list(self.dims),
        }


def _jsonable(x):
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class PropertyReport:
    check: TheoremCheck
    verdict: str
    stats: dict
    counterexample: Optional[dict] = None
    evidence: list = field(default_factory=list)
    audits: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    sweep: list = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA,
            "check": self.check.to_json(),
            "verdict": self.verdict,
            "stats": _jsonable(self.stats),
            "audits": self.audits,
            "notes": list(self.notes),
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.evidence:
            out["evidence"] = self.evidence
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2, allow_nan=False) + "\n"

    def sweep_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["trial", "defect", "seed-path"])
        for trial, defect, path in self.sweep:
            w.writerow([trial, repr(defect), path])
        return buf.getvalue()


class _Run:
    """Accumulates audits, sweep rows and notes for one suite invocation."""

    def __init__(self, check: TheoremCheck):
        self.check = check
        self.audits: list = []
        self.notes: list = []
        self.evidence: list = []
        self.sweep: list = []
        self.extra: dict = {}
        self.max_defect = 0.0

    def audit(self, a: AxiomAudit, label: Optional[str] = None) -> AxiomAudit:
        entry = a.to_json()
        if label:
            entry["label"] = label
        self.audits.append(entry)
        return a

    def record(self, trial: int, defect: float, stage: int) -> None:
        self.sweep.append((trial, defect, f"{self.check.seed}/{stage}/{trial}"))
        if defect > self.max_defect:
            self.max_defect = defect

    def report(self, verdict: str, counterexample: Optional[dict] = None) -> PropertyReport:
        stats = {"trials": len(self.sweep), "max_defect": self.max_defect}
        stats.update(self.extra)
        return PropertyReport(self.check, verdict, stats, counterexample, self.evidence,
                              self.audits, self.notes, self.sweep)


# -- randomness and sampling -------------------------------------------------


def _rng(seed: int, stage: int, trial: Optional[int] = None) -> np.random.Generator:
    key = [seed, stage] if trial is None else [seed, stage, trial]
    return np.random.default_rng(key)


def _dims(A: Optional[AcceptanceSet], dims: Sequence[int]) -> tuple:
    if A is not None and A.dim is not None:
        return (A.dim,)
    return tuple(int(n) for n in dims)


def _space(g: np.random.Generator, dims: Sequence[int]) -> ProbSpace:
    return random_space(g, dims[int(g.integers(len(dims)))])


def _point(g: np.random.Generator, space: ProbSpace) -> RandVar:
    """Generic payoffs with a share of small lattice points, which like to sit on boundaries."""
    u = g.random()
    if u < 0.3:
        return space.rv((g.integers(-8, 9, size=space.n) / 2.0).tolist())
    return random_randvar(g, space, grid=u < 0.5)


def _random_cone_spec(g: np.random.Generator, allow_zero: bool = True) -> ConeElementSpec:
    u = g.random()
    if allow_zero and u < 0.1:
        gamma = 0.0
    elif allow_zero and u < 0.2:
        gamma = 1.0
    else:
        gamma = float(g.uniform(0.05, 0.95))

    def coef() -> float:
        if allow_zero and g.random() < 0.1:
            return 0.0
        return random_scale(g)

    return ConeElementSpec(gamma, coef(), coef())


def _nonconstant_comonotonic_pair(space: ProbSpace, g) -> tuple[RandVar, RandVar]:
    while True:
        X, Y = sample_comonotonic_pair(space, g)
        if not (is_constant(X) or is_constant(Y)):
            return X, Y


class _ComonotonicSpan:
    """Elements of conv(cone{X, Y}) + R for a shared comonotonic generator pair."""

    name = "comonotonic-span"
    scalable = True
    shiftable = True

    def latent(self, space, rng):
        return sample_comonotonic_pair(space, rng)

    def draw(self, latent, space, rng):
        Z = cone_element(*latent, _random_cone_spec(rng))
        return Z + random_scale(rng) * rng.normal() if rng.random() < 0.8 else Z


class _IndependentClass:
    """Payoffs reading only the second coordinate of a product space.

    They are all independent of anything reading the first coordinate; this
    is a linear subclass of the full independence class.
    """

    name = "independent"
    scalable = True
    shiftable = True

    def latent(self, space, rng):
        a = random_space(rng, int(rng.integers(2, 4)))
        b = random_space(rng, int(rng.integers(2, 5)))
        return product_space(a, b), b

    def draw(self, latent, space, rng):
        prod, b = latent
        return lift_second(random_randvar(rng, b, grid=rng.random() < 0.2), prod, b.n)


class _CovarianceClass:
    """Payoffs with a fixed covariance against a non-constant reference X."""

    def __init__(self, name: str, project: Callable, scalable: bool):
        self.name = name
        self.project = project
        self.scalable = scalable
        self.shiftable = True

    def latent(self, space, rng):
        if space.n == 1:
            raise DomainError("a covariance class needs at least two outcomes")
        X = random_randvar(rng, space)
        while is_constant(X):
            X = random_randvar(rng, space)
        return X

    def draw(self, latent, space, rng):
        return self.project(latent, random_randvar(rng, space))


class _ConePool:
    """Elements of conv(cone{X, Y}) for generator pairs taken from a fixed pool."""

    name = "comonotonic-cone"
    scalable = True
    shiftable = False

    def __init__(self, pool: list):
        self.pool = pool

    def latent(self, space, rng):
        return self.pool[int(rng.integers(len(self.pool)))]

    def draw(self, latent, space, rng):
        return cone_element(*latent, _random_cone_spec(rng, allow_zero=False))


def class_sampler(name: str):
    if name == "comonotonic-span":
        return _ComonotonicSpan()
    if name == "independent":
        return _IndependentClass()
    if name == "uncorrelated":
        return _CovarianceClass("uncorrelated", project_uncorrelated, True)
    if name == "unit-covariance":
        # Cov(X, .) = 1 is affine, so rescaling leaves the class.
        return _CovarianceClass("unit-covariance", project_unit_covariance, False)
    raise DomainError(f"unknown class {name!r}; expected one of {CLASS_SPECS}")


# -- functionals and defects -------------------------------------------------

_GAUGES = {"rho": rho, "psi": psi_complement, "dev": minkowski_dev, "cogauge": cogauge_complement}


def functional(name: str, A: AcceptanceSet, tol: float = DEFAULT_TOL) -> Callable[[RandVar], float]:
    """Value-only view of one of the induced functionals of ``A``."""
    if name == "sd":
        return rm.std_dev
    if name == "mad":
        return rm.mean_abs_dev
    fn = _GAUGES[name]
    return lambda X: fn(A, X, tol).value


def _dev_functional(dev: str, A: AcceptanceSet, tol: float):
    if dev not in DEV_NAMES:
        raise DomainError(f"unknown deviation {dev!r}; expected one of {DEV_NAMES}")
    return functional("dev" if dev == "gauge" else dev, A, tol)


def _diff(a: float, b: float) -> float:
    d = a - b
    return 0.0 if math.isnan(d) else d


def _additivity(f, X, Y):
    fx, fy, fxy = f(X), f(Y), f(X + Y)
    return abs(_diff(fxy, fx + fy)), {"f(X)": fx, "f(Y)": fy, "f(X+Y)": fxy}


def _convexity(f, X, Y, lam):
    fx, fy, fm = f(X), f(Y), f(mix(X, Y, lam))
    return _diff(fm, lam * fx + (1.0 - lam) * fy), {"f(X)": fx, "f(Y)": fy, "f(mix)": fm}


def _concavity(f, X, Y, lam):
    d, obs = _convexity(f, X, Y, lam)
    return -d, obs


def _superadditivity(f, X, Y):
    fx, fy, fxy = f(X), f(Y), f(X + Y)
    return _diff(fx + fy, fxy), {"f(X)": fx, "f(Y)": fy, "f(X+Y)": fxy}


def _homogeneity(f, X, t):
    fx, ftx = f(X), f(X * t)
    return abs(_diff(ftx, t * fx)), {"f(X)": fx, "f(tX)": ftx}


def _identity(f, g, X):
    a, b = f(X), g(X)
    return (0.0 if a == b else abs(a - b)), {"first": a, "second": b}


def _sandwich(S, f, X, level):
    inside = S.member(X)
    v = f(X)
    d = _diff(v, level) if inside else _diff(level, v)
    return d, {"member": inside, "value": v, "level": level}


def _cone_violation(X, Y, s1, s2):
    Z, W = cone_element(X, Y, s1), cone_element(X, Y, s2)
    bad = 0.0 if is_comonotonic(Z, W) else 1.0
    item3 = not (is_constant(X) or is_constant(Y))
    if item3:
        for E in (Z, W):
            if is_constant(E) and E.values[0] != 0.0:
                bad = 1.0
    return bad, {"comonotonic": is_comonotonic(Z, W), "item3_checked": item3,
                 "Z": list(Z.values), "W": list(W.values)}


def in_cone_of_complement(A: AcceptanceSet, X: RandVar) -> bool:
    """``X = a Z`` with ``a > 0`` and Z outside A, searched over dyadic scalings."""
    if all(v == 0.0 for v in X.values):
        return True
    member = A.member
    return any(not member(X * d) for d in CONE_SEARCH)


# -- counterexamples and replay ----------------------------------------------


def replay_command(witness: dict) -> str:
    text = json.dumps(_jsonable(witness), sort_keys=True, separators=(",", ":"))
    return f"riskset replay --witness '{text}'"


def _witness(kind: str, points: Sequence[RandVar], tol: float, threshold: float, *,
             set_name: Optional[str] = None, **extra) -> dict:
    w = {
        "kind": kind,
        "points": [p.to_json() for p in points],
        "tolerance": tol,
        "threshold": threshold,
    }
    if set_name is not None:
        w["set"] = set_name
    w.update({k: v for k, v in extra.items() if v is not None})
    return w


def _counterexample(witness: dict, observed: dict, defect: float, trial=None,
                    seed_path: Optional[str] = None, label: Optional[str] = None) -> dict:
    out = {"witness": _jsonable(witness), "observed": _jsonable(observed),
           "defect": _jsonable(defect), "replay": replay_command(witness)}
    if trial is not None:
        out["trial"] = trial
    if seed_path is not None:
        out["seed_path"] = seed_path
    if label is not None:
        out["label"] = label
    return out


def _audit_counterexample(a: AxiomAudit, label: str, tol: float = DEFAULT_TOL, **set_extra) -> dict:
    w = a.witness
    wit = _witness("membership", w.points, tol, 0.5, set_name=set_extra.pop("base", a.target.name),
                   axiom=a.axiom, scalar=w.scalar, **set_extra)
    return _counterexample(wit, {"audit_trial": w.trial}, 1.0, label=label)


def _resolve_set(w: dict, n: int) -> AcceptanceSet:
    S = parse_set(w["set"], n=n)
    assume = w.get("assume")
    if assume:
        S = AcceptanceSet(S.name, S.member, S.declared | frozenset(assume), S.dim)
    sub = w.get("sublevel")
    if sub is not None:
        D = _dev_functional(sub["dev"], S, float(w["tolerance"]))
        S = sublevel_from_dev(D, float(sub["k"]), name=f"sublevel[{sub['dev']}]({S.name})", dim=S.dim)
    if w.get("complement"):
        S = complement_view(S)
    return S


def replay(witness: dict) -> dict:
    """Recompute a counterexample's defect from its serialized inputs."""
    kind = witness["kind"]
    pts = [RandVar.from_json(p) for p in witness["points"]]
    tol = float(witness["tolerance"])
    threshold = float(witness["threshold"])
    scalar = witness.get("scalar")
    if kind == "cone":
        s1, s2 = (ConeElementSpec(*s) for s in witness["specs"])
        defect, obs = _cone_violation(pts[0], pts[1], s1, s2)
    else:
        S = _resolve_set(witness, pts[0].n)
        if kind == "membership":
            ok = replay_witness(witness["axiom"], S, Witness(tuple(pts), scalar))
            defect, obs = (1.0 if ok else 0.0), {"axiom": witness["axiom"], "violated": ok}
        else:
            names = witness["functionals"]
            fs = [functional(name, S, tol) for name in names]
            f = fs[0]
            if kind == "identity":
                defect, obs = _identity(fs[0], fs[1], pts[0])
            elif kind == "additivity":
                defect, obs = _additivity(f, pts[0], pts[1])
            elif kind == "convexity":
                defect, obs = _convexity(f, pts[0], pts[1], float(scalar))
            elif kind == "concavity":
                defect, obs = _concavity(f, pts[0], pts[1], float(scalar))
            elif kind == "superadditivity":
                defect, obs = _superadditivity(f, pts[0], pts[1])
            elif kind == "homogeneity":
                defect, obs = _homogeneity(f, pts[0], float(scalar))
            elif kind == "sandwich":
                defect, obs = _sandwich(S, f, pts[0], float(witness["level"]))
            else:
                raise DomainError(f"unknown witness kind {kind!r}")
    return {
        "kind": kind,
        "defect": _jsonable(defect),
        "threshold": threshold,
        "reproduced": defect > threshold,
        "observed": _jsonable(obs),
    }


# -- suites ------------------------------------------------------------------


def _with_flag(A: AcceptanceSet, flag: str) -> AcceptanceSet:
    return AcceptanceSet(A.name, A.member, A.declared | {flag}, A.dim)


def _precondition(run: _Run, flag: str, audit: Optional[AxiomAudit] = None) -> PropertyReport:
    if audit is None:
        run.notes.append(f"precondition: set is not declared {flag}")
    else:
        run.notes.append(f"precondition: {flag} audit returned {audit.verdict}")
    return run.report(INCONCLUSIVE)


def _monetary_precondition(run: _Run, A: AcceptanceSet, tol: float) -> Optional[PropertyReport]:
    """rho needs a declared monotone set; the risk theorems also need 0 to be the least accepted constant."""
    if not A.has(MONOTONE):
        return _precondition(run, MONOTONE)
    norm = run.audit(check_normalized(A, tol))
    if norm.verdict != PASS:
        return _precondition(run, NORMALIZED, norm)
    return None


def verify_risk_corisk(A: AcceptanceSet, trials: int = 1000, seed: int = 0,
                       tol: float = DEFAULT_TOL, dims: Sequence[int] = DEFAULT_DIMS) -> PropertyReport:
    """``|rho_A(X) - psi_{A^c}(X)| <= 2 tol`` for a monotone A."""
    dims = _dims(A, dims)
    run = _Run(TheoremCheck("risk-corisk", A.name, "unrestricted", trials, seed, tol, dims))
    pre = run.audit(check_monotone(A, _rng(seed, 0), trials, dims=dims))
    if pre.verdict != PASS:
        return _precondition(run, MONOTONE, pre)
    if not A.has(MONOTONE):
        return _precondition(run, MONOTONE)
    f, g = functional("rho", A, tol), functional("psi", A, tol)
    bound = slack(2, tol)
    for t in range(trials):
        gen = _rng(seed, 1, t)
        X = _point(gen, _space(gen, dims))
        d, obs = _identity(f, g, X)
        run.record(t, d, 1)
        if d > bound:
            w = _witness("identity", [X], tol, bound, set_name=A.name, functionals=["rho", "psi"])
            return run.report(FAIL, _counterexample(w, obs, d, t, f"{seed}/1/{t}"))
    return run.report(PASS)


def verify_gauge_cogauge(A: AcceptanceSet, trials: int = 1000, seed: int = 0,
                         tol: float = DEFAULT_TOL, dims: Sequence[int] = DEFAULT_DIMS) -> PropertyReport:
    """``|D_A(X) - W_{A^c}(X)| <= 2 tol`` for a star-shaped A."""
    dims = _dims(A, dims)
    run = _Run(TheoremCheck("gauge-cogauge", A.name, "unrestricted", trials, seed, tol, dims))
    pre = run.audit(check_star_shaped(A, _rng(seed, 0), trials, dims=dims))
    if pre.verdict != PASS:
        return _precondition(run, STAR_SHAPED, pre)
    if not A.has(STAR_SHAPED):
        return _precondition(run, STAR_SHAPED)
    f, g = functional("dev", A, tol), functional("cogauge", A, tol)
    bound = slack(2, tol)
    for t in range(trials):
        gen = _rng(seed, 1, t)
        X = _point(gen, _space(gen, dims))
        d, obs = _identity(f, g, X)
        run.record(t, d, 1)
        if d > bound:
            w = _witness("identity", [X], tol, bound, set_name=A.name, functionals=["dev", "cogauge"])
            return run.report(FAIL, _counterexample(w, obs, d, t, f"{seed}/1/{t}"))
    return run.report(PASS)


def verify_sandwich(A: AcceptanceSet, trials: int = 1000, seed: int = 0,
                    tol: float = DEFAULT_TOL, dims: Sequence[int] = DEFAULT_DIMS) -> PropertyReport:
    """Strict sub-level set inside A inside the closed sub-level set, for rho and for D.

    The risk form runs when A is declared monotone, the deviation form when A
    is declared star-shaped.  Points outside A whose gauge sits at the
    threshold are not violations; they are counted as closure gap points.
    """
    dims = _dims(A, dims)
    run = _Run(TheoremCheck("sandwich", A.name, "unrestricted+lattice", trials, seed, tol, dims))
    forms = []
    if A.has(MONOTONE):
        forms.append(("rho", 0.0))
    if A.has(STAR_SHAPED):
        forms.append(("dev", 1.0))
    if not forms:
        run.notes.append("set is declared neither monotone nor star-shaped; no form applies")
        return run.report(INCONCLUSIVE)
    fns = [(name, level, functional(name, A, tol)) for name, level in forms]
    bound = slack(2, tol)
    gaps = {name: 0 for name, _ in forms}
    for t in range(trials):
        gen = _rng(seed, 1, t)
        X = _point(gen, _space(gen, dims))
        worst = 0.0
        for name, level, f in fns:
            d, obs = _sandwich(A, f, X, level)
            if d > bound:
                run.record(t, d, 1)
                w = _witness("sandwich", [X], tol, bound, set_name=A.name, functionals=[name], level=level)
                return run.report(FAIL, _counterexample(w, obs, d, t, f"{seed}/1/{t}"))
            if not obs["member"] and d >= -bound:
                gaps[name] += 1
                if gaps[name] == 1:
                    w = _witness("sandwich", [X], tol, -bound, set_name=A.name, functionals=[name],
                                 level=level)
                    run.evidence.append(_counterexample(w, obs, d, t, f"{seed}/1/{t}", label=f"closure-gap-{name}"))
            worst = max(worst, d)
        run.record(t, worst, 1)
    run.extra["forms"] = [name for name, _ in forms]
    run.extra["closure_gap_points"] = gaps
    for name, count in gaps.items():
        if count:
            run.notes.append(
                f"closure gap ({name}): {count} points lie outside the set with gauge at the threshold;"
                " the set is not closed there"
            )
    return run.report(PASS)


def verify_main_lemma(A: AcceptanceSet, cone_spec: str = "comonotonic-span", trials: int = 1000,
                      seed: int = 0, tol: float = DEFAULT_TOL,
                      dims: Sequence[int] = DEFAULT_DIMS) -> PropertyReport:
    """Convexity of A and of its complement inside a class C, versus the shape of rho on C.

    Both intersections convex: rho additive on C.  Only ``A & C``: rho convex on
    C.  Only ``A^c & C``: rho concave on C.
    """
    cls = class_sampler(cone_spec)
    dims = _dims(A, dims)
    run = _Run(TheoremCheck("additivity-in-class", A.name, cls.name, trials, seed, tol, dims))
    blocked = _monetary_precondition(run, A, tol)
    if blocked is not None:
        return blocked
    kw = dict(dims=dims, allow_shift=cls.shiftable, allow_scale=cls.scalable)
    in_a = run.audit(check_convex_on_pairs(A, cls, _rng(seed, 1), trials, axiom=CONVEX_IN_CLASS, **kw))
    in_c = run.audit(check_convex_on_pairs(complement_view(A), cls, _rng(seed, 2), trials,
                                           axiom=COMPLEMENT_CONVEX_IN_CLASS, **kw))
    if in_a.verdict == PASS and in_c.verdict == PASS:
        branch = "additive"
    elif in_a.verdict == PASS:
        branch = "convex"
    elif in_c.verdict == PASS:
        branch = "concave"
    else:
        branch = None
    run.extra["branch"] = branch
    f = functional("rho", A, tol)
    bound = slack(3, tol)
    max_add = 0.0
    add_example = None
    failure = None
    for t in range(trials):
        gen = _rng(seed, 3, t)
        sp = _space(gen, dims)
        latent = cls.latent(sp, gen)
        U, V = cls.draw(latent, sp, gen), cls.draw(latent, sp, gen)
        lam = float(gen.random())
        add, add_obs = _additivity(f, U, V)
        if add > max_add:
            max_add = add
            add_example = (U, V, add_obs, add, t)
        if branch == "additive":
            d, obs, kind = add, add_obs, "additivity"
        elif branch == "convex":
            (d, obs), kind = _convexity(f, U, V, lam), "convexity"
        elif branch == "concave":
            (d, obs), kind = _concavity(f, U, V, lam), "concavity"
        else:
            continue
        run.record(t, d, 3)
        if d > bound and failure is None:
            scalar = None if kind == "additivity" else lam
            w = _witness(kind, [U, V], tol, bound, set_name=A.name, functionals=["rho"], scalar=scalar)
            failure = _counterexample(w, obs, d, t, f"{seed}/3/{t}")
            break
    run.extra["max_additivity_defect"] = max_add
    if failure is not None:
        return run.report(FAIL, failure)
    if branch is None:
        run.notes.append("neither intersection passed its convexity audit; no shape is implied")
        return run.report(INCONCLUSIVE)
    if branch != "additive" and max_add > CONSISTENCY_FACTOR * tol:
        U, V, obs, d, t = add_example
        w = _witness("additivity", [U, V], tol, CONSISTENCY_FACTOR * tol, set_name=A.name, functionals=["rho"])
        run.evidence.append(_counterexample(w, obs, d, t, f"{seed}/3/{t}", label="additivity-fails"))
        run.notes.append(f"only the {branch} shape is implied; additivity fails (defect {d!r})")
    return run.report(PASS)


def verify_cone_comono(trials: int = 1000, seed: int = 0,
                       dims: Sequence[int] = DEFAULT_DIMS) -> PropertyReport:
    """Members of conv(cone{X, Y}) are pairwise comonotonic, and its only constant is 0."""
    dims = tuple(dims)
    run = _Run(TheoremCheck("cone-comonotonicity", None, "comonotonic+cone-specs", trials, seed,
                            DEFAULT_TOL, dims))
    skipped = 0
    for t in range(trials):
        g = _rng(seed, 1, t)
        sp = _space(g, dims)
        X, Y = sample_comonotonic_pair(sp, g)
        if g.random() < 0.05:
            X = sp.constant(random_scale(g) * g.normal())
        s1, s2 = _random_cone_spec(g), _random_cone_spec(g)
        bad, obs = _cone_violation(X, Y, s1, s2)
        run.record(t, bad, 1)
        if not obs["item3_checked"]:
            skipped += 1
        if bad:
            specs = [[s.gamma, s.lam, s.delta] for s in (s1, s2)]
            w = _witness("cone", [X, Y], DEFAULT_TOL, 0.5, specs=specs)
            return run.report(FAIL, _counterexample(w, obs, bad, t, f"{seed}/1/{t}"))
    run.extra["violations"] = 0
    run.extra["constant_check_skipped"] = skipped
    if skipped:
        run.notes.append(f"{skipped} trials had a constant generator; the constants check was skipped there")
    return run.report(PASS)


def _witness_defect(f, a: AxiomAudit):
    """Additivity defect at the comonotonic pair (lam X, (1 - lam) Y) of a convexity witness."""
    X, Y = a.witness.points
    lam = a.witness.scalar
    U, V = X * lam, Y * (1.0 - lam)
    d, obs = _additivity(f, U, V)
    return d, obs, U, V


def _contrapositive(run: _Run, A: AcceptanceSet, audits, fname: str, f, tol: float,
                    worst, assume=None) -> str:
    """Verdict when some comonotonic convexity audit did not pass.

    A failed audit must come with an additivity defect above the consistency
    threshold, either in the sweep or at the pair built from the witness.
    """
    failed = [a for a in audits if a.verdict == FAIL]
    if not failed:
        run.notes.append("a comonotonic convexity audit was inconclusive; no direction can be checked")
        return INCONCLUSIVE
    threshold = CONSISTENCY_FACTOR * tol
    best = 0.0
    for a in failed:
        run.evidence.append(_audit_counterexample(a, f"{a.axiom}-witness", tol))
        d, obs, U, V = _witness_defect(f, a)
        best = max(best, d)
        if d > threshold:
            w = _witness("additivity", [U, V], tol, threshold, set_name=A.name, functionals=[fname],
                         assume=assume)
            run.evidence.append(_counterexample(w, obs, d, label=f"{a.axiom}-witness-defect"))
    run.extra["witness_defect"] = best
    if worst is not None and worst[0] > threshold:
        d, X, Y, obs, t, stage = worst
        w = _witness("additivity", [X, Y], tol, threshold, set_name=A.name, functionals=[fname], assume=assume)
        run.evidence.append(_counterexample(w, obs, d, t, f"{run.check.seed}/{stage}/{t}", label="sweep-defect"))
    found = max(best, run.max_defect)
    if found > threshold:
        run.notes.append(
            f"consistent contrapositive: audit witness present and additivity defect {found!r} found"
        )
        return PASS
    run.notes.append("audit witness present but no additivity defect above the consistency threshold")
    return INCONCLUSIVE


def verify_main_theorem(A: AcceptanceSet, trials: int = 1000, seed: int = 0,
                        tol: float = DEFAULT_TOL, dims: Sequence[int] = DEFAULT_DIMS) -> PropertyReport:
    """rho_A is comonotonic additive iff A and A^c are comonotonic convex."""
    dims = _dims(A, dims)
    run = _Run(TheoremCheck("comonotonic-additivity", A.name, "comonotonic", trials, seed, tol, dims))
    blocked = _monetary_precondition(run, A, tol)
    if blocked is not None:
        return blocked
    aud_a = run.audit(check_convex_on_pairs(A, COMONOTONIC, _rng(seed, 1), trials, dims=dims))
    aud_c = run.audit(check_convex_on_pairs(complement_view(A), COMONOTONIC, _rng(seed, 2), trials,
                                            dims=dims, axiom=COMPLEMENT_COMONOTONIC_CONVEX))
    f = functional("rho", A, tol)
    worst = None
    for t in range(trials):
        g = _rng(seed, 3, t)
        X, Y = sample_comonotonic_pair(_space(g, dims), g)
        d, obs = _additivity(f, X, Y)
        run.record(t, d, 3)
        if worst is None or d > worst[0]:
            worst = (d, X, Y, obs, t, 3)
    bound = slack(3, tol)
    if aud_a.verdict == PASS and aud_c.verdict == PASS:
        if run.max_defect <= bound:
            return run.report(PASS)
        d, X, Y, obs, t, stage = worst
        w = _witness("additivity", [X, Y], tol, bound, set_name=A.name, functionals=["rho"])
        run.notes.append("both comonotonic convexity audits passed, yet rho is not comonotonic additive")
        return run.report(FAIL, _counterexample(w, obs, d, t, f"{seed}/{stage}/{t}"))
    return run.report(_contrapositive(run, A, (aud_a, aud_c), "rho", f, tol, worst))


def _combine(statuses: Iterable[str]) -> str:
    s = [x for x in statuses if x != VACUOUS]
    if FAIL in s:
        return FAIL
    if not s or INCONCLUSIVE in s:
        return INCONCLUSIVE
    return PASS


def _cone_pool(g, dims, accept: Callable[[RandVar, RandVar], bool], size: int = 32,
               attempts: int = 400) -> list:
    pool = []
    for _ in range(attempts):
        X, Y = _nonconstant_comonotonic_pair(_space(g, dims), g)
        if accept(X, Y):
            pool.append((X, Y))
            if len(pool) >= size:
                break
    return pool


_PROBES = (0.1, 0.25, 0.5, 0.75, 0.9)


def _linear_on_cone(D, X: RandVar, Y: RandVar, tol: float) -> bool:
    """Probe additivity of D on conv(cone{X, Y}) at a handful of mixtures."""
    dx, dy = D(X), D(Y)
    if not (math.isfinite(dx) and math.isfinite(dy)):
        return False
    if abs(D(X + Y) - dx - dy) > slack(3, tol):
        return False
    return all(abs(D(mix(X, Y, t)) - t * dx - (1.0 - t) * dy) <= slack(3, tol) for t in _PROBES)


def _sublevel_audits(run: _Run, A: AcceptanceSet, dev: str, D, levels, sampler, axioms,
                     seed: int, stage: int, trials: int, dims, tol: float) -> str:
    """Convexity audits of {D <= k} and its complement under ``sampler``, for each level k.

    A failed audit only counts against the theorem when D is additive at the
    witness itself (the sampler may have strayed where D is not linear).
    """
    statuses = []
    for i, k in enumerate(levels):
        S = sublevel_from_dev(D, k, name=f"sublevel[{dev}]({A.name})", dim=A.dim)
        for j, (target, axiom, comp) in enumerate(((S, axioms[0], False),
                                                   (complement_view(S), axioms[1], True))):
            a = run.audit(check_convex_on_pairs(target, sampler, _rng(seed, stage + 2 * i + j), trials,
                                                dims=dims, axiom=axiom,
                                                allow_shift=getattr(sampler, "shiftable", True),
                                                allow_scale=getattr(sampler, "scalable", True)),
                          label=f"k={k!r}")
            if a.verdict == PASS:
                statuses.append(PASS)
                continue
            if a.verdict == INCONCLUSIVE:
                run.notes.append(f"k={k!r}: {a.axiom} audit inconclusive ({a.note})")
                statuses.append(INCONCLUSIVE)
                continue
            U, V = a.witness.points
            lin, _ = _convexity(D, U, V, a.witness.scalar)
            if abs(lin) > slack(3, tol):
                run.notes.append(f"k={k!r}: witness lies where D is not additive (defect {abs(lin)!r});"
                                 " premise not met there")
                statuses.append(INCONCLUSIVE)
                continue
            cex = _audit_counterexample(a, f"sublevel-k={k!r}", tol, base=A.name,
                                        sublevel={"dev": dev, "k": k}, complement=comp or None)
            run.notes.append(f"k={k!r}: sub-level convexity fails although D is additive at the witness")
            run.extra.setdefault("sublevel_counterexample", cex)
            statuses.append(FAIL)
    return _combine(statuses)


def verify_dev_additive(A: AcceptanceSet, trials: int = 1000, seed: int = 0, tol: float = DEFAULT_TOL,
                        dims: Sequence[int] = DEFAULT_DIMS, dev: str = "gauge",
                        levels: Sequence[float] = LEVELS) -> PropertyReport:
    """Shape of the Minkowski gauge D_A from convexity of A, of A^c and of cone slices.

    1. A convex: D_A convex and positively homogeneous.
    2. A^c convex: D_A superadditive and concave on cone(A^c).
    3. A and A^c convex inside a comonotonic cone C within cone(A^c): D_A additive on C.
    4. ``dev`` additive on a comonotonic cone C: {dev <= k} & C and its complement in C convex.
    """
    dims = _dims(A, dims)
    run = _Run(TheoremCheck("deviation-additivity", A.name, f"unrestricted+cones;dev={dev}", trials,
                            seed, tol, dims))
    if not A.has(STAR_SHAPED):
        return _precondition(run, STAR_SHAPED)
    D = functional("dev", A, tol)
    items: dict = {}
    failure = None

    def fail_with(kind, pts, obs, d, bound, t, stage, scalar=None, fname="dev"):
        w = _witness(kind, pts, tol, bound, set_name=A.name, functionals=[fname], scalar=scalar)
        return _counterexample(w, obs, d, t, f"{seed}/{stage}/{t}")

    # item 1
    conv = run.audit(check_convex_on_pairs(A, UNRESTRICTED, _rng(seed, 1), trials, dims=dims), "item1")
    if conv.verdict != PASS:
        items["1"] = VACUOUS if conv.verdict == FAIL else INCONCLUSIVE
    else:
        items["1"] = PASS
        for t in range(trials):
            g = _rng(seed, 2, t)
            sp = _space(g, dims)
            X, Y = _point(g, sp), _point(g, sp)
            lam = float(g.random())
            s = float(g.choice([0.5, 2.0, 10.0]))
            d, obs = _convexity(D, X, Y, lam)
            run.record(t, d, 2)
            if d > slack(3, tol):
                items["1"], failure = FAIL, fail_with("convexity", [X, Y], obs, d, slack(3, tol), t, 2, lam)
                break
            h, hobs = _homogeneity(D, X, s)
            if h > slack(1.0 + s, tol):
                items["1"], failure = FAIL, fail_with("homogeneity", [X], hobs, h, slack(1.0 + s, tol), t, 2, s)
                break

    # item 2
    comp = complement_view(A)
    cconv = run.audit(check_convex_on_pairs(comp, UNRESTRICTED, _rng(seed, 3), trials, dims=dims), "item2")
    global_concavity = 0.0
    if cconv.verdict != PASS:
        items["2"] = VACUOUS if cconv.verdict == FAIL else INCONCLUSIVE
    elif failure is None:
        items["2"] = PASS
        outside = 0
        for t in range(trials):
            g = _rng(seed, 4, t)
            sp = _space(g, dims)
            P, Q = _point(g, sp), _point(g, sp)
            lam = float(g.random())
            gc, gobs = _concavity(D, P, Q, lam)
            if gc > global_concavity:
                global_concavity = gc
                if gc > CONSISTENCY_FACTOR * tol:
                    w = _witness("concavity", [P, Q], tol, CONSISTENCY_FACTOR * tol, set_name=A.name,
                                 functionals=["dev"], scalar=lam)
                    run.extra["global_concavity_example"] = _counterexample(w, gobs, gc, t, f"{seed}/4/{t}")
            pts = []
            for _ in range(50):
                Z = _point(g, sp)
                if in_cone_of_complement(A, Z):
                    pts.append(Z)
                    if len(pts) == 2:
                        break
            if len(pts) < 2:
                outside += 1
                continue
            X, Y = pts
            d, obs = _superadditivity(D, X, Y)
            run.record(t, d, 4)
            if d > slack(3, tol):
                items["2"], failure = FAIL, fail_with("superadditivity", [X, Y], obs, d, slack(3, tol), t, 4)
                break
            c, cobs = _concavity(D, X, Y, lam)
            if c > slack(3, tol):
                items["2"], failure = FAIL, fail_with("concavity", [X, Y], cobs, c, slack(3, tol), t, 4, lam)
                break
        run.extra["item2_trials_outside_cone"] = outside
        run.extra["global_concavity_defect"] = global_concavity
        if global_concavity > CONSISTENCY_FACTOR * tol:
            run.notes.append(f"D_A is not concave off cone(A^c): defect {global_concavity!r}")

    # item 3
    if failure is None:
        pool = _cone_pool(_rng(seed, 5), dims,
                          lambda X, Y: in_cone_of_complement(A, X) and in_cone_of_complement(A, Y))
        if not pool:
            items["3"] = INCONCLUSIVE
            run.notes.append("item 3: no comonotonic cone inside cone(A^c) was found")
        else:
            cones = _ConePool(pool)
            kw = dict(dims=dims, allow_shift=False)
            ia = run.audit(check_convex_on_pairs(A, cones, _rng(seed, 6), trials, axiom=CONVEX_IN_CLASS, **kw),
                           "item3")
            ic = run.audit(check_convex_on_pairs(comp, cones, _rng(seed, 7), trials,
                                                 axiom=COMPLEMENT_CONVEX_IN_CLASS, **kw), "item3")
            asserted = ia.verdict == PASS and ic.verdict == PASS
            max_add = 0.0
            for t in range(trials):
                g = _rng(seed, 8, t)
                latent = cones.latent(None, g)
                U, V = cones.draw(latent, None, g), cones.draw(latent, None, g)
                if not (in_cone_of_complement(A, U) and in_cone_of_complement(A, V)):
                    continue
                d, obs = _additivity(D, U, V)
                max_add = max(max_add, d)
                if asserted:
                    run.record(t, d, 8)
                    if d > slack(3, tol):
                        items["3"], failure = FAIL, fail_with("additivity", [U, V], obs, d, slack(3, tol), t, 8)
                        break
            run.extra["item3_max_additivity_defect"] = max_add
            if failure is None:
                if asserted:
                    items["3"] = PASS
                else:
                    items["3"] = VACUOUS if FAIL in (ia.verdict, ic.verdict) else INCONCLUSIVE
                    run.notes.append(f"item 3: intersection audits did not both pass; cone additivity defect"
                                     f" {max_add!r} is not asserted")

    # item 4
    if failure is None:
        Dk = _dev_functional(dev, A, tol)
        pool = _cone_pool(_rng(seed, 9), dims, lambda X, Y: _linear_on_cone(Dk, X, Y, tol))
        run.extra["item4_additive_cones"] = len(pool)
        if not pool:
            items["4"] = VACUOUS
            run.notes.append(f"item 4: {dev} was not additive on any sampled comonotonic cone")
        else:
            items["4"] = _sublevel_audits(run, A, dev, Dk, levels, _ConePool(pool),
                                          (CONVEX_IN_CLASS, COMPLEMENT_CONVEX_IN_CLASS),
                                          seed, 10, trials, dims, tol)
            failure = run.extra.pop("sublevel_counterexample", None)

    run.extra["items"] = items
    verdict = FAIL if failure is not None else _combine(items.values())
    return run.report(verdict, failure)


def verify_coro_como(A: AcceptanceSet, trials: int = 1000, seed: int = 0, tol: float = DEFAULT_TOL,
                     dims: Sequence[int] = DEFAULT_DIMS, dev: str = "gauge",
                     levels: Sequence[float] = LEVELS) -> PropertyReport:
    """Comonotonic additive deviations versus comonotonic convex acceptance sets.

    1. A radially bounded at non-constants, stable under scalar addition, with
       A and A^c comonotonic convex: A is star-shaped and D_A comonotonic additive.
    2. ``dev`` comonotonic additive: {dev <= k} and its complement are comonotonic convex.
    """
    dims = _dims(A, dims)
    run = _Run(TheoremCheck("deviation-comonotonic", A.name, f"comonotonic;dev={dev}", trials, seed,
                            tol, dims))
    items: dict = {}
    failure = None
    radial = run.audit(check_radially_bounded(A, _rng(seed, 1), trials, dims=dims))
    stable = run.audit(check_scalar_stable(A, _rng(seed, 2), trials, dims=dims))
    como_a = run.audit(check_convex_on_pairs(A, COMONOTONIC, _rng(seed, 3), trials, dims=dims))
    como_c = run.audit(check_convex_on_pairs(complement_view(A), COMONOTONIC, _rng(seed, 4), trials,
                                             dims=dims, axiom=COMPLEMENT_COMONOTONIC_CONVEX))
    star = run.audit(check_star_shaped(A, _rng(seed, 5), trials, dims=dims))
    premise = radial.verdict == PASS and stable.verdict == PASS
    como = (como_a, como_c)
    como_pass = all(a.verdict == PASS for a in como)
    assume = None
    G = A
    if star.verdict == PASS and not A.has(STAR_SHAPED):
        G, assume = _with_flag(A, STAR_SHAPED), [STAR_SHAPED]
        run.notes.append("star-shapedness established by audit, not declaration")

    if star.verdict == FAIL:
        if premise and como_pass:
            items["1"] = FAIL
            failure = _audit_counterexample(star, "star-shaped", tol)
            run.notes.append("all premises passed their audits, yet A is not star-shaped")
        elif any(a.verdict == FAIL for a in (radial, stable, como_a, como_c)):
            items["1"] = PASS
            run.notes.append("A is not star-shaped and a premise audit failed: consistent")
        else:
            items["1"] = INCONCLUSIVE
    elif star.verdict == INCONCLUSIVE:
        items["1"] = INCONCLUSIVE
    else:
        D = functional("dev", G, tol)
        worst = None
        for t in range(trials):
            g = _rng(seed, 6, t)
            X, Y = _nonconstant_comonotonic_pair(_space(g, dims), g)
            d, obs = _additivity(D, X, Y)
            run.record(t, d, 6)
            if worst is None or d > worst[0]:
                worst = (d, X, Y, obs, t, 6)
        bound = slack(3, tol)
        if not premise:
            items["1"] = VACUOUS
            run.notes.append("radial boundedness or scalar stability did not pass; item 1 premise not met")
        elif como_pass:
            if run.max_defect <= bound:
                items["1"] = PASS
            else:
                d, X, Y, obs, t, stage = worst
                w = _witness("additivity", [X, Y], tol, bound, set_name=A.name, functionals=["dev"],
                             assume=assume)
                failure = _counterexample(w, obs, d, t, f"{seed}/{stage}/{t}")
                items["1"] = FAIL
                run.notes.append("all audits passed, yet D_A is not comonotonic additive")
        else:
            items["1"] = _contrapositive(run, G, como, "dev", D, tol, worst, assume)

    if failure is None:
        Dk = _dev_functional(dev, G, tol) if dev != "gauge" or G.has(STAR_SHAPED) else None
        if Dk is None:
            items["2"] = INCONCLUSIVE
            run.notes.append("item 2: D_A is undefined for a set that is not star-shaped")
        else:
            premise_defect = 0.0
            for t in range(trials):
                g = _rng(seed, 7, t)
                X, Y = sample_comonotonic_pair(_space(g, dims), g)
                premise_defect = max(premise_defect, _additivity(Dk, X, Y)[0])
            run.extra["item2_premise_defect"] = premise_defect
            if premise_defect > slack(3, tol):
                items["2"] = VACUOUS
                run.notes.append(f"item 2: {dev} is not comonotonic additive here (defect {premise_defect!r});"
                                 " premise not met")
            else:
                items["2"] = _sublevel_audits(run, G, dev, Dk, levels, COMONOTONIC,
                                              (COMONOTONIC_CONVEX, COMPLEMENT_COMONOTONIC_CONVEX),
                                              seed, 8, trials, dims, tol)
                failure = run.extra.pop("sublevel_counterexample", None)

    run.extra["items"] = items
    verdict = FAIL if failure is not None else _combine(items.values())
    return run.report(verdict, failure)


FIG1_POINTS = {"Y": (1.0, 0.5), "Z": (1.0, 1.0), "W": (1.0, 2.0)}


def counterexample_fig1(tol: float = DEFAULT_TOL) -> PropertyReport:
    """The gauge of {(x, y) : y - |x| <= 1} on two equally likely outcomes is not concave.

    Z is the mixture (1/3) W + (2/3) Y, yet D(Z) = 0 lies below the matching
    mixture of D(W) = 1 and D(Y) = 0.
    """
    A = parse_set("catalog:fig1", n=2)
    space = ProbSpace.uniform(2)
    run = _Run(TheoremCheck("fig1-counterexample", A.name, "fixed", 1, 0, tol, (2,)))
    pts = {k: space.rv(v) for k, v in FIG1_POINTS.items()}
    D = functional("dev", A, tol)
    vals = {k: D(p) for k, p in pts.items()}
    Y, Z, W = pts["Y"], pts["Z"], pts["W"]
    # Solve Z = lam W + (1 - lam) Y in the second coordinate and confirm it in the first.
    lam = (Z.values[1] - Y.values[1]) / (W.values[1] - Y.values[1])
    mixed = mix(W, Y, lam)
    mixture_gap = max(abs(a - b) for a, b in zip(mixed.values, Z.values))
    defect = vals["Z"] - (lam * vals["W"] + (1.0 - lam) * vals["Y"])
    expected = {"Y": 0.0, "Z": 0.0, "W": 1.0}
    checks = {f"D({k})": abs(vals[k] - expected[k]) <= 1e-6 for k in expected}
    checks["lambda"] = abs(lam - 1.0 / 3.0) <= 1e-12 and mixture_gap <= 1e-12
    checks["concavity_defect"] = abs(defect + 1.0 / 3.0) <= 1e-6
    run.extra.update({
        "values": vals,
        "lambda": lam,
        "concavity_defect": defect,
        "checks": checks,
        "points": {k: list(v) for k, v in FIG1_POINTS.items()},
    })
    run.record(0, abs(defect), 0)
    w = _witness("concavity", [W, Y], tol, CONSISTENCY_FACTOR * tol, set_name=A.name, functionals=["dev"],
                 scalar=lam)
    obs = {"f(X)": vals["W"], "f(Y)": vals["Y"], "f(mix)": vals["Z"]}
    run.evidence.append(_counterexample(w, obs, -defect, label="non-concavity"))
    return run.report(PASS if all(checks.values()) else FAIL)


# -- dispatch ----------------------------------------------------------------


def run_suite(suite: str, A: Optional[AcceptanceSet], *, trials: int, seed: int,
              tol: float = DEFAULT_TOL, dims: Sequence[int] = DEFAULT_DIMS,
              cone_spec: str = "comonotonic-span", dev: str = "gauge") -> PropertyReport:
    """Run a suite by its identifier; ``A`` may be None only for set-free suites."""
    if suite == "cone-comonotonicity":
        return verify_cone_comono(trials, seed, dims)
    if suite == "fig1-counterexample":
        return counterexample_fig1(tol)
    if suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}; expected one of {SUITES}")
    if A is None:
        raise ContractError(f"suite {suite!r} needs a set")
    kw = dict(trials=trials, seed=seed, tol=tol, dims=dims)
    if suite == "risk-corisk":
        return verify_risk_corisk(A, **kw)
    if suite == "gauge-cogauge":
        return verify_gauge_cogauge(A, **kw)
    if suite == "sandwich":
        return verify_sandwich(A, **kw)
    if suite == "additivity-in-class":
        return verify_main_lemma(A, cone_spec, **kw)
    if suite == "comonotonic-additivity":
        return verify_main_theorem(A, **kw)
    if suite == "deviation-additivity":
        return verify_dev_additive(A, dev=dev, **kw)
    return verify_coro_como(A, dev=dev, **kw)
