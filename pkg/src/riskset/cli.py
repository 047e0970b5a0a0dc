"""Command-line front end.

Exit status: 0 all verdicts pass, 1 at least one fail, 2 usage or input
error, 3 inconclusive verdicts present.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field
from typing import Optional

from . import reference_measures as rm
from . import theorem_lab as lab
from .accept_sets import AUDITABLE_FLAGS, CLOSED, FAIL, INCONCLUSIVE, PASS, audit_all, parse_set
from .bisection import DEFAULT_TOL
from .errors import RisksetError
from .gauges import cogauge_complement, minkowski_dev, psi_complement, rho
from .prob_core import DEFAULT_DIMS, ProbSpace, RandVar

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
SEED_ENV = "RISKSET_SEED"

GAUGE_KINDS = {"rho": rho, "psi": psi_complement, "dev": minkowski_dev, "cogauge": cogauge_complement}


class UsageError(Exception):
    """Bad configuration or input; maps to exit status 2."""


@dataclass
class RunConfig:
    command: str
    set: Optional[str] = None
    measure: Optional[str] = None
    alpha: Optional[float] = None
    theta: Optional[float] = None
    input: Optional[str] = None
    vector: Optional[str] = None
    probs: Optional[str] = None
    kind: str = "rho"
    theorem: Optional[str] = None
    target: Optional[str] = None
    cone_spec: str = "comonotonic-span"
    dev: str = "gauge"
    flags: Optional[list] = None
    trials: int = 1000
    seed: int = 0
    tol: float = DEFAULT_TOL
    dims: tuple = DEFAULT_DIMS
    report: Optional[str] = None
    format: str = "json"
    witness: Optional[str] = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.trials < 1:
            raise UsageError(f"--trials must be >= 1, got {self.trials}")
        if not self.tol > 0.0:
            raise UsageError(f"--tol must be positive, got {self.tol}")
        if self.seed < 0:
            raise UsageError(f"--seed must be non-negative, got {self.seed}")
        if not self.dims or any(n < 1 for n in self.dims):
            raise UsageError(f"--dims must list positive space sizes, got {self.dims}")
        if self.report is not None:
            parent = os.path.dirname(os.path.abspath(self.report))
            if not os.path.isdir(parent):
                raise UsageError(f"report directory does not exist: {parent}")


# -- input -------------------------------------------------------------------


def _parse_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _floats(text: str, what: str) -> list:
    try:
        return [float(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated numbers, got {text!r}") from None


def load_vectors(cfg: RunConfig) -> dict:
    """Named random variables from ``--input`` (JSON) or ``--vector``/``--probs``."""
    if cfg.input is not None and cfg.vector is not None:
        raise UsageError("give either --input or --vector, not both")
    if cfg.vector is not None:
        values = _floats(cfg.vector, "--vector")
        probs = _floats(cfg.probs, "--probs") if cfg.probs else None
        space = ProbSpace(probs) if probs is not None else ProbSpace.uniform(len(values))
        return {"X": RandVar(tuple(values), space)}
    if cfg.input is None:
        raise UsageError("an input is required: --input FILE or --vector 'x1,x2,...'")
    if cfg.input == "-":
        text, source = sys.stdin.read(), "<stdin>"
    else:
        try:
            with open(cfg.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.input}: {exc.strerror}") from None
        source = cfg.input
    data = _parse_json(text, source)
    if not isinstance(data, dict):
        raise UsageError(f"{source}: expected a JSON object with 'vectors' or 'values'")
    if "vectors" in data:
        vectors = data["vectors"]
        if not isinstance(vectors, dict) or not vectors:
            raise UsageError(f"{source}: 'vectors' must be a non-empty object of name -> list")
    elif "values" in data:
        vectors = {"X": data["values"]}
    else:
        raise UsageError(f"{source}: expected 'vectors' or 'values'")
    lengths = {len(v) for v in vectors.values() if isinstance(v, list)}
    if len(lengths) != 1 or any(not isinstance(v, list) for v in vectors.values()):
        raise UsageError(f"{source}: all vectors must be lists of the same length")
    n = lengths.pop()
    probs = data.get("probs")
    space = ProbSpace.uniform(n) if probs is None else ProbSpace(probs)
    return {name: RandVar(tuple(v), space) for name, v in sorted(vectors.items())}


# -- output ------------------------------------------------------------------


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".riskset-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(cfg: RunConfig, text: str, summary: str) -> None:
    if cfg.report is None:
        sys.stdout.write(text)
    else:
        write_atomic(cfg.report, text)
        print(summary)


def _exit_for(verdicts) -> int:
    verdicts = list(verdicts)
    if FAIL in verdicts:
        return EXIT_FAIL
    if INCONCLUSIVE in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"


# -- commands ----------------------------------------------------------------


def _fmt_number(x: float) -> str:
    # Adding 0.0 turns -0.0 into 0.0.
    return format(x + 0.0, ".15g")


def cmd_eval(cfg: RunConfig) -> int:
    spec = rm.MeasureSpec(cfg.measure, alpha=cfg.alpha, theta=cfg.theta)
    vectors = load_vectors(cfg)
    values = {name: rm.evaluate(spec, X) for name, X in vectors.items()}
    if cfg.format == "json":
        sys.stdout.write(_dumps({"measure": spec.kind, "alpha": spec.alpha, "theta": spec.theta,
                                 "values": values}))
    elif len(values) == 1:
        print(_fmt_number(next(iter(values.values()))))
    else:
        for name, v in values.items():
            print(f"{name}\t{_fmt_number(v)}")
    return EXIT_PASS


def cmd_gauge(cfg: RunConfig) -> int:
    vectors = load_vectors(cfg)
    n = next(iter(vectors.values())).n
    A = parse_set(cfg.set, n=n)
    fn = GAUGE_KINDS[cfg.kind]
    out = {name: fn(A, X, cfg.tol).to_json() for name, X in vectors.items()}
    sys.stdout.write(_dumps(out["X"] if list(out) == ["X"] else out))
    return EXIT_PASS


def _set_for(cfg: RunConfig):
    if cfg.set is None:
        return None
    return parse_set(cfg.set, n=cfg.dims[0] if len(cfg.dims) == 1 else None)


def _report(cfg: RunConfig, report: lab.PropertyReport) -> int:
    text = report.sweep_csv() if cfg.format == "csv" else report.dumps()
    summary = (f"{report.check.id}: {report.verdict} (trials={report.stats['trials']}, "
               f"max_defect={report.stats['max_defect']!r})")
    _emit(cfg, text, summary)
    return _exit_for([report.verdict])


def cmd_verify(cfg: RunConfig) -> int:
    suite = cfg.theorem
    if suite not in lab.SUITES:
        raise UsageError(f"unknown --theorem {suite!r}; expected one of {', '.join(lab.SUITES)}")
    A = _set_for(cfg)
    if A is None and suite not in ("cone-comonotonicity", "fig1-counterexample"):
        raise UsageError(f"--theorem {suite} needs --set")
    report = lab.run_suite(suite, A, trials=cfg.trials, seed=cfg.seed, tol=cfg.tol, dims=cfg.dims,
                           cone_spec=cfg.cone_spec, dev=cfg.dev)
    return _report(cfg, report)


def cmd_counterexample(cfg: RunConfig) -> int:
    if cfg.target != "fig1":
        raise UsageError(f"unknown counterexample {cfg.target!r}; available: fig1")
    return _report(cfg, lab.counterexample_fig1(cfg.tol))


def cmd_audit(cfg: RunConfig) -> int:
    A = _set_for(cfg)
    flags = cfg.flags if cfg.flags else [f for f in AUDITABLE_FLAGS if A.has(f)]
    unknown = [f for f in flags if f not in AUDITABLE_FLAGS and f != CLOSED]
    if unknown:
        raise UsageError(f"unknown flags {unknown}; expected some of {', '.join(AUDITABLE_FLAGS)}")
    audits = audit_all(A, cfg.seed, cfg.trials, dims=cfg.dims, flags=flags)
    doc = {
        "schema": lab.SCHEMA,
        "check": {"id": "audit", "set": A.name, "trials": cfg.trials, "seed": cfg.seed,
                  "dims": list(cfg.dims), "declared": sorted(A.declared)},
        "audits": [audits[f].to_json() for f in flags],
    }
    verdicts = [a.verdict for a in audits.values()]
    doc["verdict"] = {EXIT_PASS: PASS, EXIT_FAIL: FAIL, EXIT_INCONCLUSIVE: INCONCLUSIVE}[_exit_for(verdicts)]
    summary = ", ".join(f"{f}={audits[f].verdict}" for f in flags)
    _emit(cfg, _dumps(doc), f"audit {A.name}: {summary}")
    return _exit_for(verdicts)


def cmd_replay(cfg: RunConfig) -> int:
    """Exit 0 when the witness reproduces its defect, 1 when it does not."""
    witness = _parse_json(cfg.witness, "--witness")
    if isinstance(witness, dict) and "witness" in witness and "kind" not in witness:
        witness = witness["witness"]
    if not isinstance(witness, dict):
        raise UsageError("--witness must be a JSON object")
    try:
        result = lab.replay(witness)
    except KeyError as exc:
        raise UsageError(f"witness is missing field {exc.args[0]!r}") from None
    sys.stdout.write(_dumps(result))
    return EXIT_PASS if result["reproduced"] else EXIT_FAIL


COMMANDS = {
    "eval": cmd_eval,
    "gauge": cmd_gauge,
    "verify": cmd_verify,
    "counterexample": cmd_counterexample,
    "audit": cmd_audit,
    "replay": cmd_replay,
}


def run(cfg: RunConfig) -> int:
    return COMMANDS[cfg.command](cfg)


# -- argument parsing --------------------------------------------------------


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _dims_arg(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(",") if v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="riskset", description="Acceptance sets, induced risk and deviation "
                                "measures, and seeded property suites.")
    sub = p.add_subparsers(dest="command", required=True)

    def common_run(sp):
        sp.add_argument("--trials", type=int, default=1000)
        sp.add_argument("--seed", type=int, default=None, help=f"defaults to ${SEED_ENV}, else 0")
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
        sp.add_argument("--dims", type=_dims_arg, default=DEFAULT_DIMS,
                        help="space sizes to sample, e.g. 2,3,4,8")
        sp.add_argument("--report", help="write the report here (atomically) instead of stdout")

    def inputs(sp):
        sp.add_argument("--input", help="JSON file ({'probs', 'vectors': {...}} or {'probs', 'values'}); - for stdin")
        sp.add_argument("--vector", help="comma-separated payoff values")
        sp.add_argument("--probs", help="comma-separated outcome weights (default uniform)")

    e = sub.add_parser("eval", help="evaluate a closed-form measure")
    e.add_argument("--measure", required=True, choices=rm.KINDS)
    e.add_argument("--alpha", type=float)
    e.add_argument("--theta", type=float)
    e.add_argument("--format", choices=("text", "json"), default="text")
    inputs(e)

    g = sub.add_parser("gauge", help="compute an induced functional of a set")
    g.add_argument("--set", required=True)
    g.add_argument("--kind", choices=sorted(GAUGE_KINDS), default="rho")
    g.add_argument("--tol", type=float, default=DEFAULT_TOL)
    inputs(g)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("--theorem", required=True, help=f"one of: {', '.join(lab.SUITES)}")
    v.add_argument("--set")
    v.add_argument("--cone-spec", dest="cone_spec", choices=lab.CLASS_SPECS, default="comonotonic-span")
    v.add_argument("--dev", choices=lab.DEV_NAMES, default="gauge")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    common_run(v)

    c = sub.add_parser("counterexample", help="reproduce a fixed counterexample")
    c.add_argument("target", help="fig1")
    c.add_argument("--tol", type=float, default=DEFAULT_TOL)
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--report")

    a = sub.add_parser("audit", help="audit the structural flags of a set")
    a.add_argument("--set", required=True)
    a.add_argument("--flags", help="comma-separated flags (default: the declared ones)")
    common_run(a)

    r = sub.add_parser("replay", help="recompute a counterexample from its witness JSON")
    r.add_argument("--witness", required=True)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    kw = {k: v for k, v in vars(ns).items() if v is not None}
    if ns.command in ("verify", "audit"):
        kw["seed"] = ns.seed if ns.seed is not None else _default_seed()
    if "flags" in kw:
        kw["flags"] = [f.strip() for f in kw["flags"].split(",") if f.strip()]
    return RunConfig(**kw)


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return run(config_from_args(ns))
    except UsageError as exc:
        print(f"riskset: error: {exc}", file=sys.stderr)
    except (RisksetError, ValueError) as exc:
        print(f"riskset: error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
