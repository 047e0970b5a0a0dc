"""Acceptance sets on finite probability spaces and the risk and deviation measures they induce."""

from .accept_sets import AcceptanceSet, audit_all, catalog, complement_view, parse_set
from .bisection import GaugeResult
from .errors import (
    ContractError,
    ConvergenceError,
    DimensionError,
    DomainError,
    OracleInconsistencyError,
    RisksetError,
)
from .gauges import cogauge_complement, minkowski_dev, psi_complement, rho
from .prob_core import ConeElementSpec, ProbSpace, RandVar, is_comonotonic

__version__ = "0.1.0"

__all__ = [
    "AcceptanceSet",
    "ConeElementSpec",
    "ContractError",
    "ConvergenceError",
    "DimensionError",
    "DomainError",
    "GaugeResult",
    "OracleInconsistencyError",
    "ProbSpace",
    "RandVar",
    "RisksetError",
    "audit_all",
    "catalog",
    "cogauge_complement",
    "complement_view",
    "is_comonotonic",
    "minkowski_dev",
    "parse_set",
    "psi_complement",
    "rho",
]
