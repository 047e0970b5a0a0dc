"""Exception hierarchy shared by every riskset module."""


class RisksetError(Exception):
    """Base class for all library errors."""


class DimensionError(RisksetError, ValueError):
    """Random variables live on different spaces, or a set is queried off its dimension."""


class DomainError(RisksetError, ValueError):
    """A parameter lies outside its admissible range."""


class ContractError(RisksetError):
    """A caller-side precondition (declared flag, comonotonic input, ...) is not met."""


class OracleInconsistencyError(RisksetError):
    """A membership oracle contradicted the structure a gauge relies on."""


class ConvergenceError(RisksetError):
    """Bisection stalled at floating-point resolution before reaching tolerance."""
