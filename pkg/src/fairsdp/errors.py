"""Exception types shared across the package."""


class FairSdpError(Exception):
    """Base class for all fairsdp errors."""


class InvalidArgumentError(FairSdpError, ValueError):
    """An argument violates a documented precondition."""


class SizeLimitError(FairSdpError):
    """Exhaustive computation requested beyond the supported size."""


class StructuralError(FairSdpError):
    """The graph violates a structural assumption (typically connectivity)."""


class NumericFailureError(FairSdpError):
    """A numeric routine failed to meet its accuracy contract."""


class InfeasibleError(FairSdpError):
    """The feasible set of an optimization problem is empty."""
