class PistonError(Exception):
    pass


class DomainError(PistonError, ValueError):
    """Input outside the admissible range (vacuum density, bad exponent, ...)."""


class DegenerateScenarioError(DomainError):
    pass


class NoIntegralSolutionError(DomainError):
    """The advancing piston is supercritical: use the measure branch."""


class WrongBranchError(DomainError):
    pass


class DegenerateFieldError(DomainError):
    """Fan formulas are singular for the linearly degenerate case gamma = 1."""


class PositivityError(PistonError, RuntimeError):
    pass


class DensityCapExceeded(PistonError, RuntimeError):
    pass
