import math
from typing import Callable, Literal

from pydantic import BaseModel, ConfigDict
from scipy.integrate import quad

from ..errors import DomainError
from .bump import TestFunction

PAIRING_TOLERANCE = 1e-10

Derivative = Literal["value", "t", "x"]


def _wall(t: float) -> float:
    return 0.0


class DiracOnCurve(BaseModel):
    """
    Weighted Dirac measure on the Lipschitz curve x = position(t), t in [0, t_end).
    `velocity` is x'(t); both default to the piston line x = 0.
    """

    model_config = ConfigDict(frozen=True)

    weight: Callable[[float], float]
    position: Callable[[float], float] = _wall
    velocity: Callable[[float], float] = _wall
    t_end: float = math.inf


def dirac_pairing(
    d: DiracOnCurve, phi: TestFunction, derivative: Derivative = "value"
) -> float:
    """
    <w delta_L, phi> = integral of phi(t, x(t)) w(t) sqrt(x'(t)^2 + 1) dt
    """
    evaluate = {"value": phi.value, "t": phi.dt, "x": phi.dx}[derivative]

    t_lo, t_hi = phi.t_support
    a, b = max(t_lo, 0.0), min(t_hi, d.t_end)
    if b <= a:
        return 0.0

    def integrand(t: float) -> float:
        w = d.weight(t)
        if not math.isfinite(w):
            raise DomainError(f"non-finite weight {w} at t = {t}")
        arclength = math.sqrt(d.velocity(t) ** 2 + 1.0)
        return float(evaluate(t, d.position(t))) * w * arclength

    value, _error = quad(
        integrand, a, b, epsabs=PAIRING_TOLERANCE, epsrel=PAIRING_TOLERANCE, limit=200
    )
    return value
