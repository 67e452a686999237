from typing import Literal, NamedTuple

import torch

from ..errors import DomainError, NoIntegralSolutionError
from ..frames import PistonScenario
from ..gas_model import State, critical_mach
from .util import WaveSolution

RHO_LOWER = 1.0 + 1e-12
BISECTION_WIDTH = 1e-14
NEWTON_STEPS = 3


def hugoniot_f(gamma: float, rho: float) -> float:
    # (1 - 1/rho)(1 - rho^(-gamma-1)) / (1 + 1/rho), so that M0^2 = 2 f(rho1) / (1 + gamma)
    if not rho > 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    inv = 1.0 / rho
    return (1.0 - inv) * (1.0 - rho ** (-gamma - 1.0)) / (1.0 + inv)


def hugoniot_f_prime(gamma: float, rho: float) -> float:
    if not rho > 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    alpha = gamma + 1.0
    return 2.0 * (1.0 - rho ** (-alpha)) / (rho + 1.0) ** 2 + (rho - 1.0) / (
        rho + 1.0
    ) * alpha * rho ** (-alpha - 1.0)


class RankineHugoniotResidual(NamedTuple):
    mass: float
    momentum: float


class ShockSolution(WaveSolution):
    kind: Literal["shock"] = "shock"

    rho1: float
    sigma: float

    @property
    def upstream(self) -> State:
        return State(rho=1.0, u=1.0)

    @property
    def downstream(self) -> State:
        return State(rho=self.rho1, u=0.0)

    @property
    def breakpoints(self) -> list[float]:
        return [self.sigma]

    def state_at(self, eta: float) -> State:
        # a point exactly on the shock takes the piston-side state
        if eta < self.sigma:
            return self.upstream
        return self.downstream

    def fields(self, eta: torch.Tensor) -> tuple[torch.Tensor, torch.Tensor]:
        ahead = eta < self.sigma
        rho = torch.where(ahead, torch.ones_like(eta), torch.full_like(eta, self.rho1))
        u = torch.where(ahead, torch.ones_like(eta), torch.zeros_like(eta))
        return rho, u


def _find_root(gamma: float, target: float) -> float:
    lo = RHO_LOWER
    if hugoniot_f(gamma, lo) >= target:
        return lo

    # bracket: f is increasing on (1, inf) with f -> 1, so doubling terminates for target < 1
    hi = 2.0
    while hugoniot_f(gamma, hi) <= target:
        lo = hi
        hi *= 2.0

    for _ in range(2000):
        if hi - lo <= BISECTION_WIDTH * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if hugoniot_f(gamma, mid) <= target:
            lo = mid
        else:
            hi = mid

    rho = 0.5 * (lo + hi)
    for _ in range(NEWTON_STEPS):
        slope = hugoniot_f_prime(gamma, rho)
        if slope <= 0.0:
            break
        candidate = rho - (hugoniot_f(gamma, rho) - target) / slope
        if not (lo <= candidate <= hi):
            break
        rho = candidate

    return rho


def solve_shock(sc: PistonScenario) -> ShockSolution:
    if sc.direction != "advance":
        raise NoIntegralSolutionError("a shock only forms ahead of an advancing piston")

    critical = critical_mach(sc.gamma)
    if sc.mach >= critical:
        raise NoIntegralSolutionError(
            f"mach {sc.mach} >= critical {critical}: no integral weak solution, "
            "use the measure branch"
        )

    target = (1.0 + sc.gamma) * sc.mach**2 / 2.0
    rho1 = _find_root(sc.gamma, target)

    return ShockSolution(
        gamma=sc.gamma,
        mach=sc.mach,
        rho1=rho1,
        sigma=-1.0 / (rho1 - 1.0),
    )


def rankine_hugoniot_residuals(sol: ShockSolution) -> RankineHugoniotResidual:
    g = sol.gas
    left, right = sol.upstream, sol.downstream

    mass = sol.sigma * (right.rho - left.rho) - (
        right.rho * right.u - left.rho * left.u
    )
    momentum = sol.sigma * (right.u - left.u) - (
        right.u**2 / 2.0
        - g.A * right.rho ** (-g.alpha)
        - left.u**2 / 2.0
        + g.A * left.rho ** (-g.alpha)
    )

    return RankineHugoniotResidual(mass, momentum)
