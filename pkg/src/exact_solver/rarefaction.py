import math
from typing import Literal, NamedTuple

import torch
from pydantic import BaseModel

from ..errors import DegenerateFieldError, WrongBranchError
from ..frames import PistonScenario
from ..gas_model import State
from .util import WaveSolution

DEFAULT_LIMIT_MACHS = (1e3, 1e6)
DIVERGENCE_WINDOW = 1e-6


def _check_fan_gamma(gamma: float) -> None:
    if gamma >= 1.0:
        raise DegenerateFieldError(
            "gamma = 1 is linearly degenerate: the first-family wave is a contact, "
            "no rarefaction fan exists"
        )


def fan_head(gamma: float, mach: float) -> float:
    # lambda_1 of the undisturbed state (1, -1): u0 - c0 = -1 - 1/M0
    return -1.0 - 1.0 / mach


def fan_tail(gamma: float, mach: float) -> float:
    return -(gamma + 1.0) / 2.0 - 1.0 / mach


def boundary_density(gamma: float, mach: float) -> float:
    return ((mach * (gamma + 1.0) + 2.0) / 2.0) ** (-2.0 / (gamma + 1.0))


class RarefactionFanSolution(WaveSolution):
    kind: Literal["rarefaction"] = "rarefaction"

    eta_head: float
    eta_tail: float
    rho1: float

    @property
    def breakpoints(self) -> list[float]:
        return [self.eta_head, self.eta_tail]

    def fan(self, eta: float) -> State:
        g, m = self.gamma, self.mach
        base = ((eta + 1.0) * (1.0 + g) * m + 2.0) / (1.0 - g)
        rho = base ** (-2.0 / (1.0 + g))
        u = -1.0 + 2.0 * (eta + 1.0) / (1.0 - g) + 2.0 / (m * (1.0 - g))
        return State(rho=rho, u=u)

    def state_at(self, eta: float) -> State:
        if eta < self.eta_head:
            return State(rho=1.0, u=-1.0)
        if eta > self.eta_tail:
            return State(rho=self.rho1, u=0.0)
        return self.fan(eta)

    def fields(self, eta: torch.Tensor) -> tuple[torch.Tensor, torch.Tensor]:
        g, m = self.gamma, self.mach
        inside = eta.clamp(self.eta_head, self.eta_tail)
        rho_fan = (((inside + 1.0) * (1.0 + g) * m + 2.0) / (1.0 - g)) ** (
            -2.0 / (1.0 + g)
        )
        u_fan = -1.0 + 2.0 * (inside + 1.0) / (1.0 - g) + 2.0 / (m * (1.0 - g))

        ahead = eta < self.eta_head
        behind = eta > self.eta_tail
        rho = torch.where(
            ahead,
            torch.ones_like(eta),
            torch.where(behind, torch.full_like(eta, self.rho1), rho_fan),
        )
        u = torch.where(
            ahead,
            -torch.ones_like(eta),
            torch.where(behind, torch.zeros_like(eta), u_fan),
        )
        return rho, u


def solve_rarefaction(sc: PistonScenario) -> RarefactionFanSolution:
    if sc.direction != "recede":
        raise WrongBranchError("a rarefaction fan only forms behind a receding piston")
    _check_fan_gamma(sc.gamma)

    return RarefactionFanSolution(
        gamma=sc.gamma,
        mach=sc.mach,
        eta_head=fan_head(sc.gamma, sc.mach),
        eta_tail=fan_tail(sc.gamma, sc.mach),
        rho1=boundary_density(sc.gamma, sc.mach),
    )


class LimitSample(BaseModel):
    mach: float
    eta_head: float
    eta_tail: float
    rho_tail: float
    rho_sample: float | None
    initial_pressure: float


class LimitReport(BaseModel):
    gamma: float
    eta_head_limit: float
    eta_tail_limit: float
    vacuum_width: float
    # the measure branch's wall force tends to 1/2 as M0 grows
    boundary_force_limit: float
    sample_eta: float
    samples: list[LimitSample]
    rho_tail_decreasing: bool


def high_mach_limits(
    gamma: float, machs: tuple[float, ...] = DEFAULT_LIMIT_MACHS
) -> LimitReport:
    _check_fan_gamma(gamma)

    # a fixed slope strictly inside the limiting fan (-1, -(1 + gamma)/2]
    sample_eta = -(3.0 + gamma) / 4.0

    samples = []
    for mach in sorted(machs):
        sol = solve_rarefaction(
            PistonScenario(gamma=gamma, mach=mach, direction="recede")
        )
        rho_sample = None
        if sol.eta_head <= sample_eta <= sol.eta_tail:
            rho_sample = sol.fan(sample_eta).rho
        samples.append(
            LimitSample(
                mach=mach,
                eta_head=sol.eta_head,
                eta_tail=sol.eta_tail,
                rho_tail=sol.rho1,
                rho_sample=rho_sample,
                initial_pressure=-1.0 / (gamma * mach**2),
            )
        )

    decreasing = all(
        later.rho_tail < earlier.rho_tail
        for earlier, later in zip(samples, samples[1:])
    )

    return LimitReport(
        gamma=gamma,
        eta_head_limit=-1.0,
        eta_tail_limit=-(1.0 + gamma) / 2.0,
        vacuum_width=(1.0 - gamma) / 2.0,
        boundary_force_limit=0.5,
        sample_eta=sample_eta,
        samples=samples,
        rho_tail_decreasing=decreasing,
    )


RejectionReason = Literal["exceeds_initial_density", "divergent", "negative_base"]


class RejectionReport(BaseModel):
    gamma: float
    mach: float
    threshold_mach: float
    base: float
    rho1: float
    reason: RejectionReason
    eta_interval: tuple[float, float]

    @property
    def rejected(self) -> bool:
        return True


class FanPoint(NamedTuple):
    rho: float
    u: float


def second_family_fan(sc: PistonScenario, eta: float) -> FanPoint:
    """
    The second-family candidate that would join (1, -1) to the wall. Its density is
    nan wherever the power base turns negative.
    """
    _check_fan_gamma(sc.gamma)
    g, m = sc.gamma, sc.mach

    base = (eta + 1.0 - 2.0 / ((1.0 + g) * m)) * (1.0 + g) / (g - 1.0) * m
    rho = base ** (-2.0 / (1.0 + g)) if base > 0.0 else math.nan
    u = -1.0 + 2.0 * (eta + 1.0) / (1.0 - g) + 2.0 / ((g - 1.0) * m)
    return FanPoint(rho, u)


def second_family_diagnostic(sc: PistonScenario) -> RejectionReport:
    if sc.direction != "recede":
        raise WrongBranchError("the second-family candidate concerns a receding piston")
    _check_fan_gamma(sc.gamma)

    g, m = sc.gamma, sc.mach
    threshold = 2.0 / (1.0 + g)
    base = 1.0 - (1.0 + g) * m / 2.0

    reason: RejectionReason
    if abs(m - threshold) <= DIVERGENCE_WINDOW:
        reason, rho1 = "divergent", math.inf
    elif base > 0.0:
        # rho1 > 1 contradicts rho1 < rho0 = 1 behind a receding piston
        reason, rho1 = "exceeds_initial_density", base ** (-2.0 / (1.0 + g))
    else:
        reason, rho1 = "negative_base", math.nan

    return RejectionReport(
        gamma=g,
        mach=m,
        threshold_mach=threshold,
        base=base,
        rho1=rho1,
        reason=reason,
        eta_interval=(-1.0 + 1.0 / m, -(g + 1.0) / 2.0 + 1.0 / m),
    )
