from typing import Literal

import torch

from ..errors import WrongBranchError
from ..frames import PistonScenario
from ..gas_model import State, critical_mach
from .util import WaveSolution


class MeasureConcentrationSolution(WaveSolution):
    """
    Supercritical advancing piston: the gas keeps its initial state (1, 1) up to the
    wall and all arriving mass concentrates on x = 0 as a Dirac measure with weight
    w_rho(t) = t, while the wall exerts a force of constant weight w_p.
    """

    kind: Literal["measure"] = "measure"

    w_p: float

    def w_rho(self, t: float) -> float:
        return t

    @property
    def breakpoints(self) -> list[float]:
        return []

    def state_at(self, eta: float) -> State:
        return State(rho=1.0, u=1.0)

    def fields(self, eta: torch.Tensor) -> tuple[torch.Tensor, torch.Tensor]:
        return torch.ones_like(eta), torch.ones_like(eta)


def boundary_force_weight(gamma: float, mach: float) -> float:
    return 0.5 - 1.0 / ((1.0 + gamma) * mach**2)


def solve_measure(sc: PistonScenario) -> MeasureConcentrationSolution:
    if sc.direction != "advance":
        raise WrongBranchError("mass concentrates only on an advancing piston")

    critical = critical_mach(sc.gamma)
    if sc.mach < critical:
        raise WrongBranchError(
            f"mach {sc.mach} < critical {critical}: the shock branch applies"
        )

    # clamp the rounding of (1 + gamma) * critical^2 - 2 at the threshold itself
    w_p = max(boundary_force_weight(sc.gamma, sc.mach), 0.0)

    return MeasureConcentrationSolution(gamma=sc.gamma, mach=sc.mach, w_p=w_p)
