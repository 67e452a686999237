from typing import Literal

from pydantic import BaseModel

from ..exact_solver import ShockSolution
from ..gas_model import GasModel, State, eigenvalues

EQUALITY_TOLERANCE = 1e-12

LaxStatus = Literal["strict", "equality", "violation"]


class FamilyLax(BaseModel):
    family: int
    left_speed: float
    right_speed: float
    status: LaxStatus


class EntropyReport(BaseModel):
    sigma: float
    families: list[FamilyLax]

    @property
    def admissible_family(self) -> int | None:
        # a strict family wins over a degenerate (contact) one
        for status in ("strict", "equality"):
            for family in self.families:
                if family.status == status:
                    return family.family
        return None

    @property
    def admissible(self) -> bool:
        return self.admissible_family is not None


def _status(left_speed: float, sigma: float, right_speed: float) -> LaxStatus:
    ahead, behind = left_speed - sigma, sigma - right_speed
    if abs(ahead) <= EQUALITY_TOLERANCE and abs(behind) <= EQUALITY_TOLERANCE:
        return "equality"
    if ahead > EQUALITY_TOLERANCE and behind > EQUALITY_TOLERANCE:
        return "strict"
    return "violation"


def lax_report(g: GasModel, left: State, right: State, sigma: float) -> EntropyReport:
    """Lax inequalities lambda_k(left) > sigma > lambda_k(right) for k = 1, 2."""
    left_speeds = eigenvalues(g, left)
    right_speeds = eigenvalues(g, right)

    families = [
        FamilyLax(
            family=k + 1,
            left_speed=left_speeds[k],
            right_speed=right_speeds[k],
            status=_status(left_speeds[k], sigma, right_speeds[k]),
        )
        for k in range(2)
    ]
    return EntropyReport(sigma=sigma, families=families)


def entropy_check(sol: ShockSolution) -> EntropyReport:
    return lax_report(sol.gas, sol.upstream, sol.downstream, sol.sigma)
