from pydantic import BaseModel, ConfigDict, model_validator

from ..errors import DomainError
from ..frames import (
    PhysicalScenario,
    PistonScenario,
    denormalize_state,
    normalize,
    to_lab_frame,
)
from ..gas_model import State
from .classify import classify
from .measure import MeasureConcentrationSolution, solve_measure
from .rarefaction import RarefactionFanSolution, solve_rarefaction
from .shock import ShockSolution, solve_shock
from .util import SolutionKind

WaveSolutionAlias = ShockSolution | MeasureConcentrationSolution | RarefactionFanSolution


class BoundaryAtom(BaseModel):
    """The Dirac part sitting on the piston: mass weight and wall-force weight."""

    model_config = ConfigDict(frozen=True)

    w_rho: float
    w_p: float


class SelfSimilarSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    scenario: PistonScenario
    wave: WaveSolutionAlias

    @property
    def kind(self) -> SolutionKind:
        return self.wave.kind

    @model_validator(mode="after")
    def check_kind(self):
        if (expected := classify(self.scenario)) != self.wave.kind:
            raise ValueError(
                f"{self.wave.kind} solution given for a {expected} scenario"
            )
        return self


def solve(sc: PistonScenario) -> SelfSimilarSolution:
    kind = classify(sc)

    wave: WaveSolutionAlias
    if kind == "shock":
        wave = solve_shock(sc)
    elif kind == "measure":
        wave = solve_measure(sc)
    elif kind == "rarefaction":
        wave = solve_rarefaction(sc)
    else:
        raise ValueError(f"Unknown solution kind: {kind}")

    return SelfSimilarSolution(scenario=sc, wave=wave)


def sample(sol: SelfSimilarSolution, t: float, x: float) -> State | BoundaryAtom:
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")
    if x > 0.0:
        raise DomainError(f"the gas occupies x <= 0, got x = {x}")

    wave = sol.wave
    if isinstance(wave, MeasureConcentrationSolution) and x == 0.0:
        return BoundaryAtom(w_rho=wave.w_rho(t), w_p=wave.w_p)

    return wave.state_at(x / t)


def sample_physical(
    phys: PhysicalScenario, t: float, x: float, lab_frame: bool = True
) -> State | BoundaryAtom:
    """
    Sample the solution of a dimensional scenario at a lab-frame point (t, x).
    The piston sits at x = v0 t; the returned velocity is in the lab frame unless
    lab_frame is False.
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")

    sc = normalize(phys)
    sol = solve(sc)
    speed = abs(phys.v0)

    # back to the piston frame; the solution only depends on x' / (t |v0|)
    x_piston = x - phys.v0 * t
    result = sample(sol, 1.0, x_piston / (t * speed))

    if isinstance(result, BoundaryAtom):
        return BoundaryAtom(
            w_rho=phys.rho0 * speed * t,
            w_p=phys.v0**2 * result.w_p,
        )

    state = denormalize_state(phys, result)
    if lab_frame:
        state = to_lab_frame(phys, state, t, x_piston).state
    return state
