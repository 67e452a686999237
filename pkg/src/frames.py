import math
from typing import Literal, NamedTuple

from pydantic import BaseModel, ConfigDict, field_validator

from .errors import DegenerateScenarioError
from .gas_model import GasModel, State, mach_number

# advance: the piston moves into the gas; after the Galilean shift the gas flows
# toward the wall with u0 = +1. recede: u0 = -1.
Direction = Literal["advance", "recede"]


class PhysicalScenario(BaseModel):
    model_config = ConfigDict(frozen=True)

    rho0: float
    v0: float  # piston speed, the gas fills x < v0 t
    s_coeff: float
    gamma: float

    @field_validator("rho0", "s_coeff")
    def check_positive(cls, v: float):
        if not v > 0.0:
            raise ValueError(f"must be positive, got {v}")
        return v

    @field_validator("gamma")
    def check_gamma(cls, v: float):
        if not (0.0 < v <= 1.0):
            raise ValueError(f"gamma must be in (0, 1], got {v}")
        return v

    @property
    def gas(self) -> GasModel:
        return GasModel(gamma=self.gamma, s=self.s_coeff)

    @property
    def c0(self) -> float:
        return math.sqrt(self.s_coeff * self.gamma) * self.rho0 ** (
            -(self.gamma + 1.0) / 2.0
        )


class PistonScenario(BaseModel):
    model_config = ConfigDict(frozen=True)

    gamma: float
    mach: float
    direction: Direction

    @field_validator("gamma")
    def check_gamma(cls, v: float):
        if not (0.0 < v <= 1.0):
            raise ValueError(f"gamma must be in (0, 1], got {v}")
        return v

    @field_validator("mach")
    def check_mach(cls, v: float):
        if not (v > 0.0 and math.isfinite(v)):
            raise ValueError(f"mach must be positive and finite, got {v}")
        return v

    @property
    def gas(self) -> GasModel:
        return GasModel.normalized(self.gamma, self.mach)

    @property
    def initial_state(self) -> State:
        return State(rho=1.0, u=1.0 if self.direction == "advance" else -1.0)

    @property
    def initial_pressure(self) -> float:
        return -1.0 / (self.gamma * self.mach**2)


class FramePoint(NamedTuple):
    state: State
    t: float
    x: float


def galilean_to_piston_frame(
    phys: PhysicalScenario, st: State, t: float, x: float
) -> FramePoint:
    return FramePoint(
        State(rho=st.rho, u=st.u - phys.v0),
        t,
        x - phys.v0 * t,
    )


def to_lab_frame(phys: PhysicalScenario, st: State, t: float, x: float) -> FramePoint:
    return FramePoint(
        State(rho=st.rho, u=st.u + phys.v0),
        t,
        x + phys.v0 * t,
    )


def normalize(phys: PhysicalScenario) -> PistonScenario:
    if phys.v0 == 0.0:
        raise DegenerateScenarioError("piston speed v0 must be nonzero")

    return PistonScenario(
        gamma=phys.gamma,
        mach=mach_number(phys.v0, phys.c0),
        direction="advance" if phys.v0 < 0.0 else "recede",
    )


def denormalize_state(
    phys: PhysicalScenario, st_norm: State, lab_frame: bool = False
) -> State:
    # only L / T = |v0| enters, T and L themselves are never needed
    speed = abs(phys.v0)
    u = speed * st_norm.u
    if lab_frame:
        u += phys.v0

    return State(rho=phys.rho0 * st_norm.rho, u=u)
