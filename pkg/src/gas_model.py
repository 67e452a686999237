# Equation of state and characteristic structure of the generalized Chaplygin gas
#
#   rho_t + (rho u)_x = 0
#   u_t + (u^2 / 2 - A rho^-alpha)_x = 0,     P = -s rho^-gamma
#
# with A = s gamma / (1 + gamma) and alpha = gamma + 1.

import math
from typing import NamedTuple

import torch
from pydantic import BaseModel, ConfigDict, computed_field, field_validator

from .errors import DomainError

Scalar = float | torch.Tensor


class GasModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    gamma: float
    s: float

    @field_validator("gamma")
    def check_gamma(cls, v: float):
        if not (0.0 < v <= 1.0):
            raise ValueError(f"gamma must be in (0, 1], got {v}")
        return v

    @field_validator("s")
    def check_s(cls, v: float):
        if not v > 0.0:
            raise ValueError(f"s must be positive, got {v}")
        return v

    @computed_field
    @property
    def A(self) -> float:
        return self.s * self.gamma / (1.0 + self.gamma)

    @computed_field
    @property
    def alpha(self) -> float:
        return self.gamma + 1.0

    @classmethod
    def normalized(cls, gamma: float, mach: float) -> "GasModel":
        # rho0 = 1, |v0| = 1 fixes s = 1 / (gamma M0^2)
        if not mach > 0.0:
            raise DomainError(f"mach must be positive, got {mach}")
        return cls(gamma=gamma, s=1.0 / (gamma * mach**2))


class State(BaseModel):
    model_config = ConfigDict(frozen=True)

    rho: float
    u: float

    @field_validator("rho")
    def check_rho(cls, v: float):
        if v < 0.0:
            raise ValueError(f"rho must be non-negative, got {v}")
        return v

    @property
    def is_vacuum(self) -> bool:
        return self.rho == 0.0


class Eigenvalues(NamedTuple):
    lambda1: float
    lambda2: float


class NonlinearityIndicator(NamedTuple):
    g1: float
    g2: float


def _check_density(rho: Scalar) -> None:
    if isinstance(rho, torch.Tensor):
        if not bool((rho > 0).all()):
            raise DomainError("vacuum: density must be positive in every cell")
    elif not rho > 0.0:
        raise DomainError(f"vacuum: density must be positive, got {rho}")


def pressure(g: GasModel, rho: Scalar) -> Scalar:
    _check_density(rho)
    return -g.s * rho ** (-g.gamma)


def pressure_derivative(g: GasModel, rho: Scalar) -> Scalar:
    _check_density(rho)
    return g.s * g.gamma * rho ** (-g.gamma - 1.0)


def sound_speed(g: GasModel, rho: Scalar) -> Scalar:
    _check_density(rho)
    return math.sqrt(g.s * g.gamma) * rho ** (-(g.gamma + 1.0) / 2.0)


def pressure_potential(g: GasModel, rho: Scalar) -> Scalar:
    """
    The integral of P'(s)/s up to rho, normalized to vanish at infinity: -A rho^-alpha.
    This is the pressure-like term in the flux of the velocity equation.
    """
    _check_density(rho)
    return -g.A * rho ** (-g.alpha)


def mach_number(v: float, c0: float) -> float:
    if not c0 > 0.0:
        raise DomainError(f"sound speed must be positive, got {c0}")
    return abs(v) / c0


def critical_mach(gamma: float) -> float:
    if not (0.0 < gamma <= 1.0):
        raise DomainError(f"gamma must be in (0, 1], got {gamma}")
    return math.sqrt(2.0 / (1.0 + gamma))


def _char_speed(g: GasModel, rho: float) -> float:
    # sqrt(A alpha) rho^(-alpha/2), equal to the sound speed since A alpha = s gamma
    return math.sqrt(g.A * g.alpha) * rho ** (-g.alpha / 2.0)


def eigenvalues(g: GasModel, st: State) -> Eigenvalues:
    _check_density(st.rho)
    c = _char_speed(g, st.rho)
    return Eigenvalues(st.u - c, st.u + c)


def genuine_nonlinearity_indicator(g: GasModel, st: State) -> NonlinearityIndicator:
    """
    Directional derivatives of the eigenvalues along their right eigenvectors.
    Both vanish exactly when alpha = 2, i.e. the pure Chaplygin gas gamma = 1.
    """
    _check_density(st.rho)
    magnitude = (2.0 - g.alpha) / 2.0 * math.sqrt(
        g.A * g.alpha * st.rho ** (-(g.alpha + 1.0))
    )
    return NonlinearityIndicator(-magnitude, magnitude)


def riemann_invariant_1(g: GasModel, st: State) -> float:
    # constant across a first-family fan
    _check_density(st.rho)
    return st.u - 2.0 / g.alpha * _char_speed(g, st.rho)


def riemann_invariant_2(g: GasModel, st: State) -> float:
    _check_density(st.rho)
    return st.u + 2.0 / g.alpha * _char_speed(g, st.rho)
