from typing import NamedTuple

import torch

from ..errors import WrongBranchError
from ..exact_solver import (
    MeasureConcentrationSolution,
    RarefactionFanSolution,
    ShockSolution,
)
from ..gas_model import pressure_potential
from .bump import TestFunction
from .dirac import DiracOnCurve, dirac_pairing
from .quadrature import QuadratureRule, integrate_interval, integrate_split_rows


class WeakResidual(NamedTuple):
    mass: float
    momentum: float


def _omega_bounds(
    phi: TestFunction,
) -> tuple[tuple[float, float], tuple[float, float]]:
    # support of phi intersected with {t > 0, x < 0}
    t_lo, t_hi = phi.t_support
    x_lo, x_hi = phi.x_support
    return (max(t_lo, 0.0), t_hi), (x_lo, min(x_hi, 0.0))


def _initial_line(
    phi: TestFunction, density: float, n: int, rule: QuadratureRule
) -> float:
    # integral over x < 0 of density * phi(0, x)
    t_lo, t_hi = phi.t_support
    if not (t_lo < 0.0 < t_hi):
        return 0.0
    _, (x_lo, x_hi) = _omega_bounds(phi)
    return density * integrate_interval(
        lambda x: phi.value(torch.zeros_like(x), x), x_lo, x_hi, n, rule
    )


def _wall_line(
    phi: TestFunction, density: float, n: int, rule: QuadratureRule
) -> float:
    # integral over t > 0 of density * phi(t, 0)
    x_lo, x_hi = phi.x_support
    if not (x_lo < 0.0 < x_hi):
        return 0.0
    (t_lo, t_hi), _ = _omega_bounds(phi)
    return density * integrate_interval(
        lambda t: phi.value(t, torch.zeros_like(t)), t_lo, t_hi, n, rule
    )


def integral_weak_residual(
    sol: ShockSolution | RarefactionFanSolution,
    phi: TestFunction,
    n: int = 512,
    rule: QuadratureRule = "gauss",
) -> WeakResidual:
    """
    Signed residuals of the integral-solution identities on the quarter plane

        int (rho phi_t + rho u phi_x) + int rho0 phi(0, x) dx = 0
        int (u phi_t + (u^2/2 + Q(rho)) phi_x) - int Q(rho(t, 0)) phi(t, 0) dt
            + int u0 phi(0, x) dx = 0

    with Q(rho) = -A rho^-alpha. The wall trace of rho is taken from the piston side.
    """
    if isinstance(sol, MeasureConcentrationSolution):
        raise WrongBranchError("use measure_weak_residual for the measure branch")

    g = sol.gas
    initial = sol.state_at(-float("inf"))
    trace = sol.state_at(0.0)

    def integrand(t: torch.Tensor, x: torch.Tensor):
        rho, u = sol.fields(x / t)
        phi_t, phi_x = phi.dt(t, x), phi.dx(t, x)
        mass = rho * phi_t + rho * u * phi_x
        momentum = u * phi_t + (u**2 / 2.0 + pressure_potential(g, rho)) * phi_x
        return mass, momentum

    t_bounds, x_bounds = _omega_bounds(phi)
    area_mass, area_momentum = integrate_split_rows(
        integrand, t_bounds, x_bounds, sol.breakpoints, n, rule
    )

    mass = area_mass + _initial_line(phi, initial.rho, n, rule)
    momentum = (
        area_momentum
        - _wall_line(phi, pressure_potential(g, trace.rho), n, rule)
        + _initial_line(phi, initial.u, n, rule)
    )
    return WeakResidual(mass, momentum)


def measure_weak_residual(
    sol: MeasureConcentrationSolution,
    phi: TestFunction,
    n: int = 512,
    rule: QuadratureRule = "gauss",
) -> WeakResidual:
    """
    Residuals of the measure-solution identities for the concentration ansatz: the
    Lebesgue parts carry the state (1, 1), the density has a Dirac part w_rho(t) on
    x = 0 and the wall force enters as -<w_p delta, phi>.
    """
    g = sol.gas
    rho, u = 1.0, 1.0
    potential = pressure_potential(g, rho)

    def integrand(t: torch.Tensor, x: torch.Tensor):
        phi_t, phi_x = phi.dt(t, x), phi.dx(t, x)
        mass = rho * phi_t + rho * u * phi_x
        momentum = u * phi_t + (u**2 / 2.0 + potential) * phi_x
        return mass, momentum

    t_bounds, x_bounds = _omega_bounds(phi)
    area_mass, area_momentum = integrate_split_rows(
        integrand, t_bounds, x_bounds, [], n, rule
    )

    density_atom = DiracOnCurve(weight=sol.w_rho)
    force_atom = DiracOnCurve(weight=lambda t: sol.w_p)

    mass = (
        area_mass
        + dirac_pairing(density_atom, phi, derivative="t")
        + _initial_line(phi, rho, n, rule)
    )
    momentum = (
        area_momentum
        - dirac_pairing(force_atom, phi)
        + _initial_line(phi, u, n, rule)
    )
    return WeakResidual(mass, momentum)
