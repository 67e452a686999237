import math
from dataclasses import dataclass, field

import torch
from tqdm import tqdm

from ..errors import DensityCapExceeded, DomainError, PositivityError
from ..gas_model import GasModel
from .grid import FvmState, Grid1D

MAX_STEPS = 10_000_000


def physical_flux(
    g: GasModel, rho: torch.Tensor, u: torch.Tensor
) -> tuple[torch.Tensor, torch.Tensor]:
    return rho * u, u**2 / 2.0 - g.A * rho ** (-g.alpha)


def max_wave_speed(g: GasModel, rho: torch.Tensor, u: torch.Tensor) -> torch.Tensor:
    # max(|lambda_1|, |lambda_2|) = |u| + c
    return u.abs() + math.sqrt(g.A * g.alpha) * rho ** (-g.alpha / 2.0)


def _with_ghosts(state: FvmState) -> tuple[torch.Tensor, torch.Tensor]:
    # zero-gradient outflow at x_min, mirrored velocity at the wall so that u = 0 on the face
    rho = torch.cat([state.rho[:1], state.rho, state.rho[-1:]])
    u = torch.cat([state.u[:1], state.u, -state.u[-1:]])
    return rho, u


def rusanov_flux(
    g: GasModel, rho: torch.Tensor, u: torch.Tensor
) -> tuple[torch.Tensor, torch.Tensor, torch.Tensor]:
    """
    Local Lax-Friedrichs flux on every face between consecutive cells:
    average flux minus half the local maximal speed times the jump.
    Returns (mass flux, velocity flux, local speed) with one entry per face.
    """
    f_rho, f_u = physical_flux(g, rho, u)
    speed = max_wave_speed(g, rho, u)
    a = torch.maximum(speed[:-1], speed[1:])

    mass = 0.5 * (f_rho[:-1] + f_rho[1:]) - 0.5 * a * (rho[1:] - rho[:-1])
    velocity = 0.5 * (f_u[:-1] + f_u[1:]) - 0.5 * a * (u[1:] - u[:-1])
    return mass, velocity, speed


def step(
    state: FvmState,
    g: GasModel,
    t_stop: float | None = None,
    density_cap: float | None = None,
) -> FvmState:
    rho, u = _with_ghosts(state)
    mass_flux, velocity_flux, speed = rusanov_flux(g, rho, u)

    dx = state.grid.dx
    s_max = float(speed.max())
    dt = state.cfl * dx / s_max
    if t_stop is not None:
        dt = min(dt, t_stop - state.time)
    if not dt > 0.0:
        raise DomainError(f"non-positive time step {dt} at t = {state.time}")

    ratio = dt / dx
    rho_new = state.rho - ratio * (mass_flux[1:] - mass_flux[:-1])
    u_new = state.u - ratio * (velocity_flux[1:] - velocity_flux[:-1])

    bad = ~torch.isfinite(rho_new) | ~torch.isfinite(u_new) | (rho_new <= 0.0)
    if bool(bad.any()):
        cell = int(torch.nonzero(bad)[0])
        raise PositivityError(
            f"positivity lost in cell {cell} (x = {float(state.grid.centers[cell]):.6g}) "
            f"at t = {state.time + dt:.6g}: rho = {float(rho_new[cell]):.6g}"
        )
    if density_cap is not None and float(rho_new.max()) > density_cap:
        raise DensityCapExceeded(
            f"density {float(rho_new.max()):.6g} exceeds cap {density_cap:.6g} "
            f"at t = {state.time + dt:.6g}"
        )

    return state.advanced(
        rho=rho_new,
        u=u_new,
        time=state.time + dt,
        dt=dt,
        mass_leftflow=float(mass_flux[0]) * dt,
        mass_wallflow=float(mass_flux[-1]) * dt,
        max_courant=max(state.max_courant, dt * s_max / dx),
    )


@dataclass
class Snapshot:
    time: float
    rho: torch.Tensor
    u: torch.Tensor


@dataclass
class RunResult:
    state: FvmState
    snapshots: list[Snapshot] = field(default_factory=list)
    steps: int = 0
    failed: bool = False
    diagnostic: str | None = None


def run(
    g: GasModel,
    initial: FvmState,
    t_end: float,
    density_cap: float | None = None,
    snapshot_every: int | None = None,
    progress: bool = False,
) -> RunResult:
    state = initial
    result = RunResult(state=state)
    if snapshot_every is not None:
        result.snapshots.append(Snapshot(state.time, state.rho, state.u))

    with tqdm(total=t_end, desc="fvm", disable=not progress) as bar:
        while state.time < t_end and result.steps < MAX_STEPS:
            try:
                state = step(state, g, t_stop=t_end, density_cap=density_cap)
            except (PositivityError, DensityCapExceeded) as e:
                result.failed = True
                result.diagnostic = str(e)
                break

            result.steps += 1
            bar.update(state.dt)
            if snapshot_every is not None and result.steps % snapshot_every == 0:
                result.snapshots.append(Snapshot(state.time, state.rho, state.u))

    result.state = state
    return result


def initial_state(
    grid: Grid1D, u0: float, cfl: float = 0.9
) -> FvmState:
    return FvmState.uniform(grid, rho=1.0, u=u0, cfl=cfl)
