import math
import warnings

import pytest
import torch

from src.errors import DensityCapExceeded, DomainError, PositivityError, WrongBranchError
from src.exact_solver import solve, solve_shock
from src.frames import PistonScenario
from src.fvm import (
    FvmState,
    Grid1D,
    Snapshot,
    boundary_mass,
    check_boundary_mass,
    fan_interior,
    fan_position,
    initial_state,
    run,
    run_and_compare,
    rusanov_flux,
    shock_position,
    step,
)
from src.gas_model import GasModel


def test_grid():
    grid = Grid1D(x_min=-1.0, n_cells=4)
    assert grid.dx == 0.25
    assert grid.centers.tolist() == [-0.875, -0.625, -0.375, -0.125]
    assert grid.faces.tolist() == [-1.0, -0.75, -0.5, -0.25, 0.0]

    with pytest.raises(DomainError):
        Grid1D(x_min=0.0, n_cells=4)
    with pytest.raises(DomainError):
        Grid1D(x_min=-1.0, n_cells=0)


def test_state_validation():
    grid = Grid1D(x_min=-1.0, n_cells=4)
    for cfl in [0.0, 1.0, 1.5]:
        with pytest.raises(DomainError):
            FvmState.uniform(grid, 1.0, 1.0, cfl=cfl)


def test_rusanov_flux_is_consistent():
    g = GasModel.normalized(0.5, 0.8)
    rho = torch.full((5,), 1.7, dtype=torch.float64)
    u = torch.full((5,), -0.3, dtype=torch.float64)

    mass, velocity, _ = rusanov_flux(g, rho, u)
    assert torch.allclose(mass, rho[:-1] * u[:-1], rtol=1e-15)
    assert torch.allclose(
        velocity, u[:-1] ** 2 / 2 - g.A * rho[:-1] ** (-g.alpha), rtol=1e-15
    )


def test_step_conserves_mass_and_respects_cfl():
    sc = PistonScenario(gamma=0.5, mach=0.8, direction="advance")
    grid = Grid1D(x_min=-1.0, n_cells=200)
    state = initial_state(grid, sc.initial_state.u, cfl=0.8)

    for _ in range(50):
        before = state.total_mass
        state = step(state, sc.gas)

        # the wall face carries no mass
        assert state.mass_wallflow == 0.0
        assert math.isclose(
            state.total_mass, before + state.mass_leftflow, rel_tol=1e-12
        )
        assert state.max_courant <= 0.8 + 1e-12
        assert bool((state.rho > 0.0).all())


def test_step_stops_on_time():
    g = GasModel.normalized(1.0, 0.6)
    state = initial_state(Grid1D(x_min=-1.0, n_cells=32), 1.0)

    state = step(state, g, t_stop=1e-5)
    assert state.time == 1e-5

    with pytest.raises(DomainError):
        step(state, g, t_stop=1e-5)


def test_uniform_flow_at_rest_is_steady():
    g = GasModel.normalized(0.5, 1.0)
    state = initial_state(Grid1D(x_min=-1.0, n_cells=64), 0.0)

    result = run(g, state, 0.5)
    assert not result.failed
    assert torch.allclose(result.state.rho, torch.ones(64, dtype=torch.float64), rtol=1e-14)
    assert torch.allclose(result.state.u, torch.zeros(64, dtype=torch.float64), atol=1e-14)


def test_positivity_and_density_cap():
    g = GasModel.normalized(1.0, 0.6)
    grid = Grid1D(x_min=-1.0, n_cells=8)

    rho = torch.ones(8, dtype=torch.float64)
    rho[3] = 1e-300
    u = torch.zeros(8, dtype=torch.float64)
    u[2], u[4] = 5.0, -5.0
    with pytest.raises(PositivityError):
        step(FvmState(grid=grid, rho=rho, u=u), g)

    state = FvmState.uniform(grid, 2.0, 0.0)
    with pytest.raises(DensityCapExceeded):
        step(state, g, density_cap=1.5)


def test_run_records_snapshots():
    g = GasModel.normalized(1.0, 0.6)
    result = run(g, initial_state(Grid1D(x_min=-1.0, n_cells=32), 1.0), 0.1, snapshot_every=2)

    assert result.state.time == 0.1
    assert result.snapshots[0].time == 0.0
    assert len(result.snapshots) == 1 + result.steps // 2
    assert all(a.time < b.time for a, b in zip(result.snapshots, result.snapshots[1:]))


def test_shock_position_of_sharp_step():
    grid = Grid1D(x_min=-1.0, n_cells=100)
    rho = torch.ones(100, dtype=torch.float64)
    rho[grid.centers > -0.3] = 2.5
    state = FvmState(grid=grid, rho=rho, u=torch.zeros_like(rho))

    assert abs(shock_position(state, 1.0, 2.5) + 0.3) < 1e-12

    # a mass deficit at the wall moves the fitted jump downstream by deficit / jump
    rho[-1] -= 1.5
    assert abs(shock_position(state, 1.0, 2.5) - (-0.3 + grid.dx)) < 1e-12


def test_fan_position_of_linear_profile():
    grid = Grid1D(x_min=-1.0, n_cells=100)
    rho = (1.0 - grid.centers.clamp(-0.8, -0.2).add(0.8)).to(torch.float64)
    state = FvmState(grid=grid, rho=rho, u=torch.zeros_like(rho))

    assert abs(fan_position(state, 0.7) + 0.5) < 1e-12


def test_fan_interior():
    fan = solve(PistonScenario(gamma=0.5, mach=1.0, direction="recede"))
    lo, hi = fan_interior(fan, 0.5)
    assert math.isclose(lo, -0.96875, rel_tol=1e-12)
    assert math.isclose(hi, -0.90625, rel_tol=1e-12)

    shock = solve(PistonScenario(gamma=0.5, mach=0.8, direction="advance"))
    assert fan_interior(shock, 0.5) is None


def test_zero_time_comparison_has_zero_error():
    sc = PistonScenario(gamma=1.0, mach=0.6, direction="advance")
    report = run_and_compare(sc, t_end=0.0, n_cells=64)

    assert report.l1_rho == [0.0, 0.0, 0.0]
    assert report.wave_positions == []
    assert report.passed()


def test_contact_cross_validation():
    sc = PistonScenario(gamma=1.0, mach=0.6, direction="advance")
    report = run_and_compare(sc, t_end=0.5, n_cells=400)

    assert not report.failed
    assert report.resolutions == [400, 800, 1600]
    assert report.graded_on == "domain"
    assert report.l1_rho_graded == report.l1_rho
    assert report.monotone

    # a smeared contact converges at about half order, well short of a shock's first order
    assert len(report.orders) == 2
    for order in report.orders:
        assert 0.4 <= order <= 0.6, report.orders
    assert 0.4 <= report.observed_order <= 0.6
    assert report.max_courant <= 0.9 + 1e-12

    finest = report.wave_positions[-1]
    assert finest.n_cells == 1600
    assert finest.error < 2.0 * finest.dx
    assert report.passed()


def test_shock_cross_validation():
    sc = PistonScenario(gamma=0.5, mach=0.8, direction="advance")
    report = run_and_compare(sc, t_end=0.5, n_cells=200)

    assert not report.failed
    assert report.wave == "shock"
    assert report.observed_order >= 0.7
    assert report.positions_ok


def test_fan_cross_validation():
    sc = PistonScenario(gamma=0.5, mach=1.0, direction="recede")
    report = run_and_compare(sc, t_end=0.5, n_cells=400)

    assert not report.failed
    assert report.x_min == -1.5
    assert report.graded_on == "fan_interior"
    # head and tail at t = 0.5 sit at -1 and -0.875
    lo, hi = report.graded_window
    assert math.isclose(lo, -1.0 + 0.25 * 0.125, rel_tol=1e-12)
    assert math.isclose(hi, -0.875 - 0.25 * 0.125, rel_tol=1e-12)
    assert all(g < d for g, d in zip(report.l1_rho_graded, report.l1_rho))

    assert report.monotone
    assert report.order_threshold == 0.8
    assert report.observed_order >= 0.8
    assert report.passed()

    profile = report.profiles[-1]
    assert len(profile.x) == 1600


def test_compare_rejects_measure_branch():
    sc = PistonScenario(gamma=1.0, mach=4.0, direction="advance")
    with pytest.raises(WrongBranchError):
        run_and_compare(sc, t_end=0.5, n_cells=64)

    with pytest.raises(WrongBranchError):
        check_boundary_mass(PistonScenario(gamma=1.0, mach=0.6, direction="advance"))


def test_boundary_mass():
    grid = Grid1D(x_min=-1.0, n_cells=10)
    snapshots = []
    for t in [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]:
        rho = torch.ones(10, dtype=torch.float64)
        rho[-1] += 2.0 * t / grid.dx
        snapshots.append(Snapshot(time=t, rho=rho, u=torch.zeros_like(rho)))

    history = boundary_mass(snapshots, grid, delta=0.2)
    assert history.n_boundary_cells == 2
    assert math.isclose(history.masses[0], 0.2, rel_tol=1e-14)
    assert math.isclose(history.slope, 2.0, rel_tol=1e-12)


def test_subcritical_boundary_mass_stays_bounded():
    sc = PistonScenario(gamma=1.0, mach=0.6, direction="advance")
    rho1 = solve_shock(sc).rho1
    assert math.isclose(rho1, 2.5, rel_tol=1e-9)

    grid = Grid1D(x_min=-1.0, n_cells=400)
    result = run(sc.gas, initial_state(grid, sc.initial_state.u), 0.5, snapshot_every=1)
    history = boundary_mass(
        result.snapshots, grid, 5 * grid.dx, window=(0.2, 0.5), density_bound=rho1
    )

    assert history.n_boundary_cells == 5
    assert math.isclose(history.bound, 2.5 * 5 * grid.dx, rel_tol=1e-12)
    assert history.masses[0] <= 5 * grid.dx * (1.0 + 1e-12)

    # the start-up layer overshoots rho1 delta by a few percent and then holds still
    assert history.max_mass > history.bound
    assert history.bound_ratio < 1.15
    assert history.within_bound()
    assert abs(history.slope) < 0.1


def test_boundary_mass_without_bound():
    grid = Grid1D(x_min=-1.0, n_cells=10)
    rho = torch.full((10,), 2.0, dtype=torch.float64)
    snapshots = [Snapshot(time=0.0, rho=rho, u=torch.zeros_like(rho))]

    history = boundary_mass(snapshots, grid, delta=0.2)
    assert history.bound is None
    assert history.bound_ratio is None
    assert not history.within_bound()
    assert math.isclose(history.max_mass, 0.4, rel_tol=1e-14)


def test_supercritical_boundary_mass():
    sc = PistonScenario(gamma=1.0, mach=4.0, direction="advance")

    # the slope check only warns
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        report = check_boundary_mass(sc, t_end=0.8, n_cells=400)

    assert not report.failed
    assert report.expected_slope == 1.0
    assert report.history.slope is not None
    assert report.history.times[-1] == 0.8
    # all of the inflow piles up on the wall
    assert abs(report.history.slope - 1.0) < 0.5
