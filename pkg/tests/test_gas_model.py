import math

import pytest
import torch

from src.errors import DomainError
from src.gas_model import (
    GasModel,
    State,
    critical_mach,
    eigenvalues,
    genuine_nonlinearity_indicator,
    mach_number,
    pressure,
    pressure_derivative,
    pressure_potential,
    riemann_invariant_1,
    sound_speed,
)


def test_pressure():
    test_cases = [
        ((1.0, 1.0, 1.0), -1.0),
        ((1.0, 1.0, 2.0), -0.5),
        ((0.5, 2.0, 4.0), -1.0),
    ]

    for (gamma, s, rho), expected in test_cases:
        g = GasModel(gamma=gamma, s=s)
        assert math.isclose(pressure(g, rho), expected, rel_tol=1e-14), (gamma, s, rho)


def test_pressure_is_increasing():
    for gamma in [0.1, 0.5, 0.9, 1.0]:
        g = GasModel(gamma=gamma, s=0.7)
        rho = torch.logspace(-3, 3, 1000, dtype=torch.float64)
        p = pressure(g, rho)

        assert bool((p[1:] > p[:-1]).all()), gamma
        assert bool((pressure_derivative(g, rho) > 0).all()), gamma


def test_pressure_rejects_vacuum():
    g = GasModel(gamma=1.0, s=1.0)

    for rho in [0.0, -1.0]:
        with pytest.raises(DomainError):
            pressure(g, rho)

    with pytest.raises(DomainError):
        pressure(g, torch.tensor([1.0, 0.0], dtype=torch.float64))


def test_sound_speed():
    assert sound_speed(GasModel(gamma=1.0, s=1.0), 1.0) == 1.0
    assert math.isclose(sound_speed(GasModel(gamma=1.0, s=4.0), 2.0), 1.0)

    for gamma, mach in [(0.5, 0.3), (1.0, 2.0), (0.2, 7.0)]:
        g = GasModel.normalized(gamma, mach)
        assert math.isclose(sound_speed(g, 1.0), 1.0 / mach, rel_tol=1e-14)


def test_pressure_potential():
    g = GasModel.normalized(0.5, 0.8)
    # A = 1 / ((1 + gamma) M0^2)
    assert math.isclose(g.A, 1.0 / (1.5 * 0.64), rel_tol=1e-14)
    assert math.isclose(pressure_potential(g, 1.0), -g.A, rel_tol=1e-14)
    assert g.alpha == 1.5


def test_mach_number():
    assert mach_number(-1.0, 1.0) == 1.0
    assert mach_number(2.0, 0.5) == 4.0
    assert mach_number(0.0, 3.0) == 0.0

    with pytest.raises(DomainError):
        mach_number(1.0, 0.0)


def test_critical_mach():
    assert critical_mach(1.0) == 1.0
    assert math.isclose(critical_mach(0.5), math.sqrt(4.0 / 3.0), rel_tol=1e-15)
    assert math.isclose(critical_mach(1e-12), math.sqrt(2.0), rel_tol=1e-9)

    for gamma in [0.0, 1.5, -0.1]:
        with pytest.raises(DomainError):
            critical_mach(gamma)


def test_eigenvalues():
    assert eigenvalues(GasModel(gamma=1.0, s=1.0), State(rho=1.0, u=0.0)) == (-1.0, 1.0)

    g = GasModel.normalized(0.5, 1.0)
    lambda1, lambda2 = eigenvalues(g, State(rho=1.0, u=-1.0))
    assert math.isclose(lambda1, -2.0, rel_tol=1e-14)
    assert abs(lambda2) < 1e-14

    lambda1, lambda2 = eigenvalues(GasModel(gamma=1.0, s=1.0), State(rho=2.0, u=3.0))
    assert math.isclose(lambda1, 2.5)
    assert math.isclose(lambda2, 3.5)


def test_genuine_nonlinearity_indicator():
    g1, g2 = genuine_nonlinearity_indicator(
        GasModel.normalized(1.0, 0.6), State(rho=3.0, u=0.0)
    )
    assert g1 == 0.0 and g2 == 0.0

    g = GasModel.normalized(0.5, 1.0)
    for rho in [0.1, 1.0, 10.0]:
        g1, g2 = genuine_nonlinearity_indicator(g, State(rho=rho, u=0.0))
        assert g1 < 0.0 < g2
        assert g1 == -g2

    # (2 - alpha)/2 * sqrt(A alpha) at rho = 1 with A alpha = s gamma = 1
    g1, _ = genuine_nonlinearity_indicator(g, State(rho=1.0, u=0.0))
    assert math.isclose(g1, -0.25, rel_tol=1e-14)


def test_riemann_invariant_of_rest_state():
    g = GasModel.normalized(0.5, 2.0)
    # u - 2 c / alpha with c = 1 / M0
    assert math.isclose(
        riemann_invariant_1(g, State(rho=1.0, u=-1.0)), -1.0 - 2.0 / (1.5 * 2.0)
    )


def test_gas_model_validation():
    for kwargs in [{"gamma": 0.0, "s": 1.0}, {"gamma": 1.2, "s": 1.0}, {"gamma": 0.5, "s": 0.0}]:
        with pytest.raises(ValueError):
            GasModel(**kwargs)

    with pytest.raises(ValueError):
        State(rho=-1.0, u=0.0)

    assert State(rho=0.0, u=1.0).is_vacuum
