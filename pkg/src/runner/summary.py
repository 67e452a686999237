import torch

from ..config import ProfileConfig
from ..exact_solver import (
    MeasureConcentrationSolution,
    RarefactionFanSolution,
    SelfSimilarSolution,
    ShockSolution,
    second_family_diagnostic,
)
from ..fvm import ProfileRows
from ..gas_model import pressure

PROFILE_COLUMNS = ["eta", "x", "t", "rho", "u", "p"]
FVM_PROFILE_COLUMNS = ["x", "rho", "u", "rho_exact", "u_exact"]


def solution_summary(sol: SelfSimilarSolution, t_samples: list[float]) -> dict:
    sc, wave = sol.scenario, sol.wave
    summary: dict = {
        "branch": sol.kind,
        "gamma": sc.gamma,
        "mach": sc.mach,
        "direction": sc.direction,
    }

    if isinstance(wave, ShockSolution):
        summary |= {"rho1": wave.rho1, "sigma": wave.sigma}
    elif isinstance(wave, MeasureConcentrationSolution):
        summary |= {
            "w_p": wave.w_p,
            "atoms": [{"t": t, "w_rho": wave.w_rho(t), "w_p": wave.w_p} for t in t_samples],
        }
    elif isinstance(wave, RarefactionFanSolution):
        summary |= {
            "eta_head": wave.eta_head,
            "eta_tail": wave.eta_tail,
            "rho1": wave.rho1,
            "second_family": second_family_diagnostic(sc).model_dump(),
        }

    return summary


def profile_rows(
    sol: SelfSimilarSolution, t: float, profile: ProfileConfig
) -> list[tuple[float, ...]]:
    """Exact profile at time t on evenly spaced x in [x_min, 0]."""
    x = torch.linspace(profile.x_min, 0.0, profile.n_points, dtype=torch.float64)
    if isinstance(sol.wave, MeasureConcentrationSolution):
        # the wall point carries the atom, which goes to the summary instead
        x = x[:-1]

    eta = x / t
    rho, u = sol.wave.fields(eta)
    p = pressure(sol.scenario.gas, rho)

    return [
        (eta_i, x_i, t, rho_i, u_i, p_i)
        for eta_i, x_i, rho_i, u_i, p_i in zip(
            eta.tolist(), x.tolist(), rho.tolist(), u.tolist(), p.tolist()
        )
    ]


def fvm_profile_rows(profile: ProfileRows) -> list[tuple[float, ...]]:
    return list(zip(profile.x, profile.rho, profile.u, profile.rho_exact, profile.u_exact))
