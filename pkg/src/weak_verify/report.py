import math
import warnings

from pydantic import BaseModel
from tqdm import tqdm

from ..exact_solver import MeasureConcentrationSolution, SelfSimilarSolution
from .bump import TestFunction, random_test_functions
from .quadrature import QuadratureRule
from .residual import WeakResidual, integral_weak_residual, measure_weak_residual

RESIDUAL_FLOOR = 1e-10
NON_CONVERGENCE_RATIO = 0.9
DEFAULT_TOLERANCE = 5e-6


class ResidualReport(BaseModel):
    branch: str
    gamma: float
    mach: float
    n_test_functions: int
    quadrature: int
    rule: QuadratureRule
    seed: int

    max_mass_res: float
    max_mom_res: float
    rms_mass_res: float
    rms_mom_res: float

    # the same family at twice the quadrature points
    refined_max_res: float
    refinement_ratio: float
    converged: bool

    mass_residuals: list[float]
    momentum_residuals: list[float]

    @property
    def max_res(self) -> float:
        return max(self.max_mass_res, self.max_mom_res)

    def passed(self, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        return self.max_res < tolerance and self.converged


def weak_residual(
    sol: SelfSimilarSolution, phi: TestFunction, n: int, rule: QuadratureRule
) -> WeakResidual:
    if isinstance(sol.wave, MeasureConcentrationSolution):
        return measure_weak_residual(sol.wave, phi, n, rule)
    return integral_weak_residual(sol.wave, phi, n, rule)


def _rms(values: list[float]) -> float:
    return math.sqrt(sum(v * v for v in values) / len(values)) if values else 0.0


def verify_solution(
    sol: SelfSimilarSolution,
    n_test_functions: int = 50,
    quadrature: int = 512,
    seed: int = 42,
    rule: QuadratureRule = "gauss",
    progress: bool = False,
) -> ResidualReport:
    family = random_test_functions(n_test_functions, seed)

    coarse: list[WeakResidual] = []
    fine: list[WeakResidual] = []
    for phi in tqdm(family, desc="weak residuals", disable=not progress):
        coarse.append(weak_residual(sol, phi, quadrature, rule))
        fine.append(weak_residual(sol, phi, 2 * quadrature, rule))

    mass = [r.mass for r in coarse]
    momentum = [r.momentum for r in coarse]
    coarse_max = max((max(abs(r.mass), abs(r.momentum)) for r in coarse), default=0.0)
    fine_max = max((max(abs(r.mass), abs(r.momentum)) for r in fine), default=0.0)

    ratio = fine_max / coarse_max if coarse_max > 0.0 else 0.0
    # below the floor the residual is roundoff and no longer shrinks
    converged = coarse_max <= RESIDUAL_FLOOR or ratio <= 0.5
    if coarse_max > RESIDUAL_FLOOR and ratio > NON_CONVERGENCE_RATIO:
        warnings.warn(
            f"weak residuals do not converge under refinement (ratio {ratio:.3f})"
        )

    return ResidualReport(
        branch=sol.kind,
        gamma=sol.scenario.gamma,
        mach=sol.scenario.mach,
        n_test_functions=n_test_functions,
        quadrature=quadrature,
        rule=rule,
        seed=seed,
        max_mass_res=max((abs(v) for v in mass), default=0.0),
        max_mom_res=max((abs(v) for v in momentum), default=0.0),
        rms_mass_res=_rms(mass),
        rms_mom_res=_rms(momentum),
        refined_max_res=fine_max,
        refinement_ratio=ratio,
        converged=converged,
        mass_residuals=mass,
        momentum_residuals=momentum,
    )
