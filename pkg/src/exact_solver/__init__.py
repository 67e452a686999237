from .util import SolutionKind, WaveSolution
from .classify import classify
from .shock import (
    ShockSolution,
    RankineHugoniotResidual,
    hugoniot_f,
    hugoniot_f_prime,
    solve_shock,
    rankine_hugoniot_residuals,
)
from .measure import MeasureConcentrationSolution, solve_measure, boundary_force_weight
from .rarefaction import (
    RarefactionFanSolution,
    LimitReport,
    LimitSample,
    RejectionReport,
    FanPoint,
    solve_rarefaction,
    high_mach_limits,
    second_family_fan,
    second_family_diagnostic,
)
from .solution import (
    BoundaryAtom,
    SelfSimilarSolution,
    WaveSolutionAlias,
    solve,
    sample,
    sample_physical,
)
