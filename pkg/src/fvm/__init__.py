from .grid import Grid1D, FvmState
from .scheme import (
    RunResult,
    Snapshot,
    initial_state,
    max_wave_speed,
    physical_flux,
    run,
    rusanov_flux,
    step,
)
from .compare import (
    BoundaryMassReport,
    ComparisonReport,
    MassHistory,
    ProfileRows,
    WavePosition,
    boundary_mass,
    check_boundary_mass,
    default_x_min,
    fan_interior,
    fan_position,
    run_and_compare,
    shock_position,
)
