from .common import RunOutcome, ScenarioRunner, scenario_dir_name
from .summary import (
    FVM_PROFILE_COLUMNS,
    PROFILE_COLUMNS,
    fvm_profile_rows,
    profile_rows,
    solution_summary,
)
