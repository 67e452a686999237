from pathlib import Path
from typing import Iterator

import yaml
from pydantic import BaseModel, field_validator, model_validator

from .frames import Direction, PistonScenario
from .weak_verify import GAUSS_ORDER, QuadratureRule


class MachRange(BaseModel):
    start: float
    stop: float
    num: int

    @field_validator("num")
    def check_num(cls, v: int):
        if v < 1:
            raise ValueError("sweep range must not be empty")
        return v

    def values(self) -> list[float]:
        if self.num == 1:
            return [self.start]
        step = (self.stop - self.start) / (self.num - 1)
        return [self.start + i * step for i in range(self.num - 1)] + [self.stop]


class ProfileConfig(BaseModel):
    # sample points x in [x_min, 0] per requested time
    x_min: float = -1.5
    n_points: int = 301

    @field_validator("x_min")
    def check_x_min(cls, v: float):
        if not v < 0.0:
            raise ValueError("x_min must be negative")
        return v

    @field_validator("n_points")
    def check_n_points(cls, v: int):
        if v < 2:
            raise ValueError("need at least 2 profile points")
        return v


class VerifyConfig(BaseModel):
    weak: bool = False
    fvm: bool = False


class WeakConfig(BaseModel):
    n_test_functions: int = 50
    quadrature: int = 512
    rule: QuadratureRule = "gauss"
    tolerance: float = 5e-6

    @field_validator("n_test_functions", "quadrature")
    def check_positive(cls, v: int):
        if v < 1:
            raise ValueError("must be positive")
        return v

    @model_validator(mode="after")
    def check_gauss_panels(self):
        if self.rule == "gauss" and self.quadrature % GAUSS_ORDER != 0:
            raise ValueError(
                f"gauss quadrature needs a multiple of {GAUSS_ORDER} points, "
                f"got {self.quadrature}"
            )
        return self


class FvmConfig(BaseModel):
    n_cells: int = 400
    cfl: float = 0.9
    t_end: float = 0.5
    delta_cells: int = 5
    x_min: float | None = None
    levels: int = 3
    density_cap: float = 1e6

    @field_validator("n_cells")
    def check_n_cells(cls, v: int):
        if v < 16:
            raise ValueError("n_cells must be at least 16")
        return v

    @field_validator("cfl")
    def check_cfl(cls, v: float):
        if not (0.0 < v < 1.0):
            raise ValueError("cfl must be in (0, 1)")
        return v

    @field_validator("t_end")
    def check_t_end(cls, v: float):
        if v < 0.0:
            raise ValueError("t_end must be non-negative")
        return v


class RunConfig(BaseModel):
    gamma: float
    mach: float | list[float] | MachRange
    direction: Direction = "advance"

    t_samples: list[float] = [0.5, 1.0]
    x_samples: ProfileConfig = ProfileConfig()

    verify: VerifyConfig = VerifyConfig()
    weak: WeakConfig = WeakConfig()
    fvm: FvmConfig = FvmConfig()

    output: str = "./output"
    seed: int = 42

    @field_validator("gamma")
    def check_gamma(cls, v: float):
        if not (0.0 < v <= 1.0):
            raise ValueError(f"gamma must be in (0, 1], got {v}")
        return v

    @field_validator("mach")
    def check_mach(cls, v):
        values = v.values() if isinstance(v, MachRange) else v
        values = values if isinstance(values, list) else [values]
        if len(values) == 0:
            raise ValueError("mach sweep must not be empty")
        if any(not m > 0.0 for m in values):
            raise ValueError("mach must be positive")
        return v

    @field_validator("t_samples")
    def check_t_samples(cls, v: list[float]):
        if any(not t > 0.0 for t in v):
            raise ValueError("sample times must be positive")
        return v

    @model_validator(mode="after")
    def check_recede_gamma(self):
        if self.direction == "recede" and self.gamma == 1.0:
            raise ValueError(
                "a receding piston needs gamma < 1, gamma = 1 has no rarefaction fan"
            )
        return self

    @property
    def machs(self) -> list[float]:
        if isinstance(self.mach, MachRange):
            return self.mach.values()
        if isinstance(self.mach, list):
            return list(self.mach)
        return [self.mach]

    def scenarios(self) -> Iterator[PistonScenario]:
        for mach in self.machs:
            yield PistonScenario(gamma=self.gamma, mach=mach, direction=self.direction)

    def to_dict(self) -> dict:
        return self.model_dump()

    def save_to(self, dir: Path | str, filename: str = "config.yaml"):
        if isinstance(dir, str):
            dir = Path(dir)

        dir.mkdir(parents=True, exist_ok=True)
        with open(dir / filename, "w") as f:
            yaml.dump(self.to_dict(), f, sort_keys=True)

    @staticmethod
    def from_config_file(path: str | Path) -> "RunConfig":
        with open(path, "r") as f:
            config = yaml.safe_load(f)

        return RunConfig.model_validate(config if config is not None else {})
