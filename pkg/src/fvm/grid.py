from dataclasses import dataclass, field, replace

import torch

from ..errors import DomainError


@dataclass(frozen=True)
class Grid1D:
    """Uniform cells on [x_min, 0]; the rightmost face is the piston wall."""

    x_min: float
    n_cells: int

    def __post_init__(self):
        if not self.x_min < 0.0:
            raise DomainError(f"x_min must be negative, got {self.x_min}")
        if self.n_cells < 1:
            raise DomainError(f"n_cells must be positive, got {self.n_cells}")

    @property
    def dx(self) -> float:
        return abs(self.x_min) / self.n_cells

    @property
    def centers(self) -> torch.Tensor:
        index = torch.arange(self.n_cells, dtype=torch.float64)
        return self.x_min + (index + 0.5) * self.dx

    @property
    def faces(self) -> torch.Tensor:
        index = torch.arange(self.n_cells + 1, dtype=torch.float64)
        return self.x_min + index * self.dx


@dataclass(frozen=True)
class FvmState:
    """
    Cell averages of the conserved pair (rho, u). The second conserved quantity of
    this model is the velocity itself, not the momentum.
    """

    grid: Grid1D
    rho: torch.Tensor
    u: torch.Tensor
    time: float = 0.0
    cfl: float = 0.9

    # bookkeeping of the last step
    dt: float = 0.0
    mass_leftflow: float = 0.0  # rho u through the face at x_min times dt, signed
    mass_wallflow: float = 0.0  # rho u through the wall face times dt
    max_courant: float = field(default=0.0)

    def __post_init__(self):
        if not (0.0 < self.cfl < 1.0):
            raise DomainError(f"cfl must be in (0, 1), got {self.cfl}")

    @classmethod
    def uniform(
        cls, grid: Grid1D, rho: float, u: float, cfl: float = 0.9
    ) -> "FvmState":
        return cls(
            grid=grid,
            rho=torch.full((grid.n_cells,), rho, dtype=torch.float64),
            u=torch.full((grid.n_cells,), u, dtype=torch.float64),
            cfl=cfl,
        )

    @property
    def total_mass(self) -> float:
        return float(self.rho.sum()) * self.grid.dx

    def advanced(self, **changes) -> "FvmState":
        return replace(self, **changes)
