from abc import ABC, abstractmethod
from typing import Literal

import torch
from pydantic import BaseModel, ConfigDict

from ..gas_model import GasModel, State

SolutionKind = Literal["shock", "measure", "rarefaction"]


class WaveSolution(BaseModel, ABC):
    """
    Self-similar solution U(x, t) = V(x / t) on the quarter plane x <= 0, t > 0.
    """

    model_config = ConfigDict(frozen=True)

    kind: SolutionKind
    gamma: float
    mach: float

    @property
    def gas(self) -> GasModel:
        return GasModel.normalized(self.gamma, self.mach)

    @property
    @abstractmethod
    def breakpoints(self) -> list[float]:
        """Slopes x / t of every discontinuity or kink, ascending."""
        pass

    @abstractmethod
    def state_at(self, eta: float) -> State:
        pass

    @abstractmethod
    def fields(self, eta: torch.Tensor) -> tuple[torch.Tensor, torch.Tensor]:
        """Vectorized (rho, u) at the given slopes x / t."""
        pass
