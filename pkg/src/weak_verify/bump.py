import torch
from pydantic import BaseModel, ConfigDict

from ..utils.tensor import as_float64


def _bump(s: torch.Tensor) -> torch.Tensor:
    # (1 - s^2)^2 on |s| < 1: C1, compactly supported, peak 1 at s = 0
    inside = s.abs() < 1.0
    return torch.where(inside, (1.0 - s**2) ** 2, torch.zeros_like(s))


def _bump_prime(s: torch.Tensor) -> torch.Tensor:
    inside = s.abs() < 1.0
    return torch.where(inside, -4.0 * s * (1.0 - s**2), torch.zeros_like(s))


class TestFunction(BaseModel):
    """
    Tensor-product bump phi(t, x) = b((t - t_center) / r_t) b((x - x_center) / r_x)
    supported on the closed rectangle [t_center -+ r_t] x [x_center -+ r_x].
    """

    __test__ = False  # not a pytest class

    model_config = ConfigDict(frozen=True)

    t_center: float
    x_center: float
    r_t: float
    r_x: float

    @property
    def t_support(self) -> tuple[float, float]:
        return self.t_center - self.r_t, self.t_center + self.r_t

    @property
    def x_support(self) -> tuple[float, float]:
        return self.x_center - self.r_x, self.x_center + self.r_x

    def _scaled(self, t, x) -> tuple[torch.Tensor, torch.Tensor]:
        return (
            (as_float64(t) - self.t_center) / self.r_t,
            (as_float64(x) - self.x_center) / self.r_x,
        )

    def value(self, t, x) -> torch.Tensor:
        st, sx = self._scaled(t, x)
        return _bump(st) * _bump(sx)

    def dt(self, t, x) -> torch.Tensor:
        st, sx = self._scaled(t, x)
        return _bump_prime(st) / self.r_t * _bump(sx)

    def dx(self, t, x) -> torch.Tensor:
        st, sx = self._scaled(t, x)
        return _bump(st) * _bump_prime(sx) / self.r_x


def random_test_functions(
    n: int,
    seed: int,
    t_range: tuple[float, float] = (-0.15, 1.2),
    x_range: tuple[float, float] = (-1.2, 0.3),
    radius_range: tuple[float, float] = (0.2, 0.6),
) -> list[TestFunction]:
    generator = torch.Generator().manual_seed(seed)
    draws = torch.rand((n, 4), generator=generator, dtype=torch.float64)

    def scale(column: torch.Tensor, bounds: tuple[float, float]) -> list[float]:
        lo, hi = bounds
        return (lo + (hi - lo) * column).tolist()

    t_centers = scale(draws[:, 0], t_range)
    x_centers = scale(draws[:, 1], x_range)
    r_ts = scale(draws[:, 2], radius_range)
    r_xs = scale(draws[:, 3], radius_range)

    return [
        TestFunction(t_center=tc, x_center=xc, r_t=rt, r_x=rx)
        for tc, xc, rt, rx in zip(t_centers, x_centers, r_ts, r_xs)
    ]
