from typing import Callable, Literal

import numpy as np
import torch

QuadratureRule = Literal["midpoint", "gauss"]

# points per Gauss-Legendre panel; exact for the degree-7 products met on bump supports
GAUSS_ORDER = 4

_gauss_nodes, _gauss_weights = np.polynomial.legendre.leggauss(GAUSS_ORDER)
GAUSS_NODES = torch.tensor((_gauss_nodes + 1.0) / 2.0, dtype=torch.float64)
GAUSS_WEIGHTS = torch.tensor(_gauss_weights / 2.0, dtype=torch.float64)


def reference_rule(n: int, rule: QuadratureRule) -> tuple[torch.Tensor, torch.Tensor]:
    """Nodes and weights of an n-point composite rule on [0, 1]."""
    if rule == "midpoint":
        nodes = (torch.arange(n, dtype=torch.float64) + 0.5) / n
        weights = torch.full((n,), 1.0 / n, dtype=torch.float64)
        return nodes, weights

    if rule == "gauss":
        if n % GAUSS_ORDER != 0:
            raise ValueError(f"gauss rule needs a multiple of {GAUSS_ORDER} points, got {n}")
        panels = n // GAUSS_ORDER
        offsets = torch.arange(panels, dtype=torch.float64)[:, None]
        nodes = ((offsets + GAUSS_NODES[None, :]) / panels).reshape(-1)
        weights = (GAUSS_WEIGHTS[None, :] / panels).expand(panels, -1).reshape(-1)
        return nodes, weights

    raise ValueError(f"Unknown quadrature rule: {rule}")


def integrate_interval(
    f: Callable[[torch.Tensor], torch.Tensor],
    a: float,
    b: float,
    n: int,
    rule: QuadratureRule,
) -> float:
    if b <= a:
        return 0.0
    nodes, weights = reference_rule(n, rule)
    return float(((b - a) * weights * f(a + (b - a) * nodes)).sum())


def integrate_split_rows(
    f: Callable[[torch.Tensor, torch.Tensor], tuple[torch.Tensor, ...]],
    t_bounds: tuple[float, float],
    x_bounds: tuple[float, float],
    slopes: list[float],
    n: int,
    rule: QuadratureRule,
) -> list[float]:
    """
    Integrate every component of f(t, x) over a rectangle. Each t-row is split in x
    at the lines x = eta t for the given slopes, so the integrand is smooth on
    every piece.
    """
    ta, tb = t_bounds
    xa, xb = x_bounds
    if tb <= ta or xb <= xa:
        empty = torch.empty(0, dtype=torch.float64)
        return [0.0 for _ in f(empty, empty)]

    nodes, weights = reference_rule(n, rule)
    t = ta + (tb - ta) * nodes  # (n,)
    t_weights = (tb - ta) * weights

    # piece edges per row, ordered because the slopes are ascending
    edges = [torch.full_like(t, xa)]
    for eta in sorted(slopes):
        edges.append((eta * t).clamp(xa, xb))
    edges.append(torch.full_like(t, xb))
    lower = torch.stack(edges[:-1], dim=1)  # (n, pieces)
    upper = torch.stack(edges[1:], dim=1)
    length = upper - lower

    x = lower[..., None] + length[..., None] * nodes  # (n, pieces, n)
    tt = t[:, None, None].expand_as(x)
    w = t_weights[:, None, None] * length[..., None] * weights

    return [float((w * component).sum()) for component in f(tt, x)]
