import torch


def as_float64(value: float | torch.Tensor) -> torch.Tensor:
    return torch.as_tensor(value, dtype=torch.float64)


def linspace_spec(spec: str) -> list[float]:
    """
    Parse an "a:b:n" range into n evenly spaced floats from a to b inclusive.
    A bare number is a single-point range.
    """
    parts = spec.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise ValueError(f"range must look like a:b:n, got {spec!r}")

    start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 1:
        raise ValueError(f"range needs at least one point, got n = {count}")
    if count == 1:
        return [start]

    return torch.linspace(start, stop, count, dtype=torch.float64).tolist()
