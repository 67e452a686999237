import pytest
import torch

from src.utils.logging import format_fields, log
from src.utils.tensor import as_float64, linspace_spec


def test_as_float64():
    assert as_float64(1.0).dtype == torch.float64
    assert as_float64(torch.ones(3, dtype=torch.float32)).dtype == torch.float64


def test_linspace_spec():
    test_cases = [
        ("0.5", [0.5]),
        ("0:1:3", [0.0, 0.5, 1.0]),
        ("1:1:1", [1.0]),
        ("0.2:1.0:5", [0.2, 0.4, 0.6, 0.8, 1.0]),
    ]

    for spec, expected in test_cases:
        assert linspace_spec(spec) == pytest.approx(expected, rel=1e-15), spec

    for spec in ["0:1", "0:1:0", "a:b:c", "0:1:2:3"]:
        with pytest.raises(ValueError):
            linspace_spec(spec)


def test_log(capsys):
    assert format_fields(gamma=0.5, branch="shock") == "gamma=0.5 branch=shock"

    log("solved", branch="shock", mach=0.6)
    log("done")
    out = capsys.readouterr().out
    assert "solved branch=shock mach=0.6" in out
    assert "done" in out
