import sys
from pathlib import Path

import click
import yaml
from pydantic import ValidationError

from .config import RunConfig
from .errors import PistonError
from .exact_solver import classify
from .frames import Direction, PistonScenario
from .gas_model import critical_mach
from .runner import ScenarioRunner
from .saving import CsvArtifactWriterConfig, get_artifact_writer
from .utils.tensor import linspace_spec

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_CONFIG_ERROR = 2


def _config_error(lines: list[str]):
    for line in lines:
        click.echo(line, err=True)
    sys.exit(EXIT_CONFIG_ERROR)


def load_config(path: str) -> RunConfig:
    try:
        return RunConfig.from_config_file(path)
    except ValidationError as e:
        _config_error(
            [
                f"{'.'.join(str(loc) for loc in err['loc']) or 'config'}: {err['msg']}"
                for err in e.errors()
            ]
        )
    except (OSError, ValueError, yaml.YAMLError) as e:
        # unreadable file or malformed YAML
        _config_error([f"config: {e}"])


def _run(config: str, verify_weak: bool | None, verify_fvm: bool | None, quiet: bool):
    _config = load_config(config)

    runner = ScenarioRunner(
        _config,
        verify_weak=verify_weak,
        verify_fvm=verify_fvm,
        progress=not quiet,
    )
    try:
        outcome = runner.run()
    except PistonError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)

    if not outcome.passed:
        click.echo("verification failed:", err=True)
        for path in outcome.failures:
            click.echo(f"  {path}", err=True)
        sys.exit(EXIT_VERIFICATION_FAILED)

    click.echo(f"wrote {len(outcome.artifacts)} artifacts to {runner.output_dir}")


@click.group()
def cli():
    """Exact solutions and verification for the generalized Chaplygin gas piston problem."""


@cli.command()
@click.option("--config", type=str, required=True)
@click.option("--quiet", is_flag=True, default=False)
def solve(config: str, quiet: bool):
    """Solve every scenario of the config and write summaries and profiles."""
    _run(config, None, None, quiet)


@cli.command()
@click.option("--config", type=str, required=True)
@click.option("--quiet", is_flag=True, default=False)
def verify(config: str, quiet: bool):
    """Solve and check the weak formulations with random test functions."""
    _run(config, True, None, quiet)


@cli.command()
@click.option("--config", type=str, required=True)
@click.option("--quiet", is_flag=True, default=False)
def fvm(config: str, quiet: bool):
    """Solve and cross-validate against the finite-volume scheme."""
    _run(config, None, True, quiet)


@cli.command(name="phase-diagram")
@click.option("--gamma", "gamma_spec", type=str, required=True, help="a:b:n")
@click.option("--mach", "mach_spec", type=str, required=True, help="a:b:n")
@click.option("--out", type=str, required=True)
@click.option(
    "--direction", type=click.Choice(["advance", "recede"]), default="advance"
)
def phase_diagram(gamma_spec: str, mach_spec: str, out: str, direction: Direction):
    """Classify every (gamma, mach) pair of the grid."""
    try:
        gammas = linspace_spec(gamma_spec)
        machs = linspace_spec(mach_spec)
        rows = [
            (
                gamma,
                mach,
                classify(PistonScenario(gamma=gamma, mach=mach, direction=direction)),
                critical_mach(gamma),
            )
            for gamma in gammas
            for mach in machs
        ]
    except ValueError as e:
        _config_error([f"grid: {e}"])

    path = Path(out)
    writer = get_artifact_writer(
        CsvArtifactWriterConfig(
            columns=["gamma", "mach", "branch", "critical_mach"],
            name=path.stem,
            save_dir=path.parent,
            save_name_template="{name}" + path.suffix,
        )
    )
    writer.save(rows)
    click.echo(f"wrote {len(rows)} rows to {path}")


if __name__ == "__main__":
    cli()
