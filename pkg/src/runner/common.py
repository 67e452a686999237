import warnings
from dataclasses import dataclass, field
from pathlib import Path

from tqdm import tqdm

from ..config import RunConfig
from ..exact_solver import SelfSimilarSolution, ShockSolution, solve
from ..frames import PistonScenario
from ..fvm import check_boundary_mass, run_and_compare
from ..saving import (
    ArtifactWriter,
    CsvArtifactWriterConfig,
    JsonArtifactWriterConfig,
    get_artifact_writer,
)
from ..utils.logging import log
from ..weak_verify import entropy_check, verify_solution
from .summary import (
    FVM_PROFILE_COLUMNS,
    PROFILE_COLUMNS,
    fvm_profile_rows,
    profile_rows,
    solution_summary,
)


def scenario_dir_name(sc: PistonScenario) -> str:
    return f"{sc.direction}_gamma{sc.gamma!r}_mach{sc.mach!r}"


@dataclass
class RunOutcome:
    artifacts: list[Path] = field(default_factory=list)
    failures: list[Path] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return len(self.failures) == 0


class ScenarioRunner:
    config: RunConfig

    verify_weak: bool
    verify_fvm: bool

    def __init__(
        self,
        config: RunConfig,
        verify_weak: bool | None = None,
        verify_fvm: bool | None = None,
        progress: bool = True,
    ) -> None:
        self.config = config
        self.verify_weak = config.verify.weak if verify_weak is None else verify_weak
        self.verify_fvm = config.verify.fvm if verify_fvm is None else verify_fvm
        self.progress = progress

    @property
    def output_dir(self) -> Path:
        return Path(self.config.output)

    def json_writer(self, name: str, save_dir: Path) -> ArtifactWriter:
        return get_artifact_writer(JsonArtifactWriterConfig(name=name, save_dir=save_dir))

    def csv_writer(self, name: str, save_dir: Path, columns: list[str]) -> ArtifactWriter:
        return get_artifact_writer(
            CsvArtifactWriterConfig(name=name, save_dir=save_dir, columns=columns)
        )

    def run(self) -> RunOutcome:
        outcome = RunOutcome()
        self.config.save_to(self.output_dir)

        scenarios = list(self.config.scenarios())
        for sc in tqdm(scenarios, desc="scenarios", disable=not self.progress):
            self.run_scenario(sc, outcome)

        return outcome

    def run_scenario(self, sc: PistonScenario, outcome: RunOutcome):
        save_dir = self.output_dir / scenario_dir_name(sc)

        sol = solve(sc)
        log("solved", branch=sol.kind, gamma=sc.gamma, mach=sc.mach)

        summary = solution_summary(sol, self.config.t_samples)
        outcome.artifacts.append(self.json_writer("summary", save_dir).save(summary))

        for t in self.config.t_samples:
            writer = self.csv_writer(f"profile_t{t!r}", save_dir, PROFILE_COLUMNS)
            outcome.artifacts.append(writer.save(profile_rows(sol, t, self.config.x_samples)))

        if self.verify_weak:
            self.run_weak(sol, save_dir, outcome)
        if self.verify_fvm:
            self.run_fvm(sol, save_dir, outcome)

    def run_weak(self, sol: SelfSimilarSolution, save_dir: Path, outcome: RunOutcome):
        weak = self.config.weak
        report = verify_solution(
            sol,
            n_test_functions=weak.n_test_functions,
            quadrature=weak.quadrature,
            seed=self.config.seed,
            rule=weak.rule,
            progress=self.progress,
        )
        passed = report.passed(weak.tolerance)

        payload = report.model_dump() | {"passed": passed, "tolerance": weak.tolerance}
        if isinstance(sol.wave, ShockSolution):
            entropy = entropy_check(sol.wave)
            payload["entropy"] = entropy.model_dump() | {
                "admissible": entropy.admissible,
                "admissible_family": entropy.admissible_family,
            }
            passed = passed and entropy.admissible
            payload["passed"] = passed

        path = self.json_writer("weak_report", save_dir).save(payload)
        outcome.artifacts.append(path)
        log("weak residuals", max_res=report.max_res, passed=passed)
        if not passed:
            outcome.failures.append(path)

    def run_fvm(self, sol: SelfSimilarSolution, save_dir: Path, outcome: RunOutcome):
        fvm = self.config.fvm
        sc = sol.scenario

        if sol.kind == "measure":
            # a plausibility check only, it never fails the run
            report = check_boundary_mass(
                sc,
                t_end=fvm.t_end,
                n_cells=fvm.n_cells,
                x_min=fvm.x_min if fvm.x_min is not None else -1.0,
                delta_cells=fvm.delta_cells,
                cfl=fvm.cfl,
                density_cap=fvm.density_cap,
                progress=self.progress,
            )
            path = self.json_writer("fvm_report", save_dir).save(report)
            outcome.artifacts.append(path)
            log("boundary mass", slope=report.history.slope, within=report.within_tolerance)
            return

        comparison = run_and_compare(
            sc,
            t_end=fvm.t_end,
            n_cells=fvm.n_cells,
            cfl=fvm.cfl,
            x_min=fvm.x_min,
            levels=fvm.levels,
            progress=self.progress,
        )
        passed = comparison.passed()
        if comparison.failed:
            warnings.warn(f"finite-volume run failed: {comparison.diagnostic}")

        path = self.json_writer("fvm_report", save_dir).save(
            comparison.model_dump() | {"passed": passed}
        )
        outcome.artifacts.append(path)
        for profile in comparison.profiles:
            writer = self.csv_writer(
                f"fvm_profile_n{profile.n_cells}", save_dir, FVM_PROFILE_COLUMNS
            )
            outcome.artifacts.append(writer.save(fvm_profile_rows(profile)))

        log("fvm", orders=comparison.orders, observed_order=comparison.observed_order, passed=passed)
        if not passed:
            outcome.failures.append(path)
