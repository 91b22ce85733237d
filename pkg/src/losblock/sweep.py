"""One-parameter sweeps over the disc parameters."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .allocation import Allocation
from .blockage import PercentBlockage, percentage_blockage
from .scene import ConfigurationError, DiscSpec, Scene

PARAMETERS = ("radius", "height", "distance")


@dataclass(frozen=True)
class SweepSpec:
    vary: str
    start: float
    stop: float
    step: float
    fixed: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.vary not in PARAMETERS:
            raise ConfigurationError(f"vary must be one of {', '.join(PARAMETERS)}, got {self.vary!r}")
        for name in ("start", "stop", "step"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ConfigurationError(f"{name} must be finite")
            object.__setattr__(self, name, value)
        if self.step <= 0:
            raise ConfigurationError("step must be > 0")
        if self.start < 0:
            raise ConfigurationError("start must be >= 0")
        if self.stop < self.start:
            raise ConfigurationError("stop < start")

        expected = {p for p in PARAMETERS if p != self.vary}
        fixed = {k: float(v) for k, v in dict(self.fixed).items()}
        if set(fixed) != expected:
            raise ConfigurationError(
                f"fixed must give exactly {sorted(expected)} when varying {self.vary}, got {sorted(fixed)}"
            )
        object.__setattr__(self, "fixed", {k: fixed[k] for k in PARAMETERS if k in fixed})
        # validates fixed values (>= 0, finite)
        self.disc_at(self.start)

    @property
    def count(self) -> int:
        return math.floor((self.stop - self.start) / self.step + 1 + 1e-9)

    def values(self) -> list[float]:
        # start + i*step rather than repeated addition to avoid drift
        return [self.start + i * self.step for i in range(self.count)]

    def disc_at(self, value: float) -> DiscSpec:
        return DiscSpec(**{**self.fixed, self.vary: value})


@dataclass(frozen=True)
class SweepRow:
    param: float
    cells: tuple[PercentBlockage, ...]

    @property
    def percentages(self) -> tuple[float, ...]:
        return tuple(c.value for c in self.cells)


@dataclass(frozen=True)
class SweepResult:
    param_name: str
    allocation_labels: tuple[str, ...]
    rows: tuple[SweepRow, ...]

    def column(self, label: str) -> list[float]:
        k = self.allocation_labels.index(label)
        return [row.percentages[k] for row in self.rows]

    def to_dict(self) -> dict:
        return {
            "param_name": self.param_name,
            "allocation_labels": list(self.allocation_labels),
            "rows": [
                {
                    "param_value": row.param,
                    "percentages": list(row.percentages),
                    "blocked_counts": [c.blocked for c in row.cells],
                    "total_locations": row.cells[0].total,
                }
                for row in self.rows
            ],
        }


@dataclass(frozen=True)
class ScenarioPreset:
    name: str
    sweep: SweepSpec
    description: str = ""


def scenario_presets() -> list[ScenarioPreset]:
    """Sweep ranges are reconstructions; only the 10 cm overhead disc and
    the h=0 full-coverage row are fixed points."""
    return [
        ScenarioPreset(
            "close-overhead-radius",
            SweepSpec("radius", 0.0, 1.0, 0.05, {"height": 0.1, "distance": 0.0}),
            "disc 10 cm directly above the receiver, growing radius",
        ),
        ScenarioPreset(
            "distance-sweep",
            SweepSpec("distance", 0.0, 2.0, 0.1, {"radius": 0.2, "height": 0.1}),
            "20 cm disc 10 cm up, moving away along +y",
        ),
        ScenarioPreset(
            "height-sweep",
            SweepSpec("height", 0.0, 2.0, 0.1, {"radius": 0.2, "distance": 0.0}),
            "20 cm disc directly overhead, rising to the ceiling",
        ),
        ScenarioPreset(
            "radius-at-distance",
            SweepSpec("radius", 0.0, 1.0, 0.05, {"height": 0.5, "distance": 0.5}),
            "disc 50 cm up and 50 cm ahead, growing radius",
        ),
    ]


def get_scenario(name: str) -> ScenarioPreset:
    for preset in scenario_presets():
        if preset.name == name:
            return preset
    raise ConfigurationError(f"unknown scenario preset {name!r}")


def _evaluate_row(job) -> SweepRow:
    scene, allocs, value, spec = job
    return SweepRow(value, tuple(percentage_blockage(scene, a, spec) for a in allocs))


def run_sweep(
    scene: Scene,
    allocs: Sequence[Allocation],
    sw: SweepSpec,
    workers: int | None = 1,
) -> SweepResult:
    """Evaluate percentage blockage for every swept value and allocation.

    ``workers`` > 1 spreads rows over processes; rows are merged in sweep
    order so the result does not depend on scheduling.
    """
    allocs = tuple(allocs)
    if not allocs:
        raise ConfigurationError("no allocations given")
    labels = tuple(a.label for a in allocs)
    if len(set(labels)) != len(labels):
        raise ConfigurationError("allocation labels must be unique")
    for a in allocs:
        a.check(scene.aps)

    jobs = [(scene, allocs, v, sw.disc_at(v)) for v in sw.values()]
    if workers is not None and workers <= 1:
        rows = [_evaluate_row(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_evaluate_row, jobs))
    return SweepResult(sw.vary, labels, tuple(rows))
