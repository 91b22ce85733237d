"""JSON run configuration: parsing, validation and serialisation.

Example (every key except ``allocations`` and ``sweep`` is optional)::

    {
      "scene": {
        "room": {"width_x": 4, "length_y": 8, "height_z": 3},
        "cf_height": 1.0,
        "spacing": 0.25,
        "aps": [[1, 1, 3], [1, 3, 3], [1, 5, 3], [1, 7, 3],
                [3, 1, 3], [3, 3, 3], [3, 5, 3], [3, 7, 3]]
      },
      "allocations": ["single(1)", "max_separated_pair",
                     {"label": "corners", "aps": [1, 4, 5, 8]}],
      "sweep": {"vary": "radius", "start": 0, "stop": 1, "step": 0.05,
                "fixed": {"height": 0.1, "distance": 0}},
      "output": {"path": "results", "stem": "blockage",
                 "formats": ["csv", "json"], "svg": true}
    }

``sweep`` may instead name a scenario preset: ``{"scenario": "height-sweep"}``.
Missing ``fixed`` parameters default to 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from .allocation import Allocation, is_preset_name, resolve_preset
from .scene import DEFAULT_AP_POSITIONS, Room, Scene, build_scene
from .sweep import PARAMETERS, SweepSpec, get_scenario

FORMATS = ("csv", "json")


class ConfigError(ValueError):
    """Validation failure; the message starts with the offending key path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


@dataclass(frozen=True)
class OutputConfig:
    path: str = "results"
    stem: str = "blockage"
    formats: tuple[str, ...] = ("csv",)
    svg: bool = False


@dataclass(frozen=True)
class RunConfig:
    scene: Scene
    allocations: tuple[Allocation, ...]
    sweep: SweepSpec
    scenario: Optional[str] = None
    output: OutputConfig = OutputConfig()


def _object(value, path) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(path, "expected an object")
    return value


def _reject_unknown(obj: dict, allowed, path):
    for key in obj:
        if key not in allowed:
            raise ConfigError(f"{path}.{key}" if path else key, "unknown key")


def _number(value, path) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(path, "expected a number")
    return float(value)


def _parse_scene(raw, path="scene") -> Scene:
    raw = _object(raw, path)
    _reject_unknown(raw, ("room", "cf_height", "spacing", "aps"), path)
    room_raw = _object(raw.get("room", {}), f"{path}.room")
    _reject_unknown(room_raw, ("width_x", "length_y", "height_z"), f"{path}.room")
    dims = {k: _number(v, f"{path}.room.{k}") for k, v in room_raw.items()}
    try:
        room = Room(**dims)
    except ValueError as exc:
        raise ConfigError(f"{path}.room", str(exc)) from None

    cf = _number(raw.get("cf_height", 1.0), f"{path}.cf_height")
    spacing = _number(raw.get("spacing", 0.25), f"{path}.spacing")
    aps = raw.get("aps", [list(p) for p in DEFAULT_AP_POSITIONS])
    if not isinstance(aps, list) or not aps:
        raise ConfigError(f"{path}.aps", "expected a non-empty list of [x, y, z]")
    positions = []
    for i, p in enumerate(aps):
        if not isinstance(p, list) or len(p) != 3:
            raise ConfigError(f"{path}.aps[{i}]", "expected [x, y, z]")
        positions.append(tuple(_number(c, f"{path}.aps[{i}]") for c in p))

    try:
        return build_scene(room, cf, spacing, positions)
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from None


def _parse_allocations(raw, scene: Scene, path="allocations") -> tuple[Allocation, ...]:
    if raw is None or raw == []:
        raise ConfigError(path, "no allocations specified")
    if not isinstance(raw, list):
        raise ConfigError(path, "expected a list")
    allocs = []
    for i, item in enumerate(raw):
        here = f"{path}[{i}]"
        try:
            if isinstance(item, str):
                if not is_preset_name(item):
                    raise ConfigError(here, f"unknown preset {item!r}")
                allocs.append(resolve_preset(item, scene.aps))
            else:
                obj = _object(item, here)
                _reject_unknown(obj, ("label", "aps"), here)
                if not isinstance(obj.get("label"), str) or not obj["label"]:
                    raise ConfigError(f"{here}.label", "expected a non-empty string")
                indices = obj.get("aps")
                if not isinstance(indices, list):
                    raise ConfigError(f"{here}.aps", "expected a list of AP indices")
                alloc = Allocation(obj["label"], tuple(indices))
                alloc.check(scene.aps)
                allocs.append(alloc)
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(here, str(exc)) from None
    labels = [a.label for a in allocs]
    if len(set(labels)) != len(labels):
        raise ConfigError(path, "allocation labels must be unique")
    return tuple(allocs)


def _parse_sweep(raw, path="sweep") -> tuple[SweepSpec, Optional[str]]:
    if raw is None:
        raise ConfigError(path, "no sweep specified")
    raw = _object(raw, path)
    if "scenario" in raw:
        _reject_unknown(raw, ("scenario",), path)
        name = raw["scenario"]
        try:
            return get_scenario(name).sweep, name
        except ValueError as exc:
            raise ConfigError(f"{path}.scenario", str(exc)) from None

    _reject_unknown(raw, ("vary", "start", "stop", "step", "fixed"), path)
    for key in ("vary", "start", "stop", "step"):
        if key not in raw:
            raise ConfigError(f"{path}.{key}", "required")
    vary = raw["vary"]
    if vary not in PARAMETERS:
        raise ConfigError(f"{path}.vary", f"must be one of {', '.join(PARAMETERS)}")
    nums = {k: _number(raw[k], f"{path}.{k}") for k in ("start", "stop", "step")}
    if nums["step"] <= 0:
        raise ConfigError(f"{path}.step", "step must be > 0")
    if nums["start"] < 0:
        raise ConfigError(f"{path}.start", "start must be >= 0")
    if nums["stop"] < nums["start"]:
        raise ConfigError(f"{path}.stop", "stop < start")

    others = [p for p in PARAMETERS if p != vary]
    fixed_raw = _object(raw.get("fixed", {}), f"{path}.fixed")
    _reject_unknown(fixed_raw, others, f"{path}.fixed")
    fixed = {}
    for k in others:
        value = _number(fixed_raw.get(k, 0.0), f"{path}.fixed.{k}")
        if value < 0:
            raise ConfigError(f"{path}.fixed.{k}", f"{k} must be >= 0")
        fixed[k] = value
    try:
        return SweepSpec(vary, fixed=fixed, **nums), None
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from None


def _parse_output(raw, path="output") -> OutputConfig:
    raw = _object(raw, path)
    _reject_unknown(raw, ("path", "stem", "formats", "svg"), path)
    out = OutputConfig()
    target = raw.get("path", out.path)
    stem = raw.get("stem", out.stem)
    for key, value in (("path", target), ("stem", stem)):
        if not isinstance(value, str) or not value:
            raise ConfigError(f"{path}.{key}", "expected a non-empty string")
    formats = raw.get("formats", list(out.formats))
    if not isinstance(formats, list) or any(f not in FORMATS for f in formats):
        raise ConfigError(f"{path}.formats", f"expected a list drawn from {list(FORMATS)}")
    # CSV is always written
    formats = tuple(f for f in FORMATS if f in formats or f == "csv")
    svg = raw.get("svg", out.svg)
    if not isinstance(svg, bool):
        raise ConfigError(f"{path}.svg", "expected true or false")
    return OutputConfig(target, stem, formats, svg)


def config_from_dict(raw: Any) -> RunConfig:
    raw = _object(raw, "")
    _reject_unknown(raw, ("scene", "allocations", "sweep", "output"), "")
    scene = _parse_scene(raw.get("scene", {}))
    allocations = _parse_allocations(raw.get("allocations"), scene)
    sweep, scenario = _parse_sweep(raw.get("sweep"))
    output = _parse_output(raw.get("output", {}))
    return RunConfig(scene, allocations, sweep, scenario, output)


def parse_config(text: str) -> RunConfig:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("", f"malformed JSON: {exc}") from None
    return config_from_dict(raw)


def config_to_dict(cfg: RunConfig) -> dict:
    scene = cfg.scene
    if cfg.scenario is not None:
        sweep = {"scenario": cfg.scenario}
    else:
        sweep = {
            "vary": cfg.sweep.vary,
            "start": cfg.sweep.start,
            "stop": cfg.sweep.stop,
            "step": cfg.sweep.step,
            "fixed": dict(cfg.sweep.fixed),
        }
    return {
        "scene": {
            "room": {
                "width_x": scene.room.width_x,
                "length_y": scene.room.length_y,
                "height_z": scene.room.height_z,
            },
            "cf_height": scene.grid.cf_height,
            "spacing": scene.grid.spacing,
            "aps": [list(ap.position) for ap in scene.aps],
        },
        "allocations": [{"label": a.label, "aps": list(a.ap_indices)} for a in cfg.allocations],
        "sweep": sweep,
        "output": {
            "path": cfg.output.path,
            "stem": cfg.output.stem,
            "formats": list(cfg.output.formats),
            "svg": cfg.output.svg,
        },
    }


def serialize_config(cfg: RunConfig) -> str:
    return json.dumps(config_to_dict(cfg), indent=2)
