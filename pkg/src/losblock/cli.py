"""Command-line front end.

    losblock run --config cfg.json [--out DIR] [--format csv,json] [--svg] [--workers N]
    losblock presets
    losblock grid --dump [--config cfg.json]

Exit status: 0 success, 1 configuration error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import sys
from pathlib import Path

from .allocation import default_presets, resolve_preset
from .config import FORMATS, ConfigError, RunConfig, parse_config
from .render import render_svg, write_csv, write_json
from .scene import build_default_scene
from .sweep import run_sweep, scenario_presets

EXIT_OK, EXIT_CONFIG, EXIT_IO = 0, 1, 2


def execute(cfg: RunConfig, workers: int | None = 1, stdout=None) -> int:
    stdout = stdout or sys.stdout
    result = run_sweep(cfg.scene, cfg.allocations, cfg.sweep, workers=workers)
    out_dir = Path(cfg.output.path)
    stem = cfg.output.stem
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        written = [write_csv(result, out_dir / f"{stem}.csv")]
        if "json" in cfg.output.formats:
            written.append(write_json(result, out_dir / f"{stem}.json"))
        if cfg.output.svg:
            written.append(render_svg(result, out_dir / f"{stem}.svg"))
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO

    for label in result.allocation_labels:
        col = result.column(label)
        print(f"{label}: min {min(col):.4f}% max {max(col):.4f}%", file=stdout)
    for path in written:
        print(f"wrote {path}", file=stdout)
    return EXIT_OK


def _load(path: str) -> RunConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def _cmd_run(args) -> int:
    try:
        cfg = _load(args.config)
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_IO
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    output = cfg.output
    if args.out:
        output = dataclasses.replace(output, path=args.out)
    if args.format:
        formats = [f.strip() for f in args.format.split(",") if f.strip()]
        bad = [f for f in formats if f not in FORMATS]
        if bad:
            print(f"error: --format: unknown format {bad[0]!r}", file=sys.stderr)
            return EXIT_CONFIG
        output = dataclasses.replace(
            output, formats=tuple(f for f in FORMATS if f in formats or f == "csv")
        )
    if args.svg:
        output = dataclasses.replace(output, svg=True)
    return execute(dataclasses.replace(cfg, output=output), workers=args.workers)


def _cmd_presets(args) -> int:
    layout = build_default_scene().aps
    print("scenario presets:")
    for p in scenario_presets():
        sw = p.sweep
        fixed = ", ".join(f"{k}={v:g}" for k, v in sw.fixed.items())
        print(f"  {p.name}: vary {sw.vary} {sw.start:g}..{sw.stop:g} step {sw.step:g}; {fixed}")
    print("allocation presets (default layout):")
    for name in default_presets():
        alloc = resolve_preset(name, layout)
        print(f"  {name}: {list(alloc.ap_indices)}")
    return EXIT_OK


def _cmd_grid(args) -> int:
    if not args.dump:
        print("error: grid: nothing to do (pass --dump)", file=sys.stderr)
        return EXIT_CONFIG
    scene = build_default_scene()
    if args.config:
        try:
            scene = _load(args.config).scene
        except OSError as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return EXIT_IO
        except ConfigError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["x", "y", "z"])
    for p in scene.grid:
        writer.writerow([f"{p.x:.6f}", f"{p.y:.6f}", f"{p.z:.6f}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="losblock", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a sweep from a JSON config")
    run.add_argument("--config", required=True)
    run.add_argument("--out", help="output directory (overrides output.path)")
    run.add_argument("--format", help="comma-separated subset of csv,json")
    run.add_argument("--svg", action="store_true", help="also render an SVG chart")
    run.add_argument("--workers", type=int, default=1, help="worker processes (1 = sequential)")
    run.set_defaults(func=_cmd_run)

    presets = sub.add_parser("presets", help="list scenario and allocation presets")
    presets.set_defaults(func=_cmd_presets)

    grid = sub.add_parser("grid", help="receiver grid utilities")
    grid.add_argument("--dump", action="store_true", help="write receiver coordinates as CSV")
    grid.add_argument("--config", help="take the scene from this config")
    grid.set_defaults(func=_cmd_grid)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
