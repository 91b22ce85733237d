"""Run every scenario preset for the four allocation families (one AP,
two APs, four APs, all eight) and write CSV + SVG per combination.

    python scripts/reproduce_figures.py [--out results/figures] [--workers 4]
"""

import argparse
from pathlib import Path

from losblock.allocation import resolve_preset
from losblock.render import render_svg, write_csv
from losblock.scene import build_default_scene
from losblock.sweep import run_sweep, scenario_presets

FAMILIES = {
    "single": [f"single({i})" for i in range(1, 9)],
    "pairs": ["adjacent_pair", "max_separated_pair", "middle_plus_corner"],
    "quads": ["quad_one_side", "quad_centre", "quad_centre_corner"],
    "all": ["all"],
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="results/figures")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    scene = build_default_scene()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for scenario in scenario_presets():
        for family, names in FAMILIES.items():
            allocs = [resolve_preset(n, scene.aps) for n in names]
            result = run_sweep(scene, allocs, scenario.sweep, workers=args.workers)
            stem = out / f"{scenario.name}__{family}"
            write_csv(result, stem.with_suffix(".csv"))
            render_svg(result, stem.with_suffix(".svg"))
            worst = max(max(r.percentages) for r in result.rows)
            print(f"{scenario.name:24s} {family:7s} max blockage {worst:8.4f}%")


if __name__ == "__main__":
    main()
