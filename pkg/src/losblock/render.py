"""CSV / JSON / SVG output for sweep results.

All writers are deterministic: identical results give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from xml.sax.saxutils import escape

from .sweep import SweepResult

UNITS = {"radius": "disc radius (m)", "height": "disc height above CF (m)", "distance": "disc +y offset (m)"}
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#17becf", "#bcbd22")


def to_csv(result: SweepResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["param", *result.allocation_labels])
    for row in result.rows:
        writer.writerow([f"{row.param:.6f}", *(f"{p:.4f}" for p in row.percentages)])
    return buf.getvalue()


def to_json(result: SweepResult) -> str:
    return json.dumps(result.to_dict(), indent=2) + "\n"


def _write(path, text: str) -> Path:
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return path


def write_csv(result: SweepResult, path) -> Path:
    return _write(path, to_csv(result))


def write_json(result: SweepResult, path) -> Path:
    return _write(path, to_json(result))


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def to_svg(result: SweepResult, width: int = 640, height: int = 400) -> str:
    """Line chart of percentage blockage against the swept parameter."""
    if not result.rows:
        raise ValueError("cannot render an empty sweep result")
    left, right, top, bottom = 64, 170, 24, 52
    pw, ph = width - left - right, height - top - bottom

    xs = [row.param for row in result.rows]
    x0, x1 = min(xs), max(xs)
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5

    def sx(v):
        return left + (v - x0) / (x1 - x0) * pw

    def sy(p):
        return top + (1 - p / 100) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    for tick in range(0, 101, 20):
        y = _fmt(sy(tick))
        out.append(f'<line x1="{left}" y1="{y}" x2="{left + pw}" y2="{y}" stroke="#e0e0e0"/>')
        out.append(f'<text x="{left - 6}" y="{y}" text-anchor="end" dominant-baseline="middle">{tick}</text>')
    for i in range(6):
        v = x0 + i * (x1 - x0) / 5
        x = _fmt(sx(v))
        out.append(f'<line x1="{x}" y1="{top + ph}" x2="{x}" y2="{top + ph + 4}" stroke="black"/>')
        out.append(f'<text x="{x}" y="{top + ph + 16}" text-anchor="middle">{v:.2f}</text>')
    out.append(
        f'<path d="M{left},{top} V{top + ph} H{left + pw}" fill="none" stroke="black"/>'
    )
    out.append(
        f'<text x="{left + pw / 2:.2f}" y="{height - 12}" text-anchor="middle">'
        f'{escape(UNITS.get(result.param_name, result.param_name))}</text>'
    )
    out.append(
        f'<text transform="translate(16,{top + ph / 2:.2f}) rotate(-90)" text-anchor="middle">'
        f"blockage (%)</text>"
    )

    for k, label in enumerate(result.allocation_labels):
        colour = PALETTE[k % len(PALETTE)]
        pts = [(sx(row.param), sy(row.percentages[k])) for row in result.rows]
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        out.append(
            f'<polyline class="series" data-label="{escape(label, {chr(34): "&quot;"})}" '
            f'points="{coords}" fill="none" stroke="{colour}" stroke-width="1.5"/>'
        )
        for x, y in pts:
            out.append(f'<circle class="marker" cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.5" fill="{colour}"/>')
        ly = top + 10 + 18 * k
        lx = left + pw + 14
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 18}" y2="{ly}" stroke="{colour}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 24}" y="{ly}" dominant-baseline="middle">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(result: SweepResult, path) -> Path:
    return _write(path, to_svg(result))
