import re
import xml.etree.ElementTree as ET

import pytest

from losblock.blockage import PercentBlockage
from losblock.render import render_svg, to_csv, to_svg
from losblock.sweep import SweepResult, SweepRow

NS = {"svg": "http://www.w3.org/2000/svg"}


def result(n_rows, labels):
    rows = tuple(
        SweepRow(0.05 * i, tuple(PercentBlockage((i * 7 + k * 31) % 513, 512) for k in range(len(labels))))
        for i in range(n_rows)
    )
    return SweepResult("radius", tuple(labels), rows)


def test_single_row_one_marker_per_series():
    root = ET.fromstring(to_svg(result(1, ["a", "b"])))
    assert len(root.findall(".//svg:circle[@class='marker']", NS)) == 2


def test_polylines_structure():
    root = ET.fromstring(to_svg(result(21, ["a", "b", "c"])))
    lines = root.findall(".//svg:polyline", NS)
    assert len(lines) == 3
    for line in lines:
        assert len(line.get("points").split()) == 21
    assert [l.get("data-label") for l in lines] == ["a", "b", "c"]


def test_svg_deterministic(tmp_path):
    r = result(5, ["single(1)", "all"])
    render_svg(r, tmp_path / "x.svg")
    render_svg(r, tmp_path / "y.svg")
    assert (tmp_path / "x.svg").read_bytes() == (tmp_path / "y.svg").read_bytes()


def test_svg_y_axis_maps_percentages():
    r = SweepResult("height", ("a",), (SweepRow(0.0, (PercentBlockage(512, 512),)), SweepRow(1.0, (PercentBlockage(0, 512),))))
    root = ET.fromstring(to_svg(r))
    pts = root.find(".//svg:polyline", NS).get("points").split()
    (x0, y0), (x1, y1) = [tuple(map(float, p.split(","))) for p in pts]
    assert y0 < y1 and x0 < x1


def test_label_escaping():
    svg = to_svg(result(2, ['a<b', 'q"x']))
    ET.fromstring(svg)
    assert "a&lt;b" in svg


def test_empty_result_rejected():
    with pytest.raises(ValueError):
        to_svg(SweepResult("radius", ("a",), ()))


def test_csv_format():
    text = to_csv(result(2, ["x,y", "all"]))
    lines = text.split("\n")
    assert lines[0] == 'param,"x,y",all'
    assert re.fullmatch(r"\d+\.\d{6},\d+\.\d{4},\d+\.\d{4}", lines[1])
    assert "\r" not in text and text.endswith("\n")
