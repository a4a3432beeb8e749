import xml.etree.ElementTree as ET

import numpy as np
import pandas as pd
import pytest

from pdmwell.plot import BasePlotter, create_plot

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture
def curves():
    x = np.linspace(0.0, 1.0, 50)
    return pd.DataFrame({"x": x, "psi0": np.sin(np.pi * x), "psi1": np.sin(2 * np.pi * x)})


def _curve_path(svg: bytes, index: int) -> str:
    root = ET.fromstring(svg)
    group = next(el for el in root.iter() if el.get("id") == f"curve-{index}")
    return next(group.iter(f"{SVG}path")).get("d")


def test_palette_cycles():
    assert BasePlotter._get_colors(2) == ["black", "red"]
    assert len(BasePlotter._get_colors(8)) == 8
    assert BasePlotter._get_colors(1, "missing") == ["#1f77b4"]


def test_unknown_plot_type(curves):
    with pytest.raises(ValueError):
        create_plot("heatmap", curves, "x", ["psi0"])


def test_line_chart_svg(curves):
    fig = create_plot("line", curves, "x", ["psi0", "psi1"])
    assert [line.get_color() for line in fig.axes[0].get_lines()] == ["black", "red"]
    svg = BasePlotter.export_plot(fig, "svg")
    assert ET.fromstring(svg).tag == f"{SVG}svg"
    for i in range(2):
        path = _curve_path(svg, i)
        assert path.count("L") + 1 == len(curves)


def test_svg_export_is_deterministic(curves):
    first = BasePlotter.export_plot(create_plot("line", curves, "x", ["psi0"]), "svg")
    second = BasePlotter.export_plot(create_plot("line", curves, "x", ["psi0"]), "svg")
    assert first == second


def test_export_rejects_unknown_format(curves):
    fig = create_plot("line", curves, "x", ["psi0"])
    with pytest.raises(ValueError):
        BasePlotter.export_plot(fig, "gif")
