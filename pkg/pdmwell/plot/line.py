"""Line-chart builder."""
from __future__ import annotations

from typing import Dict, List, Optional

import pandas as pd
from matplotlib.figure import Figure

from .base import BasePlotter

__all__ = ["create_line_chart"]


def create_line_chart(
    df: pd.DataFrame,
    x_column: str,
    y_columns: List[str],
    config: Optional[Dict] = None,
) -> Figure:
    """Return a Figure with one polyline per column of *y_columns*.

    Line i carries the SVG id ``curve-i`` so exported files can be inspected.
    """
    bp = BasePlotter()
    cfg = {**bp.default_config, **(config or {})}

    fig = bp.new_figure(cfg)
    ax = fig.axes[0]
    colors = bp._get_colors(len(y_columns), cfg.get("palette", "Print"))  # noqa: SLF001

    for i, col in enumerate(y_columns):
        (line,) = ax.plot(
            df[x_column].to_numpy(),
            df[col].to_numpy(),
            color=colors[i],
            linewidth=cfg.get("line_width", 1.5),
            label=col,
        )
        line.set_gid(f"curve-{i}")

    bp._apply_layout(fig, cfg, x_column, y_columns)  # noqa: SLF001
    return fig
