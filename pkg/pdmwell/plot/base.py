"""Base plotting helpers.

A thin `BasePlotter` class centralises colour handling, layout defaults and
figure export. Figures are built with matplotlib's object API so no global
pyplot state is touched, and exports are byte-deterministic.
"""
from __future__ import annotations

import io
from typing import Dict, List, Optional

import matplotlib
from matplotlib.figure import Figure
from matplotlib.ticker import LinearLocator

import config

__all__ = [
    "BasePlotter",
]

# rcParams pinned while saving
_EXPORT_RC = {
    "path.simplify": False,
    "svg.hashsalt": "pdmwell",
    "svg.fonttype": "none",
}


class BasePlotter:  # pylint: disable=too-few-public-methods
    """Common utilities for all plot builders."""

    COLOR_PALETTES = config.COLOR_PALETTES

    def __init__(self, default_cfg: Optional[Dict] = None):
        self.default_config: Dict = {
            **config.DEFAULT_PLOT_CONFIG,
            **(default_cfg or {}),
        }

    # ---------------------------------------------------------------------
    # Colour helpers
    # ---------------------------------------------------------------------
    @classmethod
    def _get_colors(cls, n_colors: int, palette_name: str = "Print") -> List[str]:
        """Return *n_colors* colours from the chosen palette, cycling if needed."""
        colors = cls.COLOR_PALETTES.get(palette_name, cls.COLOR_PALETTES["Professional"])
        return (colors * ((n_colors // len(colors)) + 1))[:n_colors]

    # ------------------------------------------------------------------
    # Figure-level helpers
    # ------------------------------------------------------------------
    def new_figure(self, cfg: Dict) -> Figure:
        """Blank figure of cfg['width'] x cfg['height'] pixels."""
        dpi = cfg.get("dpi", 100)
        fig = Figure(figsize=(cfg.get("width", 800) / dpi, cfg.get("height", 600) / dpi), dpi=dpi)
        fig.add_subplot(1, 1, 1)
        return fig

    @staticmethod
    def _apply_layout(fig: Figure, cfg: Dict, x_label: str, y_columns: List[str]):
        """Apply titles, tick locators and grid to the single axes of *fig*."""
        ax = fig.axes[0]
        ax.set_title(cfg.get("title", f"{', '.join(y_columns)} vs {x_label}"), fontsize=cfg.get("font_size", 12))
        ax.set_xlabel(cfg.get("x_title", x_label), fontsize=cfg.get("font_size", 12))
        ax.set_ylabel(cfg.get("y_title", ", ".join(y_columns)), fontsize=cfg.get("font_size", 12))

        if cfg.get("x_range") is not None:
            ax.set_xlim(*cfg["x_range"])
        if cfg.get("y_range") is not None:
            ax.set_ylim(*cfg["y_range"])
        ticks = cfg.get("ticks", 5)
        ax.xaxis.set_major_locator(LinearLocator(ticks))
        ax.yaxis.set_major_locator(LinearLocator(ticks))
        if cfg.get("show_grid", True):
            ax.grid(True, color="lightgray", linewidth=0.5)
        if len(y_columns) > 1 and cfg.get("show_legend", True):
            ax.legend(loc=cfg.get("legend_loc", "best"), fontsize=cfg.get("font_size", 12) - 2)

    # ------------------------------------------------------------------
    # Export helpers
    # ------------------------------------------------------------------
    @staticmethod
    def export_plot(fig: Figure, format_: str = "svg") -> bytes:
        """Return the raw bytes for *fig* in the requested format."""
        format_ = format_.lower()
        if format_ not in {"svg", "png", "pdf"}:
            raise ValueError(f"Unsupported export format: {format_}")
        buffer = io.BytesIO()
        metadata = {"Date": None} if format_ in {"svg", "pdf"} else None
        with matplotlib.rc_context(_EXPORT_RC):
            fig.savefig(buffer, format=format_, metadata=metadata)
        return buffer.getvalue()
