"""
Output handling for the pdmwell command line.
Renders tables, reports and figures in CSV, JSON, SVG or text and writes
them to a file or to standard output.
"""

import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Tuple, Union

import pandas as pd
from matplotlib.figure import Figure

import config
from .plot import BasePlotter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OutputSpec:
    """Where and how a command writes its result."""

    format: str = "text"
    path: Optional[str] = None
    samples: int = config.DEFAULT_SAMPLES

    @property
    def to_stdout(self) -> bool:
        return self.path in (None, "-")


class OutputWriter:
    """Validates output requests and serialises results."""

    SUPPORTED_FORMATS = config.SUPPORTED_FORMATS
    CURVE_ONLY_FORMATS = config.CURVE_ONLY_FORMATS

    def validate_format(self, spec: OutputSpec, produces_curves: bool) -> Tuple[bool, str]:
        """
        Check an output request before any computation runs.

        Args:
            spec: requested output
            produces_curves: whether the command emits sampled curves

        Returns:
            Tuple of (is_valid, error_message)
        """
        if spec.format not in self.SUPPORTED_FORMATS:
            supported = ", ".join(self.SUPPORTED_FORMATS.keys())
            return False, f"Unsupported output format. Supported formats: {supported}"
        if spec.format in self.CURVE_ONLY_FORMATS and not produces_curves:
            return False, f"Format '{spec.format}' is only available for curve-producing commands"
        if spec.samples < 2:
            return False, f"At least 2 samples are required, got {spec.samples}"
        return True, ""

    def render(self, payload: Any, fmt: str) -> Union[str, bytes]:
        """Serialise *payload* (DataFrame, dict or Figure) in *fmt*."""
        if fmt == "csv":
            return self._render_csv(payload)
        elif fmt == "json":
            return self._render_json(payload)
        elif fmt == "svg":
            return self._render_svg(payload)
        elif fmt == "text":
            return self._render_text(payload)
        raise ValueError(f"Unsupported output format: {fmt}")

    def _render_csv(self, df: pd.DataFrame) -> str:
        """RFC-4180 style, header row, LF endings."""
        return df.to_csv(index=False, float_format=config.FLOAT_FORMAT, lineterminator="\n")

    def _render_json(self, data: Any) -> str:
        if isinstance(data, pd.DataFrame):
            data = data.to_dict(orient="records")
        return json.dumps(data, indent=2, allow_nan=False) + "\n"

    def _render_svg(self, fig: Figure) -> bytes:
        return BasePlotter.export_plot(fig, "svg")

    def _render_text(self, data: Any) -> str:
        if isinstance(data, pd.DataFrame):
            return data.to_string(index=False) + "\n"
        return str(data) + "\n"

    def write(self, payload: Any, spec: OutputSpec) -> Tuple[bool, str]:
        """
        Render and write *payload* according to *spec*.

        Returns:
            Tuple of (success, error_message)
        """
        content = self.render(payload, spec.format)
        data = content.encode("utf-8") if isinstance(content, str) else content
        try:
            if spec.to_stdout:
                sys.stdout.flush()
                sys.stdout.buffer.write(data)
                sys.stdout.buffer.flush()
            else:
                Path(spec.path).write_bytes(data)
                logger.info("Wrote %d bytes of %s to %s", len(data), spec.format, spec.path)
        except OSError as e:
            return False, f"Error writing output: {str(e)}"
        return True, ""
