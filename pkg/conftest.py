"""Shared pytest fixtures; the repository root is put on sys.path so that
``import config`` resolves the same way it does for main.py."""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from pdmwell.model import WellParams  # noqa: E402


@pytest.fixture
def default_params() -> WellParams:
    """omega = a = 1, b = 3."""
    return WellParams(1.0, 1.0, 3.0)


@pytest.fixture
def alt_params() -> WellParams:
    """omega = 2, a = 1/2, b = 2; only base and X1 are admissible."""
    return WellParams(2.0, 0.5, 2.0)
