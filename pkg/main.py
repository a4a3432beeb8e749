"""PDM quantum well - command-line launcher

Run from the repository root (``python main.py spectrum``) so that both
``pdmwell`` and ``config`` import. All functionality lives in pdmwell/ and
the tunable constants live in config.py.
"""

from __future__ import annotations

import sys

from pdmwell.cli import main

if __name__ == "__main__":
    sys.exit(main())
