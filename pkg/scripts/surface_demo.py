#!/usr/bin/env python3
"""Run the full surface pipeline on a model description file.

Usage: python scripts/surface_demo.py [path/to/model.spec]
Defaults to scripts/sample_surface.spec.
"""

import pathlib
import sys

from finmot.cli import main as cli_main

DEFAULT = pathlib.Path(__file__).parent / "sample_surface.spec"


if __name__ == "__main__":
    path = sys.argv[1] if len(sys.argv) > 1 else str(DEFAULT)
    sys.exit(cli_main(["surface", path]))
