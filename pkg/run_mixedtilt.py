#!/usr/bin/env python3
"""
Mixed Tilt Toolkit - Main Entry Point

Runs one toolkit command and prints its JSON result. Settings come from
mixedtilt_config.yaml next to this script unless --config names another file.

Examples:
    python run_mixedtilt.py chi --geometry pe_g0_e0.json --class oh.json
    python run_mixedtilt.py wall solve --geometry g.json --class v.json --other w.json --beta -1/2 --t 0
    python run_mixedtilt.py pbundle region --geometry g.json --alpha-sq 1/4 --beta -1/2 --t 3
"""

import sys
from pathlib import Path

# Add project root to path if needed
project_root = Path(__file__).parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from mixedtilt.cli import main

DEFAULT_CONFIG = project_root / "mixedtilt_config.yaml"


def with_default_config(argv):
    """Prepend --config for the bundled YAML when the caller gave none"""
    if any(a == '--config' or a == '-c' or a.startswith('--config=') for a in argv):
        return argv
    if DEFAULT_CONFIG.exists():
        return ['--config', str(DEFAULT_CONFIG)] + list(argv)
    return argv


if __name__ == "__main__":
    sys.exit(main(with_default_config(sys.argv[1:])))
