# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

"""Run the sumset tools from the repository root, e.g.

    python scripts/sumsets.py bound --k 5 --r 2 --H 2,3
    python scripts/sumsets.py verify --config main_grid --workers 4
"""

import os
import sys

# make the top-level packages importable without installation
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
