# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from .main import build_parser, format_set, main, main_entry  # noqa: F401
