# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from . import configs
from .campaign import run_campaign  # noqa: F401
from .checks import InstanceRecord, Verdict, check_direct, check_instance, check_inverse, replay  # noqa: F401
from .config import GridConfig, load_grid_config, register_campaign, registered_campaigns  # noqa: F401
from .grid import Instance, enumerate_instances, projected_count  # noqa: F401
from .report import ClaimTally, VerifyReport, parse_report, render_report  # noqa: F401

register_campaign(id="main_grid", cfg_entry_point=f"{configs.__name__}:main_grid.yaml")
register_campaign(id="high_grid", cfg_entry_point=f"{configs.__name__}:high_grid.yaml")
register_campaign(id="zero_main_grid", cfg_entry_point=f"{configs.__name__}:zero_main_grid.yaml")
register_campaign(id="zero_high_grid", cfg_entry_point=f"{configs.__name__}:zero_high_grid.yaml")
register_campaign(id="inverse_main_grid", cfg_entry_point=f"{configs.__name__}:inverse_main_grid.yaml")
register_campaign(id="restricted_grid", cfg_entry_point=f"{configs.__name__}:restricted_grid.yaml")
