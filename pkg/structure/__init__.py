# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from .ap import APWitness, ap_witness  # noqa: F401
from .extremal import Extremal, ExtremalKind, build_extremal  # noqa: F401
from .inverse import ClaimKind, InverseReport, claim_bound, inverse_verdict, resolve_claim  # noqa: F401
