#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

ENV_SEED = "RECOLOR_SEED"


def seed_from_env() -> Optional[int]:
    value = os.environ.get(ENV_SEED)
    return int(value) if value not in (None, "") else None


@dataclass
class Settings:
    """The default settings used by the recoloring procedures"""

    k: int = 416
    """The per-vertex recoloring budget every produced sequence must respect.
    Default is 416.
    """

    list_size: int = 10
    """The list size required by the planar routine and used by the instance generator."""

    peel_degree: int = 4
    """Vertices of degree at most this value are peeled by single-vertex extension."""

    oracle_cap: int = 20_000_000
    """Upper bound on the product of list sizes the brute-force oracle agrees to enumerate."""

    bounded_search_max_vertices: int = 4
    bounded_search_max_count: int = 3

    flip_budget_factor: int = 200
    """The generator gives up after flip_budget_factor * n flips."""

    greedy_retries: int = 32
    seed: Optional[int] = field(default_factory=seed_from_env)
    """Random seed, overridden by the RECOLOR_SEED environment variable."""


globalsettings: Settings = Settings()
