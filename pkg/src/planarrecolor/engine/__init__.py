#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

from .exceptions import (
    ExtensionError,
    ListTooSmallError,
    DegeneracyError,
    FinishingError,
    PlanError,
    NotKGoodError,
    TheoremViolation,
)
from .trace import DeferralEvent, ExtensionTrace
from .finishing import finishing_order, finish_subgraph
from .extension import StageRunner, extend_single_vertex, extend_degenerate, degeneracy
from .deferral import DeferArc, Stage, DeferralPlan, check_plan, extend_with_deferral
from .planar import recolor_planar

__all__ = [
    "ExtensionError",
    "ListTooSmallError",
    "DegeneracyError",
    "FinishingError",
    "PlanError",
    "NotKGoodError",
    "TheoremViolation",
    "DeferralEvent",
    "ExtensionTrace",
    "finishing_order",
    "finish_subgraph",
    "StageRunner",
    "extend_single_vertex",
    "extend_degenerate",
    "degeneracy",
    "DeferArc",
    "Stage",
    "DeferralPlan",
    "check_plan",
    "extend_with_deferral",
    "recolor_planar",
]
