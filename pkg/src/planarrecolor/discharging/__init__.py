#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

"""Contains the discharging rules and the happiness audit.
"""

from .exceptions import DischargingError, StageError, MinDegreeError
from .charges import (
    ChargeState,
    RULES,
    face_thirds,
    rule_of,
    rule_transfer,
    initial_charges,
    apply_rule,
    apply_rules,
    charge_history,
)
from .audit import AuditReport, audit

__all__ = [
    "DischargingError",
    "StageError",
    "MinDegreeError",
    "ChargeState",
    "RULES",
    "face_thirds",
    "rule_of",
    "rule_transfer",
    "initial_charges",
    "apply_rule",
    "apply_rules",
    "charge_history",
    "AuditReport",
    "audit",
]
