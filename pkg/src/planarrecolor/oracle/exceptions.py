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

from planarrecolor.exceptions import RecolorError


class OracleError(RecolorError):
    pass


class OracleBudgetError(OracleError):
    def __init__(self, product: int, cap: int):
        self.product = product
        self.cap = cap
        super().__init__(f"product of list sizes {product} exceeds the node budget {cap}")


class NotAColoringError(OracleError):
    pass
