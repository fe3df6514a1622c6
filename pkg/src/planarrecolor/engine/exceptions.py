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


class ExtensionError(RecolorError):
    pass


class ListTooSmallError(ExtensionError):
    def __init__(self, vertex: int, size: int, needed: int):
        self.vertex = vertex
        self.size = size
        self.needed = needed
        super().__init__(f"list of vertex {vertex} has {size} colors, at least {needed} needed")


class DegeneracyError(ExtensionError):
    pass


class FinishingError(ExtensionError):
    def __init__(self, vertex: int, degree: int, later: int, size: int):
        self.vertex = vertex
        self.degree = degree
        self.later = later
        self.size = size
        super().__init__(
            f"cannot finish vertex {vertex}: degree {degree} + later neighbors {later} > list size {size} - 1"
        )


class PlanError(ExtensionError):
    pass


class NotKGoodError(ExtensionError):
    def __init__(self, vertex: int, count: int, k: int):
        self.vertex = vertex
        self.count = count
        self.k = k
        super().__init__(f"vertex {vertex} is recolored {count} times, more than k = {k}")


class TheoremViolation(ExtensionError):
    pass
