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

from typing import Optional

from planarrecolor.exceptions import RecolorError


class CliError(RecolorError):
    pass


class GenerationError(CliError):
    """The generator could not build the requested instance; best is the best minimum degree it can offer."""

    def __init__(self, msg: str, best: Optional[int] = None):
        self.best = best
        super().__init__(msg if best is None else f"{msg} (best minimum degree {best})")
