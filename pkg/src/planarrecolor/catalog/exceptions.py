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

from fractions import Fraction
from typing import Hashable, Optional

from planarrecolor.exceptions import RecolorError


class CatalogError(RecolorError):
    pass


class CertificateError(CatalogError):
    def __init__(self, msg: str, node: Optional[Hashable] = None, bound: Optional[Fraction] = None, k: int = None):
        self.node = node
        self.bound = bound
        self.k = k
        super().__init__(msg)


class StarCheckError(CertificateError):
    pass


class PruningError(CatalogError):
    pass
