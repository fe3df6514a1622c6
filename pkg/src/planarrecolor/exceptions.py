#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

"""
This module defines the RecolorError Exception that will be used as a base for all planarrecolor exceptions.
"""


class RecolorError(Exception):
    """The RecolorError base exception."""

    pass
