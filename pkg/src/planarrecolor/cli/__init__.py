#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

"""Contains the command line and the instance generators.
"""

from .exceptions import CliError, GenerationError
from .generate import InstanceBundle, gen_triangulation, gen_tree, gen_instance

__all__ = ["CliError", "GenerationError", "InstanceBundle", "gen_triangulation", "gen_tree", "gen_instance"]
