#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

"""Contains the brute-force reconfiguration oracle.
"""

from .reconfig import (
    ReconfigurationGraph,
    build_reconfiguration_graph,
    bfs_shortest_sequence,
    diameter,
    bounded_shortest_sequence,
)

__all__ = [
    "ReconfigurationGraph",
    "build_reconfiguration_graph",
    "bfs_shortest_sequence",
    "diameter",
    "bounded_shortest_sequence",
]
