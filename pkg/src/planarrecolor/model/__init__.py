#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

"""Contains the graph-core types : plane graphs, list assignments, colorings, sequences and their validation.
"""

from .plane import PlaneGraph, RotationEditor, build_plane_graph, triangulate, plane_graph_from_faces
from .coloring import ListAssignment, Coloring, RecolorStep, RecolorSequence
from .validation import ValidationReport, validate_sequence, is_k_good

__all__ = [
    "PlaneGraph",
    "RotationEditor",
    "build_plane_graph",
    "triangulate",
    "plane_graph_from_faces",
    "ListAssignment",
    "Coloring",
    "RecolorStep",
    "RecolorSequence",
    "ValidationReport",
    "validate_sequence",
    "is_k_good",
]
