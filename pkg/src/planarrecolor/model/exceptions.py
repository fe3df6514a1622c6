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

from typing import Optional, Sequence, Tuple

from planarrecolor.exceptions import RecolorError


class GraphError(RecolorError):
    pass


class AsymmetricRotationError(GraphError):
    def __init__(self, dart: Tuple[int, int]):
        self.dart = dart
        u, v = dart
        super().__init__(f"asymmetric rotation: {u} lists {v} but {v} does not list {u}")


class SimplicityError(GraphError):
    def __init__(self, vertex: int, neighbor: int, kind: str):
        self.vertex = vertex
        self.neighbor = neighbor
        self.kind = kind
        super().__init__(f"{kind} at vertex {vertex} (neighbor {neighbor})")


class EmbeddingError(GraphError):
    def __init__(self, dart: Tuple[int, int], euler: int):
        self.dart = dart
        self.euler = euler
        super().__init__(f"face structure is not spherical around dart {dart} (V-E+F = {euler})")


class TriangulationError(GraphError):
    def __init__(self, msg: str, walk: Optional[Sequence[int]] = None):
        self.walk = tuple(walk) if walk is not None else None
        super().__init__(msg if walk is None else f"{msg}: face walk {list(walk)}")


class NotTriangulationError(GraphError):
    pass


class ColoringError(RecolorError):
    pass


class ListAssignmentError(ColoringError):
    pass


class ImproperColoringError(ColoringError):
    pass


class InvalidSequenceError(ColoringError):
    def __init__(self, step: Optional[int], reason: str):
        self.step = step
        self.reason = reason
        where = "start coloring" if step is None else f"step {step}"
        super().__init__(f"invalid sequence at {where}: {reason}")


class FormatError(RecolorError):
    pass
