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

import json
from pathlib import Path
from typing import Dict, List, Mapping, Tuple

from planarrecolor.model.coloring import Coloring, ListAssignment
from planarrecolor.model.io import GraphDocument, parse_graph_document
from planarrecolor.model.plane import PlaneGraph, build_plane_graph

DATA_DIR = Path(__file__).parent / "data"


def data_file(basename: str) -> Path:
    return DATA_DIR / f"{basename}.json"


def expected_dict(basename: str) -> dict:
    with open(data_file(basename), "r") as fp:
        return json.load(fp)


def sample_document(basename: str) -> GraphDocument:
    return parse_graph_document(data_file(basename))


triangle: PlaneGraph = build_plane_graph({0: [1, 2], 1: [2, 0], 2: [0, 1]})
two_triangles: PlaneGraph = build_plane_graph([[1, 2], [2, 0], [0, 1], [4, 5], [5, 3], [3, 4]])
edge: PlaneGraph = build_plane_graph([[1], [0]])
square: PlaneGraph = build_plane_graph([[1, 3], [2, 0], [3, 1], [0, 2]])


def ten_lists(n: int) -> ListAssignment:
    return ListAssignment.uniform(n, range(10))


def coloring(*colors: int) -> Coloring:
    return Coloring(tuple(colors))


def with_leaves(core: Dict[str, List[str]], degrees: Mapping[str, int]) -> Tuple[PlaneGraph, Dict[str, int]]:
    """Numbers the core vertices in order, then hangs pendant vertices until each has its degree.

    core gives the clockwise neighbors of a plane drawing.
    """
    ids = {v: i for i, v in enumerate(core)}
    rotation = [[ids[u] for u in core[v]] for v in core]
    for v in core:
        for _ in range(degrees[v] - len(core[v])):
            rotation[ids[v]].append(len(rotation))
            rotation.append([ids[v]])
    return build_plane_graph(rotation), ids
