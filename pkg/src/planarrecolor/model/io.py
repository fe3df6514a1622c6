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
This module contains the file formats : graph documents, sequence documents and deterministic JSON output.

A graph document holds `n`, `rotation` and optionally `lists`, `alpha` and `beta`.
A sequence document holds a `start` coloring and `steps` as [vertex, color] pairs.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from json import JSONEncoder
from pathlib import Path
from typing import Dict, Optional

from multipledispatch import dispatch

from planarrecolor.model.coloring import Coloring, ListAssignment, RecolorSequence, RecolorStep
from planarrecolor.model.exceptions import FormatError
from planarrecolor.model.plane import PlaneGraph, build_plane_graph

logger = logging.getLogger(__name__)

namespace: dict = dict()
COLORING_NAMES = ("alpha", "beta")


class RecolorEncoder(JSONEncoder):
    def default(self, o):
        if isinstance(o, (PlaneGraph, GraphDocument)):
            return o.to_dict()
        if isinstance(o, (ListAssignment, Coloring)):
            return o.to_list()
        if isinstance(o, RecolorSequence):
            return sequence_to_dict(o)
        if isinstance(o, RecolorStep):
            return [o.vertex, o.new_color]
        if isinstance(o, Fraction):
            return f"{o.numerator}/{o.denominator}" if o.denominator != 1 else str(o.numerator)
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        if hasattr(o, "to_dict"):
            return o.to_dict()
        return JSONEncoder.default(self, o)


def dumps(obj) -> str:
    """Byte-deterministic JSON : sorted keys, compact separators, trailing newline."""
    return json.dumps(obj, cls=RecolorEncoder, sort_keys=True, separators=(",", ":")) + "\n"


def save(obj, filename) -> None:
    with open(filename, "w") as fp:
        fp.write(dumps(obj))


@dispatch(dict, namespace=namespace)
def load_document(payload: dict) -> dict:
    return payload


@dispatch(str, namespace=namespace)
def load_document(filename: str) -> dict:  # noqa F811
    try:
        with open(filename, "r") as fp:
            payload = json.load(fp)
    except json.JSONDecodeError as e:
        raise FormatError(f"{filename} is not valid JSON: {e}") from e
    if not isinstance(payload, dict):
        raise FormatError(f"{filename} must hold a JSON object")
    return payload


@dispatch(Path, namespace=namespace)
def load_document(filename: Path) -> dict:  # noqa F811
    return load_document(str(filename))


@dataclass
class GraphDocument:
    graph: PlaneGraph
    lists: Optional[ListAssignment] = None
    colorings: Dict[str, Coloring] = field(default_factory=dict)

    @property
    def alpha(self) -> Optional[Coloring]:
        return self.colorings.get("alpha")

    @property
    def beta(self) -> Optional[Coloring]:
        return self.colorings.get("beta")

    def to_dict(self) -> dict:
        d = self.graph.to_dict()
        if self.lists is not None:
            d["lists"] = self.lists.to_list()
        for name, coloring in self.colorings.items():
            d[name] = coloring.to_list()
        return d


def parse_graph_document(doc) -> GraphDocument:
    payload = load_document(doc)
    if "rotation" not in payload:
        raise FormatError("graph document has no rotation")
    graph = build_plane_graph(payload)
    lists = None
    if payload.get("lists") is not None:
        if len(payload["lists"]) != graph.n:
            raise FormatError(f"{len(payload['lists'])} lists for {graph.n} vertices")
        lists = ListAssignment(tuple(payload["lists"]))
    colorings = {}
    for name in COLORING_NAMES:
        if payload.get(name) is not None:
            coloring = Coloring(tuple(payload[name]))
            if len(coloring) != graph.n:
                raise FormatError(f"coloring {name} has {len(coloring)} entries for {graph.n} vertices")
            colorings[name] = coloring
    return GraphDocument(graph, lists, colorings)


def sequence_to_dict(seq: RecolorSequence) -> dict:
    return {"start": seq.start.to_list(), "steps": [[s.vertex, s.new_color] for s in seq.steps]}


def parse_sequence(doc) -> RecolorSequence:
    payload = load_document(doc)
    try:
        start = Coloring(tuple(payload["start"]))
        steps = tuple(RecolorStep(int(v), int(c)) for v, c in payload.get("steps", []))
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"malformed sequence document: {e}") from e
    return RecolorSequence(start, steps)
