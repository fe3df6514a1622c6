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
This module contains the finishing step : recolor a vertex subset to its target, each vertex at most twice.

Vertices are visited in an order where every vertex has few neighbors later in the order.
A forward pass moves each vertex off the target colors of its later neighbors, a backward pass sets the targets.
"""

from __future__ import annotations

import logging
from typing import Collection, Iterable, List, Sequence, Tuple

from planarrecolor.engine.exceptions import ExtensionError, FinishingError
from planarrecolor.engine.trace import ExtensionTrace
from planarrecolor.model.coloring import Coloring, ListAssignment, RecolorSequence, RecolorStep
from planarrecolor.model.plane import PlaneGraph

logger = logging.getLogger(__name__)


def _present_degree(g: PlaneGraph, v: int, absent: Collection[int]) -> int:
    return sum(1 for u in g.rotation[v] if u not in absent)


def finishing_order(
    g: PlaneGraph, l: ListAssignment, h: Iterable[int], absent: Collection[int] = ()
) -> Tuple[int, ...]:
    """Greedily orders h so that current degree + later neighbors in h <= |L(v)| - 1 holds for every vertex.

    Returns
    -------
    Tuple[int, ...]
        The order, lowest eligible id first.
    """
    absent = frozenset(absent)
    remaining = set(h)
    order = []
    while remaining:
        eligible = None
        for v in sorted(remaining):
            later = len(g.neighbors(v) & remaining)
            if _present_degree(g, v, absent) + later <= l.size(v) - 1:
                eligible = v
                break
        if eligible is None:
            v = min(remaining)
            raise FinishingError(v, _present_degree(g, v, absent), len(g.neighbors(v) & remaining), l.size(v))
        order.append(eligible)
        remaining.remove(eligible)
    return tuple(order)


def check_finishing_order(g: PlaneGraph, l: ListAssignment, order: Sequence[int], absent: Collection[int] = ()):
    absent = frozenset(absent)
    for i, v in enumerate(order):
        later = len(g.neighbors(v) & set(order[i + 1 :]))
        degree = _present_degree(g, v, absent)
        if degree + later > l.size(v) - 1:
            raise FinishingError(v, degree, later, l.size(v))


def finish_in_place(
    g: PlaneGraph,
    l: ListAssignment,
    order: Sequence[int],
    cur: List[int],
    target,
    absent: Collection[int] = (),
) -> List[RecolorStep]:
    """Runs both passes on the mutable coloring cur and returns the steps taken."""
    steps: List[RecolorStep] = []
    present = {v: [u for u in g.rotation[v] if u not in absent] for v in order}

    for i, v in enumerate(order):
        later = set(order[i + 1 :]) & g.neighbors(v)
        reserved = {target[w] for w in later}
        if cur[v] not in reserved:
            continue
        hard = reserved | {cur[u] for u in present[v]} | {cur[v]}
        color = min(l[v] - hard)
        cur[v] = color
        steps.append(RecolorStep(v, color))

    for v in reversed(order):
        goal = target[v]
        if cur[v] == goal:
            continue
        clash = next((u for u in present[v] if cur[u] == goal), None)
        if clash is not None:
            raise ExtensionError(f"target color {goal} of vertex {v} is held by neighbor {clash}")
        if goal not in l[v]:
            raise ExtensionError(f"target color {goal} is not in the list of vertex {v}")
        cur[v] = goal
        steps.append(RecolorStep(v, goal))
    return steps


def finish_subgraph(
    g: PlaneGraph,
    l: ListAssignment,
    h: Iterable[int],
    order: Sequence[int],
    current: Coloring,
    target: Coloring,
    absent: Collection[int] = (),
) -> ExtensionTrace:
    """Recolors the vertices of h from current to target, each at most twice.

    Parameters
    ----------
    g : PlaneGraph
        The host graph.
    l : ListAssignment
        The lists.
    h : Iterable[int]
        The vertices to recolor; current and target must agree elsewhere.
    order : Sequence[int]
        An order of h with degree + later neighbors <= |L(v)| - 1, see finishing_order().
    current : Coloring
        The coloring to start from.
    target : Coloring
        The coloring to reach.
    absent : Collection[int], optional
        Vertices treated as deleted from g.

    Returns
    -------
    ExtensionTrace
        The produced sequence, starting at current.
    """
    h = set(h)
    if set(order) != h or len(order) != len(h):
        raise ExtensionError(f"order {list(order)} is not an ordering of {sorted(h)}")
    outside = [v for v in current.differs_on(target) if v not in h and v not in absent]
    if outside:
        raise ExtensionError(f"current and target differ outside h on {outside}")
    check_finishing_order(g, l, order, absent)
    cur = list(current.colors)
    steps = finish_in_place(g, l, order, cur, target, absent)
    logger.debug(f"finished {len(h)} vertices with {len(steps)} steps")
    return ExtensionTrace.of(RecolorSequence(current, tuple(steps)))
