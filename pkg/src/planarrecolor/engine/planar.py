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
This module contains the top-level planar recoloring routine.

Low-degree vertices are peeled one at a time. Once the minimum degree is five, the graph is triangulated,
a reducible configuration is located, removed, and added back through its deferral plan.
"""

from __future__ import annotations

import logging
from typing import List, Sequence, Tuple

from planarrecolor.engine.deferral import DeferralPlan, Stage, extend_with_deferral
from planarrecolor.engine.exceptions import ExtensionError, FinishingError, ListTooSmallError, TheoremViolation
from planarrecolor.engine.extension import extend_single_vertex
from planarrecolor.engine.finishing import finishing_order
from planarrecolor.engine.trace import DeferralEvent, ExtensionTrace
from planarrecolor.model.coloring import Coloring, ListAssignment, RecolorSequence
from planarrecolor.model.exceptions import ImproperColoringError
from planarrecolor.model.plane import PlaneGraph, triangulate
from planarrecolor.model.validation import validate_sequence
from planarrecolor.settings import globalsettings

logger = logging.getLogger(__name__)

Solved = Tuple[RecolorSequence, List[DeferralEvent]]


def _lift(solved: Solved, labels: Sequence[int], host_start: Coloring) -> Solved:
    seq, events = solved
    return seq.relabel(labels, host_start), [e.relabel(labels) for e in events]


def _restricted_plan(g: PlaneGraph, plan: DeferralPlan) -> DeferralPlan:
    """Drops the arcs along edges that only exist in the triangulation."""
    return DeferralPlan(
        tuple(
            Stage(stage.vertices, tuple(a for a in stage.arcs if g.has_edge(a.yielder, a.beneficiary)), stage.kind)
            for stage in plan.stages
        )
    )


def _finishable(g: PlaneGraph, l: ListAssignment, plan: DeferralPlan) -> bool:
    try:
        for index, stage in enumerate(plan.stages):
            finishing_order(g, l, stage.vertices, plan.later(index))
    except FinishingError:
        return False
    return True


class _Solver:
    def __init__(self, k: int, catalog, match):
        self.k = k
        self.catalog = catalog
        self.match = match
        self.peeled = 0
        self.reduced = 0

    def solve(self, g: PlaneGraph, l: ListAssignment, a: Coloring, b: Coloring) -> Solved:
        if g.n == 0:
            return RecolorSequence(a, ()), []
        if not g.is_connected:
            seq, events = RecolorSequence(a, ()), []
            for component in g.components():
                sub, labels = g.subgraph(component)
                inner, inner_events = _lift(
                    self.solve(sub, l.restrict(labels), a.restrict(labels), b.restrict(labels)), labels, a
                )
                seq = seq.then(inner.steps)
                events.extend(inner_events)
            return seq, events

        v = min(range(g.n), key=lambda u: (g.degree(u), u))
        if g.degree(v) <= globalsettings.peel_degree:
            return self.peel(g, l, a, b, v)

        t = g if g.is_triangulation else triangulate(g)
        embedding = self.match(t, self.catalog)
        if embedding is None:
            logger.error(f"no reducible configuration in {t!r} with minimum degree {t.min_degree}")
            raise TheoremViolation(f"no reducible configuration in a triangulation of minimum degree {t.min_degree}")
        plan = _restricted_plan(g, embedding.host_plan())
        if not _finishable(g, l, plan):
            logger.error(f"configuration {embedding.pattern.id} at {sorted(plan.vertices)} cannot be finished")
            raise TheoremViolation(
                f"configuration {embedding.pattern.id} cannot be finished with lists of {globalsettings.list_size}"
            )

        h = plan.vertices
        logger.debug(f"reducing {embedding.pattern.id} at {sorted(h)}")
        self.reduced += 1
        sub, labels = g.without(h)
        inner, events = _lift(self.solve(sub, l.restrict(labels), a.restrict(labels), b.restrict(labels)), labels, a)
        trace = extend_with_deferral(g, l, h, plan, inner, b, self.k, check_inner=False)
        return trace.produced, events + list(trace.deferral_log)

    def peel(self, g: PlaneGraph, l: ListAssignment, a: Coloring, b: Coloring, v: int) -> Solved:
        self.peeled += 1
        sub, labels = g.without((v,))
        inner, events = _lift(self.solve(sub, l.restrict(labels), a.restrict(labels), b.restrict(labels)), labels, a)
        trace = extend_single_vertex(g, l, v, inner, b[v])
        return trace.produced, events


def recolor_planar(
    g: PlaneGraph, l: ListAssignment, a: Coloring, b: Coloring, k: int = None, catalog=None
) -> ExtensionTrace:
    """Computes a recoloring sequence from a to b recoloring each vertex a bounded number of times.

    Parameters
    ----------
    g : PlaneGraph
        A plane graph, connected or not.
    l : ListAssignment
        Lists of at least settings.list_size colors.
    a : Coloring
        The proper start coloring.
    b : Coloring
        The proper target coloring.
    k : int, optional
        The per-vertex budget the result is checked against, by default settings.k
    catalog : Sequence[ConfigurationPattern], optional
        The configurations to look for, by default the builtin catalog in priority order

    Returns
    -------
    ExtensionTrace
        The sequence, its counts and the deferral events. trace.k_good tells whether the budget is met.

    Raises
    ------
    ListTooSmallError
        If a list is shorter than settings.list_size.
    ImproperColoringError
        If a or b is not a proper list coloring.
    TheoremViolation
        If no configuration is found in a triangulation of minimum degree 5, or the one found cannot be finished.

    Example:
    >>> from planarrecolor.model.solids import icosahedron
    >>> g = icosahedron()
    >>> trace = recolor_planar(g, l, alpha, beta)
    >>> trace.k_good
    True
    """
    k = k if k is not None else globalsettings.k
    for v in range(g.n):
        if l.size(v) < globalsettings.list_size:
            raise ListTooSmallError(v, l.size(v), globalsettings.list_size)
    for name, coloring in (("start", a), ("target", b)):
        if len(coloring) != g.n or not coloring.is_proper_list_coloring(g, l):
            raise ImproperColoringError(f"{name} coloring is not a proper list coloring of {g!r}")
    from planarrecolor.catalog.loader import builtin_catalog
    from planarrecolor.catalog.matcher import match_configuration

    solver = _Solver(k, catalog if catalog is not None else builtin_catalog(), match_configuration)
    seq, events = solver.solve(g, l, a, b)
    report = validate_sequence(g, l, seq, b)
    if not report.ok:
        raise ExtensionError(f"produced sequence is invalid: {report.reason}")
    trace = ExtensionTrace.of(seq, events, k)
    logger.info(
        f"{g!r}: {trace!r}, {solver.peeled} peeled, {solver.reduced} configurations"
    )
    if not trace.k_good:
        logger.error(f"sequence recolors a vertex {trace.max_count} times, more than k = {k}")
    return trace
