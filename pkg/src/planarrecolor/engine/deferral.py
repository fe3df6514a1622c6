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
This module contains deferral plans and their execution.

A plan is an ordered list of stages. While a stage runs, the vertices of later stages are treated as deleted;
each stage ends with the finishing step on its own vertices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Collection, Dict, Hashable, Iterable, List, Literal, Mapping, Tuple

from planarrecolor.engine.exceptions import NotKGoodError, PlanError
from planarrecolor.engine.extension import StageRunner
from planarrecolor.engine.trace import DeferralEvent, ExtensionTrace
from planarrecolor.model.coloring import Coloring, ListAssignment, RecolorSequence
from planarrecolor.model.plane import PlaneGraph
from planarrecolor.settings import globalsettings

logger = logging.getLogger(__name__)

StageKind = Literal["single", "simultaneous"]


@dataclass(frozen=True)
class DeferArc:
    """The beneficiary ignores the yielder's color for the first `budget` colors of its outside stream."""

    yielder: Hashable
    beneficiary: Hashable
    budget: int


@dataclass(frozen=True)
class Stage:
    vertices: Tuple[Hashable, ...]
    arcs: Tuple[DeferArc, ...] = ()
    kind: StageKind = "simultaneous"

    @property
    def overhead(self) -> int:
        """Recolorings spent by the finishing step."""
        return 1 if self.kind == "single" else 2


@dataclass(frozen=True)
class DeferralPlan:
    stages: Tuple[Stage, ...]

    @property
    def vertices(self) -> Tuple[Hashable, ...]:
        return tuple(v for stage in self.stages for v in stage.vertices)

    @property
    def arcs(self) -> Tuple[DeferArc, ...]:
        return tuple(arc for stage in self.stages for arc in stage.arcs)

    def later(self, index: int) -> frozenset:
        return frozenset(v for stage in self.stages[index + 1 :] for v in stage.vertices)

    def relabel(self, mapping: Mapping) -> DeferralPlan:
        return DeferralPlan(
            tuple(
                Stage(
                    tuple(mapping[v] for v in stage.vertices),
                    tuple(DeferArc(mapping[a.yielder], mapping[a.beneficiary], a.budget) for a in stage.arcs),
                    stage.kind,
                )
                for stage in self.stages
            )
        )

    @classmethod
    def single_vertex(cls, v: Hashable) -> DeferralPlan:
        return cls((Stage((v,), (), "single"),))


def check_plan(g: PlaneGraph, h: Collection[int], plan: DeferralPlan) -> None:
    vertices = plan.vertices
    if len(set(vertices)) != len(vertices):
        raise PlanError("a vertex appears in more than one stage")
    if set(vertices) != set(h):
        raise PlanError(f"plan covers {sorted(vertices)} but the configuration is {sorted(h)}")
    for stage in plan.stages:
        members = set(stage.vertices)
        incoming: Dict[Hashable, int] = {}
        for arc in stage.arcs:
            if arc.yielder not in members or arc.beneficiary not in members:
                raise PlanError(f"arc {arc.yielder}->{arc.beneficiary} leaves its stage")
            if not g.has_edge(arc.yielder, arc.beneficiary):
                raise PlanError(f"arc {arc.yielder}->{arc.beneficiary} joins non-adjacent vertices")
            incoming[arc.beneficiary] = incoming.get(arc.beneficiary, 0) + 1
            if incoming[arc.beneficiary] > 1:
                raise PlanError(f"vertex {arc.beneficiary} has more than one yielder")


def extend_with_deferral(
    g: PlaneGraph,
    l: ListAssignment,
    h: Iterable[int],
    plan: DeferralPlan,
    inner: RecolorSequence,
    target: Coloring,
    k: int = None,
    *,
    check_inner: bool = True,
) -> ExtensionTrace:
    """Extends a k-good sequence valid on g - h to g, stage by stage.

    Parameters
    ----------
    g : PlaneGraph
        The host graph.
    l : ListAssignment
        The lists.
    h : Iterable[int]
        The configuration vertices, exactly the vertices of the plan.
    plan : DeferralPlan
        Stages and defer-arcs, in host ids.
    inner : RecolorSequence
        A k-good sequence that never recolors a vertex of h; its start gives the start colors of h.
    target : Coloring
        The final coloring of g.
    k : int, optional
        The recoloring budget, by default settings.k
    check_inner : bool, optional
        Raise NotKGoodError when the inner sequence already exceeds k, by default True

    Returns
    -------
    ExtensionTrace
        The extended sequence and the deferral events.
    """
    k = k if k is not None else globalsettings.k
    h = tuple(h)
    check_plan(g, h, plan)
    counts = inner.counts()
    worst = max(counts, key=lambda v: counts[v], default=None)
    if check_inner and worst is not None and counts[worst] > k:
        raise NotKGoodError(worst, counts[worst], k)

    seq = inner
    events: List[DeferralEvent] = []
    for index, stage in enumerate(plan.stages):
        runner = StageRunner(g, l, stage.vertices, seq.start, arcs=stage.arcs, absent=plan.later(index))
        runner.replay(seq.steps)
        runner.finish(target)
        trace = runner.trace()
        seq = trace.produced
        events.extend(trace.deferral_log)
    logger.debug(f"extended {len(h)} configuration vertices in {len(plan.stages)} stages, {len(events)} deferrals")
    return ExtensionTrace.of(seq, events, k)
