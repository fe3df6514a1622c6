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
This module contains the extension procedures that add vertices back to a recoloring sequence.

A stage is a set of vertices added back together. The sequence computed without them (the inner sequence)
is replayed step by step; a stage vertex is recolored just before an outside neighbor takes its color.
Every forced recolor avoids the colors currently around the vertex and the next colors coming from outside,
so the vertex is not threatened again for a while.
"""

from __future__ import annotations

import logging
from typing import Collection, Dict, Iterable, List, Optional, Sequence, Tuple

from planarrecolor.engine.exceptions import DegeneracyError, ExtensionError, ListTooSmallError, PlanError
from planarrecolor.engine.finishing import check_finishing_order, finish_in_place, finishing_order
from planarrecolor.engine.trace import DeferralEvent, ExtensionTrace
from planarrecolor.model.coloring import Coloring, ListAssignment, RecolorSequence, RecolorStep
from planarrecolor.model.plane import PlaneGraph

logger = logging.getLogger(__name__)


def smallest_admissible(allowed: Iterable[int], window: Sequence[int]) -> Optional[int]:
    """The smallest allowed color outside the window, shrinking the window from its far end when needed."""
    allowed = sorted(allowed)
    if not allowed:
        return None
    window = list(window)
    while True:
        banned = set(window)
        for c in allowed:
            if c not in banned:
                return c
        window.pop()


class StageRunner:
    """Replays an inner sequence while keeping the vertices of one stage properly colored.

    Arcs are objects with yielder, beneficiary and budget attributes.
    For the first budget colors of its outside stream, a beneficiary ignores the color of its yielder
    and looks one color further ahead; when it picks the yielder's color the yielder is recolored first.
    """

    def __init__(
        self,
        g: PlaneGraph,
        l: ListAssignment,
        stage: Iterable[int],
        start: Coloring,
        *,
        arcs: Iterable = (),
        absent: Collection[int] = (),
    ):
        self.g = g
        self.l = l
        self.stage: Tuple[int, ...] = tuple(sorted(set(stage)))
        self.members = frozenset(self.stage)
        self.absent = frozenset(absent)
        self.cur: List[int] = list(start.colors)
        self.present: Dict[int, Tuple[int, ...]] = {
            v: tuple(u for u in g.rotation[v] if u not in self.absent) for v in self.stage
        }
        self.look: Dict[int, int] = {}
        for v in self.stage:
            needed = len(self.present[v]) + 2
            if l.size(v) < needed:
                raise ListTooSmallError(v, l.size(v), needed)
            self.look[v] = l.size(v) - len(self.present[v]) - 1
        self.watchers: Dict[int, List[int]] = {}
        for v in self.stage:
            for u in self.present[v]:
                if u not in self.members:
                    self.watchers.setdefault(u, []).append(v)
        self.arcs_in: Dict[int, list] = {}
        for arc in arcs:
            if arc.yielder not in self.members or arc.beneficiary not in self.members:
                raise PlanError(f"arc {arc.yielder}->{arc.beneficiary} leaves the stage {list(self.stage)}")
            if not g.has_edge(arc.yielder, arc.beneficiary):
                raise PlanError(f"arc {arc.yielder}->{arc.beneficiary} joins non-adjacent vertices")
            self.arcs_in.setdefault(arc.beneficiary, []).append(arc)
        self.streams: Dict[int, List[int]] = {v: [] for v in self.stage}
        self.pos: Dict[int, int] = {v: 0 for v in self.stage}
        self.start = start
        self.steps: List[RecolorStep] = []
        self.events: List[DeferralEvent] = []

    def _apply(self, v: int, color: int) -> None:
        self.cur[v] = color
        self.steps.append(RecolorStep(v, color))

    def _pick(self, v: int, hard: set, window: Sequence[int]) -> int:
        color = smallest_admissible(self.l[v] - hard, window)
        if color is None:
            raise ExtensionError(f"no admissible color left for vertex {v}")
        return color

    def _recolor_yielder(self, y: int, u: int, c: int) -> None:
        hard = {self.cur[w] for w in self.present[y]} | {self.cur[y]}
        if self.g.has_edge(y, u):
            hard.add(c)
        i = self.pos[y]
        window = self.streams[y][i : i + self.look[y] - 1]
        self._apply(y, self._pick(y, hard, window))

    def _recolor_threatened(self, v: int, u: int, c: int) -> None:
        i = self.pos[v]
        active = [arc for arc in self.arcs_in.get(v, ()) if i < arc.budget]
        ignored = {arc.yielder for arc in active}
        hard = {self.cur[w] for w in self.present[v] if w not in ignored} | {self.cur[v], c}
        look = self.look[v] + (1 if active else 0)
        color = self._pick(v, hard, self.streams[v][i : i + look])
        for y in sorted(ignored):
            if self.cur[y] == color:
                self._recolor_yielder(y, u, c)
                self.events.append(DeferralEvent(c, y, v))
        self._apply(v, color)

    def replay(self, inner_steps: Sequence[RecolorStep]) -> None:
        for u, c in inner_steps:
            if u in self.members or u in self.absent:
                raise PlanError(f"inner sequence recolors vertex {u} which is not outside the stage")
            for v in self.watchers.get(u, ()):
                self.streams[v].append(c)
        for u, c in inner_steps:
            watchers = self.watchers.get(u, ())
            while True:
                threatened = [v for v in watchers if self.cur[v] == c]
                if not threatened:
                    break
                self._recolor_threatened(min(threatened), u, c)
            self._apply(u, c)
            for v in watchers:
                self.pos[v] += 1

    def finish(self, target, order: Optional[Sequence[int]] = None) -> None:
        if order is None:
            order = finishing_order(self.g, self.l, self.stage, self.absent)
        else:
            check_finishing_order(self.g, self.l, order, self.absent)
        self.steps.extend(finish_in_place(self.g, self.l, order, self.cur, target, self.absent))

    def trace(self) -> ExtensionTrace:
        return ExtensionTrace.of(RecolorSequence(self.start, tuple(self.steps)), self.events)


def extend_single_vertex(
    g: PlaneGraph,
    l: ListAssignment,
    v: int,
    inner: RecolorSequence,
    target_color: int,
    *,
    absent: Collection[int] = (),
) -> ExtensionTrace:
    """Extends a sequence valid on g - v to g.

    With a = |L(v)| - d(v) - 1 and s the number of inner steps recoloring a neighbor of v,
    v is recolored at most ceil(s / a) + 1 times.

    Parameters
    ----------
    g : PlaneGraph
        The graph containing v.
    l : ListAssignment
        The lists, |L(v)| >= d(v) + 2.
    v : int
        The vertex to add back.
    inner : RecolorSequence
        A sequence on g - v. Its start coloring gives the start color of v.
    target_color : int
        The color v must end with.
    absent : Collection[int], optional
        Vertices treated as deleted from g.

    Returns
    -------
    ExtensionTrace
        The extended sequence.

    Example:
    >>> trace = extend_single_vertex(g, l, 0, RecolorSequence(alpha), beta[0])
    >>> trace.per_vertex_counts[0] <= 1
    True
    """
    runner = StageRunner(g, l, (v,), inner.start, absent=absent)
    runner.replay(inner.steps)
    runner.finish({v: target_color}, order=(v,))
    return runner.trace()


def degeneracy(g: PlaneGraph, order: Sequence[int]) -> int:
    """The largest number of neighbors a vertex has later in the elimination order."""
    position = {v: i for i, v in enumerate(order)}
    return max((sum(1 for u in g.neighbors(v) if position[u] > position[v]) for v in order), default=0)


def extend_degenerate(
    g: PlaneGraph, l: ListAssignment, order: Sequence[int], a: Coloring, b: Coloring, *, d: int = None
) -> ExtensionTrace:
    """Recolors a d-degenerate graph from a to b, each vertex at most d + 1 times.

    order[0] is eliminated first : every vertex has at most d neighbors later in the order.
    The graph is rebuilt from the end of the order, one single-vertex extension at a time.
    """
    if sorted(order) != list(range(g.n)):
        raise DegeneracyError(f"order {list(order)} is not a permutation of the {g.n} vertices")
    actual = degeneracy(g, order)
    if d is not None and actual > d:
        raise DegeneracyError(f"order has a vertex with {actual} later neighbors, more than d = {d}")
    d = actual if d is None else d
    for v in range(g.n):
        if l.size(v) < 2 * d + 2:
            raise ListTooSmallError(v, l.size(v), 2 * d + 2)

    seq = RecolorSequence(a, ())
    pending = set(range(g.n))
    for v in reversed(order):
        pending.discard(v)
        seq = extend_single_vertex(g, l, v, seq, b[v], absent=pending).produced
    logger.debug(f"degenerate extension with d = {d}: {len(seq)} steps")
    return ExtensionTrace.of(seq)
