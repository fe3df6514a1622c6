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

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from planarrecolor.model.coloring import Coloring, ListAssignment, RecolorSequence
from planarrecolor.model.exceptions import InvalidSequenceError
from planarrecolor.model.plane import PlaneGraph
from planarrecolor.utils.console import MsgLvl

logger = logging.getLogger(__name__)


@dataclass
class ValidationReport:
    """Outcome of replaying a recoloring sequence."""

    valid: bool
    counts: Dict[int, int] = field(default_factory=dict)
    first_bad_step: Optional[int] = None
    reason: str = ""
    final: Optional[Coloring] = None

    @property
    def ok(self) -> bool:
        return self.valid

    @property
    def length(self) -> int:
        return sum(self.counts.values())

    @property
    def max_count(self) -> int:
        return max(self.counts.values(), default=0)

    @property
    def level(self) -> MsgLvl:
        return "success" if self.valid else "error"

    def raise_for_status(self):
        if not self.valid:
            raise InvalidSequenceError(self.first_bad_step, self.reason)

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "first_bad_step": self.first_bad_step,
            "reason": self.reason,
            "max_count": self.max_count,
            "length": self.length,
        }

    def __repr__(self):
        if self.valid:
            return f"valid: {self.length} steps, max count {self.max_count}"
        return f"invalid at step {self.first_bad_step}: {self.reason}"


def validate_sequence(g: PlaneGraph, l: ListAssignment, seq: RecolorSequence, target: Coloring) -> ValidationReport:
    """Replays seq on g and checks every intermediate coloring.

    Parameters
    ----------
    g : PlaneGraph
        The host graph.
    l : ListAssignment
        The lists every coloring must respect.
    seq : RecolorSequence
        The sequence to replay.
    target : Coloring
        The coloring the sequence must end on.

    Returns
    -------
    ValidationReport
        Invalidity is reported, never raised, with the index of the first offending step.
        A final mismatch is reported at index len(seq).

    Example:
    >>> g = build_plane_graph({0: [1], 1: [0]})
    >>> l = ListAssignment.uniform(2, (1, 2, 3))
    >>> seq = RecolorSequence(Coloring((1, 2)), ((0, 3), (1, 1), (0, 2)))
    >>> validate_sequence(g, l, seq, Coloring((2, 1))).counts
    {0: 2, 1: 1}
    """
    counts = {v: 0 for v in range(g.n)}
    start = seq.start
    if len(start) != g.n or len(l) != g.n:
        return ValidationReport(False, counts, None, f"size mismatch: graph {g.n}, lists {len(l)}, start {len(start)}")
    if not start.respects(l):
        return ValidationReport(False, counts, None, "start coloring does not respect the lists", start)
    bad = start.conflicts(g)
    if bad:
        return ValidationReport(False, counts, None, f"start coloring is not proper on edge {bad[0]}", start)

    current = list(start.colors)
    for i, (v, c) in enumerate(seq.steps):
        if not 0 <= v < g.n:
            return ValidationReport(False, counts, i, f"unknown vertex {v}", Coloring(current))
        if c not in l[v]:
            return ValidationReport(False, counts, i, f"color {c} not in the list of {v}", Coloring(current))
        if c == current[v]:
            return ValidationReport(False, counts, i, f"vertex {v} already has color {c}", Coloring(current))
        clash = next((u for u in g.neighbors(v) if current[u] == c), None)
        if clash is not None:
            return ValidationReport(False, counts, i, f"conflict: {v} and {clash} both colored {c}", Coloring(current))
        current[v] = c
        counts[v] += 1

    final = Coloring(tuple(current))
    if final != target:
        diff = final.differs_on(target) if len(target) == len(final) else ()
        return ValidationReport(False, counts, len(seq), f"final coloring differs from target on {list(diff)}", final)
    logger.debug(f"validated {len(seq)} steps on {g!r}")
    return ValidationReport(True, counts, None, "", final)


def is_k_good(report: ValidationReport, k: int) -> bool:
    """True when no vertex is recolored more than k times."""
    return report.max_count <= k
