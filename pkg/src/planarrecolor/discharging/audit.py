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
from dataclasses import dataclass
from typing import Optional, Tuple

from planarrecolor.catalog.matcher import MatchEmbedding, match_configuration
from planarrecolor.discharging.charges import ChargeState, apply_rules, initial_charges
from planarrecolor.discharging.exceptions import MinDegreeError
from planarrecolor.engine.exceptions import TheoremViolation
from planarrecolor.model.exceptions import NotTriangulationError
from planarrecolor.model.plane import PlaneGraph
from planarrecolor.utils.console import MsgLvl

logger = logging.getLogger(__name__)


@dataclass
class AuditReport:
    """Final charges of a triangulation next to the configuration found in it, if any.

    A triangulation of minimum degree 5 where every vertex ends happy and no configuration is found
    would contradict the discharging argument.
    """

    final: ChargeState
    match: Optional[MatchEmbedding]

    @property
    def unhappy(self) -> Tuple[int, ...]:
        return self.final.unhappy

    @property
    def all_happy(self) -> bool:
        return not self.unhappy

    @property
    def consistent(self) -> bool:
        return not (self.all_happy and self.match is None)

    @property
    def ok(self) -> bool:
        return self.match is not None

    @property
    def level(self) -> MsgLvl:
        if not self.consistent:
            return "error"
        return "success" if self.ok else "warning"

    def raise_for_status(self):
        if not self.consistent:
            raise TheoremViolation("every vertex ends happy and no configuration matches")
        if not self.ok:
            raise TheoremViolation(f"no configuration matches, {len(self.unhappy)} vertices end unhappy")

    def to_dict(self) -> dict:
        return {
            "unhappy": list(self.unhappy),
            "all_happy": self.all_happy,
            "total": self.final.total,
            "final": list(self.final.charge),
            "match": self.match,
            "consistent": self.consistent,
        }

    def __repr__(self):
        found = self.match.pattern.id if self.match is not None else "no configuration"
        return f"{len(self.unhappy)} unhappy vertices, {found}"


def audit(g: PlaneGraph, catalog=None) -> AuditReport:
    """Runs the discharging rules and the configuration detector on g.

    Parameters
    ----------
    g : PlaneGraph
        A triangulation of minimum degree at least 5.
    catalog : Sequence[ConfigurationPattern], optional
        The configurations to look for, by default the builtin catalog

    Returns
    -------
    AuditReport
        The final charges and the first configuration found.

    Example:
    >>> report = audit(icosahedron())
    >>> report.match.pattern.id, len(report.unhappy)
    ('RC-5165a', 12)
    """
    if not g.is_triangulation:
        raise NotTriangulationError(f"{g!r} is not a triangulation")
    low = min(range(g.n), key=lambda v: (g.degree(v), v))
    if g.degree(low) < 5:
        raise MinDegreeError(low, g.degree(low))
    report = AuditReport(apply_rules(g, initial_charges(g)), match_configuration(g, catalog))
    logger.info(f"audit of {g!r}: {report!r}")
    if not report.consistent:
        logger.error("every vertex ends happy and no configuration matches")
    return report
