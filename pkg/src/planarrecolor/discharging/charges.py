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
This module contains the discharging rules.

Every vertex starts with charge d(v) - 6, the total being -12 on a triangulation.
Rules R1 to R6 move charge from high-degree vertices towards 5-vertices, one rule after the other;
amounts are exact fractions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from planarrecolor.discharging.exceptions import StageError
from planarrecolor.model.exceptions import NotTriangulationError
from planarrecolor.model.plane import PlaneGraph

logger = logging.getLogger(__name__)

RULES = ("R1", "R2", "R3", "R4", "R5", "R6")
FINAL_STAGE = len(RULES)


@dataclass(frozen=True)
class ChargeState:
    """Charges after the first `stage` rules."""

    charge: Tuple[Fraction, ...]
    stage: int = 0

    def __getitem__(self, v: int) -> Fraction:
        return self.charge[v]

    def __len__(self) -> int:
        return len(self.charge)

    @property
    def total(self) -> Fraction:
        return sum(self.charge, Fraction(0))

    @property
    def unhappy(self) -> Tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.charge) if c < 0)

    def to_dict(self) -> dict:
        return {"stage": self.stage, "charge": list(self.charge), "total": self.total}


def face_thirds(g: PlaneGraph, v: int, w: int) -> Tuple[int, int]:
    """The third vertex of each of the two faces along the edge vw."""
    return g.successor(w, v), g.successor(v, w)


def rule_of(d_v: int, d_w: int) -> Optional[int]:
    """Which of R1 to R4 governs a transfer from a d_v-vertex to a d_w-neighbor, if any."""
    if d_w not in (5, 6) or d_v < 7:
        return None
    if d_v == 7:
        return 1 if d_w == 5 else 2
    return 3 if d_w == 5 else 4


def rule_transfer(d_v: int, d_w: int, third_degrees: Iterable[int]) -> Fraction:
    """The charge a d_v-vertex sends to a d_w-neighbor under R1 to R4.

    third_degrees are the degrees of the third vertices of the two faces on the edge.

    Example:
    >>> rule_transfer(7, 5, (5, 6))
    Fraction(1, 4)
    >>> rule_transfer(8, 6, (5, 7))
    Fraction(0, 1)
    """
    on_5_face = 5 in tuple(third_degrees)
    rule = rule_of(d_v, d_w)
    if rule == 1:
        return Fraction(1, 4) if on_5_face else Fraction(1, 3)
    if rule == 2:
        return Fraction(0) if on_5_face else Fraction(1, 6)
    if rule == 3:
        return Fraction(1, 2)
    if rule == 4:
        return Fraction(0) if on_5_face else Fraction(1, 4)
    return Fraction(0)


def initial_charges(g: PlaneGraph) -> ChargeState:
    """charge(v) = d(v) - 6, summing to -12.

    Example:
    >>> initial_charges(icosahedron()).total
    Fraction(-12, 1)
    """
    if not g.is_triangulation:
        raise NotTriangulationError(f"{g!r} is not a triangulation")
    return ChargeState(tuple(Fraction(d - 6) for d in g.degrees), 0)


def _has_5_neighbor(g: PlaneGraph, v: int) -> bool:
    return any(g.degree(u) == 5 for u in g.neighbors(v))


def _apply_fixed(g: PlaneGraph, charge: List[Fraction], rule: int) -> None:
    for v in range(g.n):
        for w in g.rotation[v]:
            if rule_of(g.degree(v), g.degree(w)) != rule:
                continue
            amount = rule_transfer(g.degree(v), g.degree(w), (g.degree(x) for x in face_thirds(g, v, w)))
            charge[v] -= amount
            charge[w] += amount


def _split(charge: List[Fraction], v: int, recipients: Sequence[int]) -> None:
    share = charge[v] / len(recipients)
    for u in recipients:
        charge[u] += share
    charge[v] = Fraction(0)


def apply_rule(g: PlaneGraph, cs: ChargeState, rule: int) -> ChargeState:
    """Applies rule R<rule> to charges at stage rule - 1.

    R5 and R6 split positive charges read before the rule starts.
    """
    if cs.stage != rule - 1:
        raise StageError(rule, cs.stage)
    charge = list(cs.charge)
    if rule <= 4:
        _apply_fixed(g, charge, rule)
    elif rule == 5:
        for v in range(g.n):
            if g.degree(v) != 6 or cs[v] <= 0 or _has_5_neighbor(g, v):
                continue
            needy = sorted(u for u in g.neighbors(v) if g.degree(u) == 6 and _has_5_neighbor(g, u))
            if needy:
                _split(charge, v, needy)
    else:
        for v in range(g.n):
            if g.degree(v) != 6 or cs[v] <= 0:
                continue
            fives = sorted(u for u in g.neighbors(v) if g.degree(u) == 5)
            if fives:
                _split(charge, v, fives)
    state = ChargeState(tuple(charge), rule)
    logger.debug(f"after {RULES[rule - 1]}: total {state.total}, {len(state.unhappy)} negative")
    return state


def apply_rules(g: PlaneGraph, cs: ChargeState) -> ChargeState:
    """Applies the remaining rules in order up to R6."""
    for rule in range(cs.stage + 1, FINAL_STAGE + 1):
        cs = apply_rule(g, cs, rule)
    return cs


def charge_history(g: PlaneGraph) -> List[ChargeState]:
    """The seven states, from the initial charges to the charges after R6."""
    states = [initial_charges(g)]
    for rule in range(1, FINAL_STAGE + 1):
        states.append(apply_rule(g, states[-1], rule))
    return states
