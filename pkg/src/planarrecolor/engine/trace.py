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

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from planarrecolor.model.coloring import Coloring, RecolorSequence


@dataclass(frozen=True)
class DeferralEvent:
    """The yielder was recolored first so the beneficiary could take its color."""

    trigger: int
    yielder: int
    beneficiary: int

    def relabel(self, labels: Sequence[int]) -> DeferralEvent:
        return DeferralEvent(self.trigger, labels[self.yielder], labels[self.beneficiary])


@dataclass
class ExtensionTrace:
    produced: RecolorSequence
    per_vertex_counts: Dict[int, int] = field(default_factory=dict)
    deferral_log: Tuple[DeferralEvent, ...] = ()
    k: Optional[int] = None

    @classmethod
    def of(cls, produced: RecolorSequence, events: Sequence[DeferralEvent] = (), k: int = None) -> ExtensionTrace:
        return cls(produced, produced.counts(), tuple(events), k)

    @property
    def final(self) -> Coloring:
        return self.produced.final()

    @property
    def max_count(self) -> int:
        return max(self.per_vertex_counts.values(), default=0)

    @property
    def length(self) -> int:
        return len(self.produced)

    @property
    def k_good(self) -> bool:
        return self.k is None or self.max_count <= self.k

    def __repr__(self):
        return f"steps: {self.length}, max count: {self.max_count}, deferrals: {len(self.deferral_log)}"
