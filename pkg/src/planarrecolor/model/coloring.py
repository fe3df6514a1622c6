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
This module contains the coloring types : list assignments, colorings, recoloring steps and sequences.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, Sequence, Tuple

from planarrecolor.model.exceptions import ListAssignmentError
from planarrecolor.model.plane import PlaneGraph


@dataclass(frozen=True)
class ListAssignment:
    """The list of allowed colors of every vertex.

    Example:
    >>> l = ListAssignment.uniform(3, range(1, 4))
    >>> sorted(l[0])
    [1, 2, 3]
    """

    lists: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        lists = tuple(frozenset(int(c) for c in x) for x in self.lists)
        for v, x in enumerate(lists):
            if not x:
                raise ListAssignmentError(f"empty list at vertex {v}")
        object.__setattr__(self, "lists", lists)

    @classmethod
    def uniform(cls, n: int, colors: Iterable[int]) -> ListAssignment:
        colors = frozenset(colors)
        return cls(tuple(colors for _ in range(n)))

    def __getitem__(self, v: int) -> FrozenSet[int]:
        return self.lists[v]

    def __len__(self) -> int:
        return len(self.lists)

    def __iter__(self) -> Iterator[FrozenSet[int]]:
        return iter(self.lists)

    def size(self, v: int) -> int:
        return len(self.lists[v])

    @property
    def min_size(self) -> int:
        return min((len(x) for x in self.lists), default=0)

    def restrict(self, labels: Sequence[int]) -> ListAssignment:
        return ListAssignment(tuple(self.lists[v] for v in labels))

    def to_list(self) -> list:
        return [sorted(x) for x in self.lists]


@dataclass(frozen=True)
class Coloring:
    """A color per vertex, indexed by vertex id."""

    colors: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self) -> Iterator[int]:
        return iter(self.colors)

    def conflicts(self, g: PlaneGraph) -> Tuple[Tuple[int, int], ...]:
        return tuple((u, v) for u, v in g.edges if self.colors[u] == self.colors[v])

    def is_proper(self, g: PlaneGraph) -> bool:
        return len(self.colors) == g.n and not self.conflicts(g)

    def respects(self, lists: ListAssignment) -> bool:
        return len(self.colors) == len(lists) and all(c in lists[v] for v, c in enumerate(self.colors))

    def is_proper_list_coloring(self, g: PlaneGraph, lists: ListAssignment) -> bool:
        return self.respects(lists) and self.is_proper(g)

    def recolored(self, v: int, color: int) -> Coloring:
        colors = list(self.colors)
        colors[v] = color
        return Coloring(tuple(colors))

    def restrict(self, labels: Sequence[int]) -> Coloring:
        return Coloring(tuple(self.colors[v] for v in labels))

    def differs_on(self, other: Coloring) -> Tuple[int, ...]:
        return tuple(v for v, (a, b) in enumerate(zip(self.colors, other.colors)) if a != b)

    def to_list(self) -> list:
        return list(self.colors)


@dataclass(frozen=True)
class RecolorStep:
    vertex: int
    new_color: int

    def __iter__(self):
        return iter((self.vertex, self.new_color))


@dataclass(frozen=True)
class RecolorSequence:
    """A start coloring followed by single-vertex recoloring steps."""

    start: Coloring
    steps: Tuple[RecolorStep, ...] = ()

    def __post_init__(self):
        steps = tuple(s if isinstance(s, RecolorStep) else RecolorStep(*s) for s in self.steps)
        object.__setattr__(self, "steps", steps)

    def __len__(self) -> int:
        return len(self.steps)

    def colorings(self) -> Iterator[Coloring]:
        """Yields the start coloring then the coloring after each step."""
        current = list(self.start.colors)
        yield self.start
        for v, c in self.steps:
            current[v] = c
            yield Coloring(tuple(current))

    def final(self) -> Coloring:
        current = list(self.start.colors)
        for v, c in self.steps:
            current[v] = c
        return Coloring(tuple(current))

    def counts(self) -> Dict[int, int]:
        """Recolor count of every vertex, zeros included."""
        counts = {v: 0 for v in range(len(self.start))}
        counts.update(Counter(s.vertex for s in self.steps))
        return counts

    def relabel(self, labels: Sequence[int], host_start: Coloring) -> RecolorSequence:
        """Lifts a sequence computed on a relabeled subgraph back to host ids."""
        return RecolorSequence(host_start, tuple(RecolorStep(labels[v], c) for v, c in self.steps))

    def then(self, steps: Iterable[RecolorStep]) -> RecolorSequence:
        return RecolorSequence(self.start, self.steps + tuple(steps))
