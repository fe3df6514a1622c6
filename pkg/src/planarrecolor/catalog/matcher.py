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
This module locates catalog configurations in a plane graph.

Matching is injective and not induced : host edges between matched vertices that the pattern does not have
are allowed. Pattern degree specs are checked against host degrees.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from planarrecolor.catalog.loader import builtin_catalog
from planarrecolor.catalog.pattern import ConfigurationPattern, degree_matches
from planarrecolor.engine.deferral import DeferralPlan
from planarrecolor.model.plane import PlaneGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatchEmbedding:
    pattern: ConfigurationPattern
    mapping: Mapping[str, int]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(self.mapping[v] for v in self.pattern.vertices)

    def host_plan(self) -> DeferralPlan:
        """The pattern plan with host vertex ids."""
        return self.pattern.plan.relabel(self.mapping)

    def verify(self, g: PlaneGraph) -> bool:
        """Re-checks injectivity, every pattern edge and every degree spec on g."""
        images = list(self.mapping.values())
        if len(set(images)) != len(images) or set(self.mapping) != set(self.pattern.vertices):
            return False
        if not all(0 <= h < g.n for h in images):
            return False
        if not all(g.has_edge(self.mapping[a], self.mapping[b]) for a, b in self.pattern.edges):
            return False
        return all(degree_matches(spec, g.degree(self.mapping[v])) for v, spec in self.pattern.deg.items())

    def to_dict(self) -> dict:
        return {"id": self.pattern.id, "embedding": {v: self.mapping[v] for v in self.pattern.vertices}}

    def __repr__(self) -> str:
        pairs = ", ".join(f"{v}->{self.mapping[v]}" for v in self.pattern.vertices)
        return f"{self.pattern.id}: {pairs}"


def search_order(pattern: ConfigurationPattern) -> List[str]:
    """Most constrained vertex first, then breadth first, preferring vertices with more placed neighbors."""
    g = pattern.graph
    remaining = set(pattern.vertices)
    order: List[str] = []
    while remaining:
        placed = set(order)

        def rank(v: str):
            return (-len(set(g[v]) & placed), -pattern.specificity(v), -g.degree[v], pattern.vertices.index(v))

        frontier = [v for v in remaining if set(g[v]) & placed] or list(remaining)
        v = min(frontier, key=rank)
        order.append(v)
        remaining.remove(v)
    return order


def find_embeddings(g: PlaneGraph, pattern: ConfigurationPattern) -> Iterator[MatchEmbedding]:
    """Yields every injective embedding of pattern in g, anchors tried by increasing host degree.

    Example:
    >>> emb = next(find_embeddings(icosahedron(), get_entry("RC-53a")))
    >>> emb.mapping
    {'a': 0, 'b': 1, 'c': 2}
    """
    order = search_order(pattern)
    if not order:
        return
    pg = pattern.graph
    mapping: Dict[str, int] = {}
    used = set()
    by_degree = sorted(range(g.n), key=lambda h: (g.degree(h), h))

    def candidates(v: str) -> Sequence[int]:
        anchors = [mapping[u] for u in pg[v] if u in mapping]
        if anchors:
            pool = set(g.neighbors(anchors[0]))
            for h in anchors[1:]:
                pool &= g.neighbors(h)
            pool = sorted(pool, key=lambda h: (g.degree(h), h))
        else:
            pool = by_degree
        return [h for h in pool if h not in used and degree_matches(pattern.deg[v], g.degree(h))]

    def extend(i: int) -> Iterator[MatchEmbedding]:
        if i == len(order):
            yield MatchEmbedding(pattern, {v: mapping[v] for v in pattern.vertices})
            return
        v = order[i]
        for h in candidates(v):
            mapping[v] = h
            used.add(h)
            yield from extend(i + 1)
            used.discard(h)
            del mapping[v]

    yield from extend(0)


def match_configuration(g: PlaneGraph, catalog: Sequence[ConfigurationPattern] = None) -> Optional[MatchEmbedding]:
    """The first embedding of the first catalog entry, in catalog order, that occurs in g.

    Parameters
    ----------
    g : PlaneGraph
        The host, usually a triangulation of minimum degree 5.
    catalog : Sequence[ConfigurationPattern], optional
        The entries to try, by default the builtin catalog

    Returns
    -------
    Optional[MatchEmbedding]
        None when no entry occurs.
    """
    catalog = catalog if catalog is not None else builtin_catalog()
    for pattern in catalog:
        embedding = next(find_embeddings(g, pattern), None)
        if embedding is not None:
            logger.debug(f"found {embedding!r}")
            return embedding
    return None


def match_all(g: PlaneGraph, catalog: Sequence[ConfigurationPattern] = None) -> List[MatchEmbedding]:
    """One embedding for every catalog entry that occurs in g."""
    catalog = catalog if catalog is not None else builtin_catalog()
    return [e for e in (next(find_embeddings(g, p), None) for p in catalog) if e is not None]
