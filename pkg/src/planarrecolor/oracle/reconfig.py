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
This module builds the reconfiguration graph of small instances and searches it.

Nodes are the proper list-colorings, encoded as color tuples in vertex order.
Two nodes are adjacent when they differ on exactly one vertex.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple, Union

import networkx as nx

from planarrecolor.model.coloring import Coloring, ListAssignment, RecolorSequence, RecolorStep
from planarrecolor.model.plane import PlaneGraph
from planarrecolor.oracle.exceptions import NotAColoringError, OracleBudgetError, OracleError
from planarrecolor.settings import globalsettings

logger = logging.getLogger(__name__)

Node = Tuple[int, ...]


@dataclass(frozen=True)
class ReconfigurationGraph:
    g: PlaneGraph
    lists: ListAssignment
    graph: nx.Graph

    @property
    def n_nodes(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def n_edges(self) -> int:
        return self.graph.number_of_edges()

    def __contains__(self, coloring: Union[Coloring, Node]) -> bool:
        node = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
        return node in self.graph

    def is_step(self, a: Coloring, b: Coloring) -> bool:
        return self.graph.has_edge(a.colors, b.colors)


def _proper_colorings(g: PlaneGraph, lists: ListAssignment) -> Iterator[Node]:
    n = g.n
    colors: List[int] = [0] * n
    choices = [sorted(lists[v]) for v in range(n)]
    earlier = [[u for u in g.neighbors(v) if u < v] for v in range(n)]

    def extend(v: int) -> Iterator[Node]:
        if v == n:
            yield tuple(colors)
            return
        for c in choices[v]:
            if all(colors[u] != c for u in earlier[v]):
                colors[v] = c
                yield from extend(v + 1)

    yield from extend(0)


def _moves(g: PlaneGraph, lists: ListAssignment, node: Node) -> Iterator[Tuple[int, int]]:
    for v in range(g.n):
        used = {node[u] for u in g.neighbors(v)}
        for c in sorted(lists[v]):
            if c != node[v] and c not in used:
                yield v, c


def build_reconfiguration_graph(g: PlaneGraph, l: ListAssignment, cap: int = None) -> ReconfigurationGraph:
    """Enumerates every proper L-coloring of g and links the ones differing on a single vertex.

    Parameters
    ----------
    g : PlaneGraph
        The graph.
    l : ListAssignment
        The lists.
    cap : int, optional
        Upper bound on the product of list sizes, by default settings.oracle_cap

    Returns
    -------
    ReconfigurationGraph
        The complete reconfiguration graph.

    Example:
    >>> g = build_plane_graph({0: [1], 1: [0]})
    >>> build_reconfiguration_graph(g, ListAssignment.uniform(2, (1, 2))).n_edges
    0
    """
    cap = cap if cap is not None else globalsettings.oracle_cap
    product = math.prod(l.size(v) for v in range(g.n))
    if product > cap:
        raise OracleBudgetError(product, cap)
    graph = nx.Graph()
    for node in _proper_colorings(g, l):
        graph.add_node(node)
        for v, c in _moves(g, l, node):
            if c < node[v]:
                graph.add_edge(node, node[:v] + (c,) + node[v + 1 :])
    logger.debug(f"reconfiguration graph of {g!r}: {graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges")
    return ReconfigurationGraph(g, l, graph)


def _steps_along(path: List[Node]) -> Tuple[RecolorStep, ...]:
    steps = []
    for a, b in zip(path, path[1:]):
        v = next(i for i, (x, y) in enumerate(zip(a, b)) if x != y)
        steps.append(RecolorStep(v, b[v]))
    return tuple(steps)


def _check_node(rg: ReconfigurationGraph, c: Coloring, name: str) -> None:
    if c not in rg:
        raise NotAColoringError(f"{name} = {list(c)} is not a proper L-coloring of the graph")


def bfs_shortest_sequence(rg: ReconfigurationGraph, a: Coloring, b: Coloring) -> Optional[RecolorSequence]:
    """A shortest recoloring sequence from a to b, or None when b is unreachable from a."""
    _check_node(rg, a, "a")
    _check_node(rg, b, "b")
    try:
        path = nx.shortest_path(rg.graph, a.colors, b.colors)
    except nx.NetworkXNoPath:
        return None
    return RecolorSequence(a, _steps_along(path))


def diameter(rg: ReconfigurationGraph) -> Union[int, float]:
    """Largest distance between two colorings, math.inf when the graph is disconnected."""
    if rg.n_nodes <= 1:
        return 0
    if not nx.is_connected(rg.graph):
        return math.inf
    return nx.diameter(rg.graph)


def bounded_shortest_sequence(
    g: PlaneGraph, l: ListAssignment, a: Coloring, b: Coloring, max_count: int
) -> Optional[RecolorSequence]:
    """A shortest sequence from a to b recoloring each vertex at most max_count times.

    The search runs over (coloring, count vector) states and is restricted to tiny instances.
    """
    max_vertices = globalsettings.bounded_search_max_vertices
    if g.n > max_vertices or max_count > globalsettings.bounded_search_max_count:
        raise OracleError(
            f"count-bounded search limited to {max_vertices} vertices and counts "
            f"<= {globalsettings.bounded_search_max_count}"
        )
    for name, c in (("a", a), ("b", b)):
        if not c.is_proper_list_coloring(g, l):
            raise NotAColoringError(f"{name} = {list(c)} is not a proper L-coloring of the graph")
    start = (a.colors, (0,) * g.n)
    parent: Dict[tuple, Optional[tuple]] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        node, counts = state
        if node == b.colors:
            path = []
            while state is not None:
                path.append(state[0])
                state = parent[state]
            return RecolorSequence(a, _steps_along(path[::-1]))
        for v, c in _moves(g, l, node):
            if counts[v] >= max_count:
                continue
            nxt = (node[:v] + (c,) + node[v + 1 :], counts[:v] + (counts[v] + 1,) + counts[v + 1 :])
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)
    return None
