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
This module contains the PlaneGraph class, a simple plane graph given by its rotation system.

A rotation lists, for each vertex, its neighbors in clockwise order.
Faces are traced with the next-dart rule : the dart (a, b) is followed by (b, c) where c comes right after a
in the rotation of b.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from planarrecolor.model.exceptions import (
    AsymmetricRotationError,
    EmbeddingError,
    GraphError,
    SimplicityError,
    TriangulationError,
)

logger = logging.getLogger(__name__)

Dart = Tuple[int, int]
Walk = Tuple[int, ...]


def face_walks(rotation: Sequence[Sequence[int]]) -> List[Walk]:
    """Partitions the darts of a rotation system into face walks.

    A walk (w0, w1, ..., wm-1) stands for the darts (w0, w1), (w1, w2), ..., (wm-1, w0).
    Walks are listed in the order of their smallest dart.
    """
    pos = [{u: i for i, u in enumerate(r)} for r in rotation]
    seen = set()
    walks = []
    for u, r in enumerate(rotation):
        for v in r:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                rb = rotation[b]
                a, b = b, rb[(pos[b][a] + 1) % len(rb)]
            walks.append(tuple(walk))
    return walks


def _check_rotation(rotation: Sequence[Sequence[int]]) -> None:
    n = len(rotation)
    adj = [set(r) for r in rotation]
    for v, r in enumerate(rotation):
        seen = set()
        for u in r:
            if not 0 <= u < n:
                raise GraphError(f"vertex {v} lists unknown neighbor {u}")
            if u == v:
                raise SimplicityError(v, u, "loop")
            if u in seen:
                raise SimplicityError(v, u, "multi-edge")
            seen.add(u)
            if v not in adj[u]:
                raise AsymmetricRotationError((v, u))
    _check_euler(rotation)


def _check_euler(rotation: Sequence[Sequence[int]]) -> None:
    n = len(rotation)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((u, v) for u, r in enumerate(rotation) for v in r)
    component_of = {}
    for index, comp in enumerate(nx.connected_components(g)):
        for v in comp:
            component_of[v] = index
    nfaces: Dict[int, int] = {}
    for walk in face_walks(rotation):
        c = component_of[walk[0]]
        nfaces[c] = nfaces.get(c, 0) + 1
    for index, comp in enumerate(nx.connected_components(g)):
        if len(comp) == 1:
            continue
        nedges = g.subgraph(comp).number_of_edges()
        euler = len(comp) - nedges + nfaces.get(index, 0)
        if euler != 2:
            v = min(comp)
            raise EmbeddingError((v, rotation[v][0]), euler)


@dataclass(frozen=True)
class PlaneGraph:
    """An immutable simple plane graph on the vertices 0..n-1.

    Build it with build_plane_graph() to get every invariant checked.

    Example:
    >>> g = build_plane_graph({0: [1, 2], 1: [2, 0], 2: [0, 1]})
    >>> g.n, g.n_edges, len(g.faces)
    (3, 3, 2)
    """

    rotation: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rotation)

    def __len__(self) -> int:
        return len(self.rotation)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(r) for r in self.rotation)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(r) for r in self.rotation)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted((u, v) for u, r in enumerate(self.rotation) for v in r if u < v))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def faces(self) -> Tuple[Walk, ...]:
        return tuple(face_walks(self.rotation))

    @cached_property
    def triangles(self) -> Tuple[Walk, ...]:
        return tuple(f for f in self.faces if len(f) == 3)

    @property
    def is_triangulation(self) -> bool:
        if self.n < 3:
            return False
        return self.n_edges == 3 * self.n - 6 and all(len(f) == 3 for f in self.faces)

    def successor(self, v: int, u: int) -> int:
        """The neighbor of v that follows u in clockwise order."""
        r = self.rotation[v]
        return r[(r.index(u) + 1) % len(r)]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def components(self) -> List[List[int]]:
        comps = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps, key=lambda c: c[0])

    @property
    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def subgraph(self, keep: Iterable[int]) -> Tuple[PlaneGraph, Tuple[int, ...]]:
        """Returns the induced plane subgraph on keep, relabeled densely, and the host label of each new vertex.

        Rotations are inherited from the host so the result is plane again.
        """
        labels = tuple(sorted(set(keep)))
        index = {v: i for i, v in enumerate(labels)}
        rotation = tuple(tuple(index[u] for u in self.rotation[v] if u in index) for v in labels)
        return PlaneGraph(rotation), labels

    def without(self, removed: Iterable[int]) -> Tuple[PlaneGraph, Tuple[int, ...]]:
        removed = set(removed)
        return self.subgraph(v for v in range(self.n) if v not in removed)

    def to_dict(self) -> dict:
        return {"n": self.n, "rotation": [list(r) for r in self.rotation]}

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, edges={self.n_edges}, faces={len(self.faces)})"


def build_plane_graph(spec) -> PlaneGraph:
    """Builds a validated PlaneGraph.

    Parameters
    ----------
    spec
        Either a mapping vertex -> clockwise neighbor list, a sequence of neighbor lists,
        or a graph document holding a "rotation" field (and optionally "n").

    Returns
    -------
    PlaneGraph
        The plane graph, with symmetry, simplicity and the Euler relation checked.
    """
    n: Optional[int] = None
    if isinstance(spec, Mapping) and "rotation" in spec:
        n = spec.get("n")
        spec = spec["rotation"]
    if isinstance(spec, Mapping):
        keys = sorted(int(k) for k in spec)
        if keys != list(range(len(keys))):
            raise GraphError(f"vertex ids must be 0..n-1, got {keys}")
        rotation = [list(spec[k] if k in spec else spec[str(k)]) for k in keys]
    else:
        rotation = [list(r) for r in spec]
    if n is not None and n != len(rotation):
        raise GraphError(f"n is {n} but {len(rotation)} rotations were given")
    rotation = [[int(u) for u in r] for r in rotation]
    _check_rotation(rotation)
    return PlaneGraph(tuple(tuple(r) for r in rotation))


def plane_graph_from_faces(n: int, faces: Iterable[Sequence[int]]) -> PlaneGraph:
    """Builds a triangulated sphere from its consistently oriented triangular faces.

    Every triangle (a, b, c) means c follows a in the rotation of b.
    """
    succ: List[Dict[int, int]] = [dict() for _ in range(n)]
    for a, b, c in faces:
        succ[b][a] = c
        succ[c][b] = a
        succ[a][c] = b
    rotation = []
    for v in range(n):
        if not succ[v]:
            rotation.append([])
            continue
        start = min(succ[v])
        cycle = [start]
        u = succ[v][start]
        while u != start:
            cycle.append(u)
            u = succ[v][u]
        if len(cycle) != len(succ[v]):
            raise GraphError(f"faces around vertex {v} do not close into a single cycle")
        rotation.append(cycle)
    return build_plane_graph(rotation)


class RotationEditor:
    """A mutable rotation system used to grow, triangulate and flip plane graphs."""

    def __init__(self, rotation: Sequence[Sequence[int]]):
        self.rot: List[List[int]] = [list(r) for r in rotation]
        self.adj: List[set] = [set(r) for r in rotation]

    @property
    def n(self) -> int:
        return len(self.rot)

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def successor(self, v: int, u: int) -> int:
        r = self.rot[v]
        return r[(r.index(u) + 1) % len(r)]

    def insert_after(self, v: int, anchor: int, new: int) -> None:
        r = self.rot[v]
        r.insert(r.index(anchor) + 1, new)
        self.adj[v].add(new)

    def remove(self, v: int, u: int) -> None:
        self.rot[v].remove(u)
        self.adj[v].discard(u)

    def faces(self) -> List[Walk]:
        return face_walks(self.rot)

    def add_chord(self, walk: Sequence[int], i: int, j: int) -> None:
        """Splits a face by joining the vertices found at positions i and j of its walk."""
        m = len(walk)
        wi, wj = walk[i], walk[j]
        self.insert_after(wi, walk[(i - 1) % m], wj)
        self.insert_after(wj, walk[(j - 1) % m], wi)

    def insert_in_face(self, a: int, b: int, c: int) -> int:
        """Adds a new vertex inside the triangle traced by the darts (a, b), (b, c), (c, a)."""
        w = len(self.rot)
        self.insert_after(b, a, w)
        self.insert_after(c, b, w)
        self.insert_after(a, c, w)
        self.rot.append([a, c, b])
        self.adj.append({a, b, c})
        return w

    def flip_ends(self, u: int, v: int) -> Tuple[int, int]:
        """The apexes x, y of the two triangles sharing the edge uv."""
        return self.successor(v, u), self.successor(u, v)

    def can_flip(self, u: int, v: int) -> bool:
        if not self.has_edge(u, v) or self.degree(u) <= 3 or self.degree(v) <= 3:
            return False
        x, y = self.flip_ends(u, v)
        if x == y or self.has_edge(x, y):
            return False
        return self.successor(x, v) == u and self.successor(y, u) == v

    def flip(self, u: int, v: int) -> Tuple[int, int]:
        """Replaces the edge uv by the other diagonal xy of the quadrilateral around it."""
        x, y = self.flip_ends(u, v)
        self.remove(u, v)
        self.remove(v, u)
        self.insert_after(x, v, y)
        self.insert_after(y, u, x)
        return x, y

    def freeze(self) -> PlaneGraph:
        return build_plane_graph(self.rot)


def _choose_chord(editor: RotationEditor, walk: Walk) -> Tuple[int, int]:
    m = len(walk)

    def safe(i: int, j: int) -> bool:
        return walk[i] != walk[j] and not editor.has_edge(walk[i], walk[j])

    for i in sorted(range(m), key=lambda p: (-editor.degree(walk[p]), walk[p], p)):
        if safe(i, (i + 2) % m):
            return i, (i + 2) % m
    for i in range(m):
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            if safe(i, j):
                return i, j
    raise TriangulationError("face cannot be split without a loop or a parallel edge", walk)


def triangulate(g: PlaneGraph) -> PlaneGraph:
    """Adds edges to g until every face is a triangle.

    Each long face gets a fan of chords from its vertex of maximum degree (lowest id on ties),
    moving to the next apex whenever a chord already exists.

    Returns
    -------
    PlaneGraph
        A plane triangulation on the same vertices, with 3n-6 edges, containing g.
    """
    if g.n < 3:
        raise TriangulationError(f"cannot triangulate a graph on {g.n} vertices")
    if not g.is_connected:
        raise TriangulationError("cannot triangulate a disconnected graph")
    editor = RotationEditor(g.rotation)
    added = 0
    while True:
        walk = next((f for f in editor.faces() if len(f) > 3), None)
        if walk is None:
            break
        i, j = _choose_chord(editor, walk)
        editor.add_chord(walk, i, j)
        added += 1
    t = editor.freeze()
    logger.debug(f"triangulated {g!r} with {added} chords")
    return t
