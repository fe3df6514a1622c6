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
This module contains seeded generators for test instances : plane triangulations with a prescribed minimum degree,
random trees, and list assignments with two proper colorings.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from planarrecolor.cli.exceptions import GenerationError
from planarrecolor.model.coloring import Coloring, ListAssignment
from planarrecolor.model.io import GraphDocument
from planarrecolor.model.plane import PlaneGraph, RotationEditor, build_plane_graph
from planarrecolor.model.solids import antiprism_sphere, octahedron, tetrahedron
from planarrecolor.settings import globalsettings

logger = logging.getLogger(__name__)


def best_min_degree(n: int) -> int:
    """The largest minimum degree of a triangulation on n >= 4 vertices."""
    if n >= 12 and n != 13:
        return 5
    return 4 if n >= 6 else 3


def _triangles(editor: RotationEditor) -> List[Tuple[int, int, int]]:
    return [tuple(f) for f in editor.faces()]


def _random_flips(editor: RotationEditor, rng: random.Random, count: int, floor: int) -> int:
    """Flips random edges whose ends both keep degree >= floor."""
    done = 0
    for _ in range(globalsettings.flip_budget_factor * max(count, 1)):
        if done >= count:
            break
        u = rng.randrange(editor.n)
        v = rng.choice(editor.rot[u])
        if editor.degree(u) > floor and editor.degree(v) > floor and editor.can_flip(u, v):
            editor.flip(u, v)
            done += 1
    return done


def _grow_md3(editor: RotationEditor, rng: random.Random) -> None:
    a, b, c = rng.choice(_triangles(editor))
    editor.insert_in_face(a, b, c)


def _grow_md4(editor: RotationEditor, rng: random.Random) -> None:
    """Inserts a vertex, then flips one edge of its triangle to give it a fourth neighbor."""
    a, b, c = rng.choice(_triangles(editor))
    w = editor.insert_in_face(a, b, c)
    for u, v in ((a, b), (b, c), (c, a)):
        if editor.can_flip(u, v):
            editor.flip(u, v)
            return
    raise GenerationError(f"no edge around new vertex {w} can be flipped")


def _grow_md5(editor: RotationEditor, rng: random.Random) -> None:
    """Inserts a vertex in a face with a 6+ corner b, then flips ab and bc."""
    faces = _triangles(editor)
    rng.shuffle(faces)
    for face in faces:
        for i in range(3):
            a, b, c = face[i], face[(i + 1) % 3], face[(i + 2) % 3]
            if editor.degree(b) < 6:
                continue
            snapshot = ([list(r) for r in editor.rot], [set(s) for s in editor.adj])
            editor.insert_in_face(a, b, c)
            if editor.can_flip(a, b):
                editor.flip(a, b)
                if editor.can_flip(b, c):
                    editor.flip(b, c)
                    return
            editor.rot, editor.adj = snapshot
    raise GenerationError("no face has a corner of degree 6 or more", best=4)


def gen_triangulation(n: int, seed: Optional[int] = None, min_degree: int = 3) -> PlaneGraph:
    """A seeded random plane triangulation on n vertices with minimum degree at least min_degree.

    Parameters
    ----------
    n : int
        Number of vertices, at least 4.
    seed : int, optional
        Random seed, by default settings.seed
    min_degree : int, optional
        3, 4 or 5, by default 3

    Returns
    -------
    PlaneGraph
        The triangulation.

    Raises
    ------
    GenerationError
        If no triangulation on n vertices has this minimum degree, as for n = 13 and minimum degree 5.

    Example:
    >>> g = gen_triangulation(20, seed=1, min_degree=5)
    >>> g.is_triangulation, g.min_degree
    (True, 5)
    """
    if min_degree not in (3, 4, 5):
        raise GenerationError(f"minimum degree must be 3, 4 or 5, not {min_degree}")
    if n < 4:
        raise GenerationError(f"a triangulation needs at least 4 vertices, not {n}")
    best = best_min_degree(n)
    if min_degree > best:
        raise GenerationError(f"no triangulation on {n} vertices has minimum degree {min_degree}", best=best)
    rng = random.Random(seed if seed is not None else globalsettings.seed)

    if min_degree == 3:
        editor, grow = RotationEditor(tetrahedron().rotation), _grow_md3
    elif min_degree == 4:
        editor, grow = RotationEditor(octahedron().rotation), _grow_md4
    else:
        base = antiprism_sphere(5) if n == 12 else antiprism_sphere(6)
        editor, grow = RotationEditor(base.rotation), _grow_md5
    while editor.n < n:
        grow(editor, rng)
    flips = _random_flips(editor, rng, n, min_degree)
    g = editor.freeze()
    logger.debug(f"generated {g!r} with minimum degree {g.min_degree} after {flips} random flips")
    return g


def gen_tree(n: int, seed: Optional[int] = None) -> PlaneGraph:
    """A seeded random tree on n vertices, each vertex i > 0 hanging from a random earlier vertex."""
    if n < 1:
        raise GenerationError(f"a tree needs at least one vertex, not {n}")
    rng = random.Random(seed if seed is not None else globalsettings.seed)
    rotation: List[List[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        parent = rng.randrange(v)
        rotation[v].append(parent)
        rotation[parent].append(v)
    return build_plane_graph(rotation)


@dataclass
class InstanceBundle:
    graph: PlaneGraph
    lists: ListAssignment
    alpha: Coloring
    beta: Coloring
    seed: Optional[int] = None

    def to_document(self) -> GraphDocument:
        return GraphDocument(self.graph, self.lists, {"alpha": self.alpha, "beta": self.beta})

    def to_dict(self) -> dict:
        d = self.to_document().to_dict()
        d["seed"] = self.seed
        return d


def degeneracy_order(g: PlaneGraph, rng: random.Random) -> List[int]:
    """Repeatedly removes a vertex of minimum remaining degree, ties broken at random."""
    remaining = set(range(g.n))
    degree = {v: g.degree(v) for v in remaining}
    order = []
    while remaining:
        low = min(degree[v] for v in remaining)
        v = rng.choice(sorted(u for u in remaining if degree[u] == low))
        order.append(v)
        remaining.remove(v)
        for u in g.neighbors(v):
            if u in remaining:
                degree[u] -= 1
    return order


def greedy_coloring(g: PlaneGraph, l: ListAssignment, rng: random.Random, retries: int = None) -> Coloring:
    """Colors the vertices in reverse degeneracy order, each with a random color its colored neighbors avoid."""
    retries = retries if retries is not None else globalsettings.greedy_retries
    for _ in range(max(retries, 1)):
        colors: List[Optional[int]] = [None] * g.n
        for v in reversed(degeneracy_order(g, rng)):
            free = sorted(l[v] - {colors[u] for u in g.neighbors(v)})
            if not free:
                break
            colors[v] = rng.choice(free)
        else:
            return Coloring(tuple(colors))
    raise GenerationError(f"no proper coloring found in {retries} greedy attempts")


def random_lists(n: int, list_size: int, universe: Sequence[int], rng: random.Random) -> ListAssignment:
    return ListAssignment(tuple(frozenset(rng.sample(list(universe), list_size)) for _ in range(n)))


def gen_instance(g: PlaneGraph, list_size: int = None, seed: Optional[int] = None) -> InstanceBundle:
    """Random lists drawn from 2 * list_size colors, and two proper colorings alpha and beta.

    Example:
    >>> bundle = gen_instance(icosahedron(), 10, seed=3)
    >>> bundle.alpha.is_proper_list_coloring(bundle.graph, bundle.lists)
    True
    """
    list_size = list_size if list_size is not None else globalsettings.list_size
    seed = seed if seed is not None else globalsettings.seed
    rng = random.Random(seed)
    lists = random_lists(g.n, list_size, range(2 * list_size), rng)
    alpha = greedy_coloring(g, lists, rng)
    beta = greedy_coloring(g, lists, rng)
    return InstanceBundle(g, lists, alpha, beta, seed)
