#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

import math
import random

import pytest

from planarrecolor.cli.generate import degeneracy_order, gen_tree, greedy_coloring
from planarrecolor.engine.extension import extend_degenerate, extend_single_vertex
from planarrecolor.engine.planar import recolor_planar
from planarrecolor.model.coloring import Coloring, ListAssignment, RecolorSequence, RecolorStep
from planarrecolor.model.io import GraphDocument
from planarrecolor.model.plane import build_plane_graph
from planarrecolor.model.solids import tetrahedron
from planarrecolor.model.validation import validate_sequence
from planarrecolor.oracle.exceptions import NotAColoringError, OracleBudgetError, OracleError
from planarrecolor.oracle.reconfig import (
    bfs_shortest_sequence,
    bounded_shortest_sequence,
    build_reconfiguration_graph,
    diameter,
)

from .common import coloring, edge, triangle


def test_edge_reconfiguration_graph(edge_doc: GraphDocument):
    rg = build_reconfiguration_graph(edge_doc.graph, edge_doc.lists)
    assert rg.n_nodes == 12
    assert rg.n_edges == 24
    assert coloring(1, 2) in rg
    assert (1, 1) not in rg
    assert rg.is_step(coloring(1, 2), coloring(3, 2))


def test_edge_diameter(edge_doc: GraphDocument):
    rg = build_reconfiguration_graph(edge_doc.graph, edge_doc.lists)
    assert diameter(rg) == 3


def test_swap_needs_three_steps(edge_doc: GraphDocument):
    rg = build_reconfiguration_graph(edge_doc.graph, edge_doc.lists)
    seq = bfs_shortest_sequence(rg, edge_doc.alpha, edge_doc.beta)
    assert len(seq) == 3
    assert validate_sequence(edge_doc.graph, edge_doc.lists, seq, edge_doc.beta).ok


def test_frozen_colorings():
    lists = ListAssignment.uniform(4, range(4))
    rg = build_reconfiguration_graph(tetrahedron(), lists)
    assert rg.n_nodes == 24
    assert rg.n_edges == 0
    assert diameter(rg) == math.inf
    assert bfs_shortest_sequence(rg, coloring(0, 1, 2, 3), coloring(1, 0, 2, 3)) is None


def test_triangle_with_four_colors_is_connected():
    rg = build_reconfiguration_graph(triangle, ListAssignment.uniform(3, range(4)))
    assert rg.n_nodes == 24
    assert diameter(rg) < math.inf


def test_node_budget(edge_doc: GraphDocument):
    with pytest.raises(OracleBudgetError) as e:
        build_reconfiguration_graph(edge_doc.graph, edge_doc.lists, cap=10)
    assert e.value.product == 16


def test_not_a_coloring(edge_doc: GraphDocument):
    rg = build_reconfiguration_graph(edge_doc.graph, edge_doc.lists)
    with pytest.raises(NotAColoringError):
        bfs_shortest_sequence(rg, coloring(1, 1), edge_doc.beta)


def test_bounded_search(edge_doc: GraphDocument):
    g, lists = edge_doc.graph, edge_doc.lists
    assert bounded_shortest_sequence(g, lists, edge_doc.alpha, edge_doc.beta, 1) is None
    seq = bounded_shortest_sequence(g, lists, edge_doc.alpha, edge_doc.beta, 2)
    assert len(seq) == 3
    assert max(seq.counts().values()) == 2


def test_bounded_search_is_limited():
    lists = ListAssignment.uniform(2, range(4))
    with pytest.raises(OracleError):
        bounded_shortest_sequence(edge, lists, coloring(0, 1), coloring(1, 0), 10)


def test_single_vertex_with_two_colors():
    rg = build_reconfiguration_graph(build_plane_graph([[]]), ListAssignment.uniform(1, (1, 2)))
    assert rg.n_nodes == 2
    assert diameter(rg) == 1


def test_triangle_with_three_colors_is_frozen():
    rg = build_reconfiguration_graph(triangle, ListAssignment.uniform(3, range(3)))
    assert rg.n_nodes == 6
    assert all(degree == 0 for _, degree in rg.graph.degree)
    assert diameter(rg) == math.inf
    assert bfs_shortest_sequence(rg, coloring(0, 1, 2), coloring(1, 0, 2)) is None


def reversed_sequence(seq: RecolorSequence) -> RecolorSequence:
    colorings = list(seq.colorings())[::-1]
    steps = tuple(
        next(RecolorStep(v, y[v]) for v in range(len(x)) if x[v] != y[v]) for x, y in zip(colorings, colorings[1:])
    )
    return RecolorSequence(colorings[0], steps)


def assert_walks_the_graph(rg, seq: RecolorSequence, target: Coloring):
    colorings = list(seq.colorings())
    assert all(rg.is_step(x, y) for x, y in zip(colorings, colorings[1:]))
    assert colorings[-1] == target
    assert len(seq) >= len(bfs_shortest_sequence(rg, seq.start, target))


@pytest.mark.parametrize("seed", range(10))
def test_degenerate_extension_agrees_with_the_oracle(seed):
    tree = gen_tree(4, seed=seed)
    lists = ListAssignment.uniform(4, range(4))
    rng = random.Random(seed)
    a, b = greedy_coloring(tree, lists, rng), greedy_coloring(tree, lists, rng)
    seq = extend_degenerate(tree, lists, degeneracy_order(tree, rng), a, b).produced
    rg = build_reconfiguration_graph(tree, lists)
    assert_walks_the_graph(rg, seq, b)
    # each vertex moves at most twice, so the count-bounded search succeeds and is no longer
    bounded = bounded_shortest_sequence(tree, lists, a, b, 2)
    assert bounded is not None
    assert len(bfs_shortest_sequence(rg, a, b)) <= len(bounded) <= len(seq)
    assert validate_sequence(tree, lists, reversed_sequence(seq), a).ok


@pytest.mark.parametrize("seed", range(5))
def test_single_vertex_extension_agrees_with_the_oracle(seed):
    lists = ListAssignment.uniform(3, range(5))
    rng = random.Random(seed)
    a, b = greedy_coloring(triangle, lists, rng), greedy_coloring(triangle, lists, rng)
    sub, labels = triangle.without((2,))
    rg_sub = build_reconfiguration_graph(sub, lists.restrict(labels))
    inner = bfs_shortest_sequence(rg_sub, a.restrict(labels), b.restrict(labels))
    trace = extend_single_vertex(triangle, lists, 2, inner.relabel(labels, a), b[2])
    assert_walks_the_graph(build_reconfiguration_graph(triangle, lists), trace.produced, b)


def test_planar_recoloring_agrees_with_the_oracle(k4_doc: GraphDocument):
    trace = recolor_planar(k4_doc.graph, k4_doc.lists, k4_doc.alpha, k4_doc.beta)
    rg = build_reconfiguration_graph(k4_doc.graph, k4_doc.lists)
    assert_walks_the_graph(rg, trace.produced, k4_doc.beta)
    back = reversed_sequence(trace.produced)
    assert validate_sequence(k4_doc.graph, k4_doc.lists, back, k4_doc.alpha).ok
    assert len(bfs_shortest_sequence(rg, k4_doc.beta, k4_doc.alpha)) == len(
        bfs_shortest_sequence(rg, k4_doc.alpha, k4_doc.beta)
    )
