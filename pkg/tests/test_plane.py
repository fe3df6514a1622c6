#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

import pytest

from planarrecolor.model.exceptions import (
    AsymmetricRotationError,
    EmbeddingError,
    GraphError,
    SimplicityError,
    TriangulationError,
)
from planarrecolor.model.plane import RotationEditor, build_plane_graph, face_walks, triangulate
from planarrecolor.model.solids import antiprism_sphere, bipyramid, icosahedron, octahedron, tetrahedron
from planarrecolor.cli.generate import gen_tree

from .common import edge, expected_dict, square, triangle, two_triangles


def test_build_from_document():
    g = build_plane_graph(expected_dict("k4_instance"))
    assert g.n == 4
    assert g.n_edges == 6
    assert g.is_triangulation
    assert len(g.faces) == 4
    assert g == tetrahedron()


def test_build_from_mapping_with_string_keys():
    g = build_plane_graph({"0": [1, 2], "1": [2, 0], "2": [0, 1]})
    assert g == triangle
    assert len(triangle.faces) == 2


def test_single_edge_has_one_face():
    assert edge.faces == ((0, 1),)
    assert not edge.is_triangulation


def test_face_walks_cover_every_dart():
    walks = face_walks(icosahedron().rotation)
    assert len(walks) == 20
    assert sum(len(w) for w in walks) == 2 * icosahedron().n_edges


def test_asymmetric_rotation():
    with pytest.raises(AsymmetricRotationError):
        build_plane_graph([[1], []])


def test_loop():
    with pytest.raises(SimplicityError):
        build_plane_graph([[0]])


def test_multi_edge():
    with pytest.raises(SimplicityError):
        build_plane_graph([[1, 1], [0, 0]])


def test_unknown_neighbor():
    with pytest.raises(GraphError):
        build_plane_graph([[5]])


def test_n_mismatch():
    with pytest.raises(GraphError):
        build_plane_graph({"n": 3, "rotation": [[1], [0]]})


def test_non_planar_rotation():
    # a K4 rotation tracing a 4-face and an 8-face
    with pytest.raises(EmbeddingError):
        build_plane_graph([[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]])


def test_solids():
    assert octahedron() == bipyramid(4)
    assert octahedron().degrees == (4,) * 6
    assert icosahedron().degrees == (5,) * 12
    g = antiprism_sphere(7)
    assert g.n == 16
    assert g.is_triangulation
    assert sorted(g.degrees) == [5] * 14 + [7, 7]


def test_successor_follows_faces():
    g = tetrahedron()
    for a, b, c in g.triangles:
        assert g.successor(b, a) == c


def test_without_relabels():
    sub, labels = icosahedron().without((0,))
    assert sub.n == 11
    assert labels == tuple(range(1, 12))
    assert sub.n_edges == 30 - 5


def test_components():
    assert not two_triangles.is_connected
    assert two_triangles.components() == [[0, 1, 2], [3, 4, 5]]
    sub, labels = two_triangles.subgraph([3, 4, 5])
    assert sub == triangle
    assert labels == (3, 4, 5)


def test_triangulate_square():
    t = triangulate(square)
    assert t.is_triangulation
    assert t.n_edges == 6
    assert all(t.has_edge(u, v) for u, v in square.edges)


def test_triangulate_tree():
    tree = gen_tree(10, seed=4)
    t = triangulate(tree)
    assert t.is_triangulation
    assert t.n_edges == 3 * 10 - 6
    assert all(t.has_edge(u, v) for u, v in tree.edges)


def test_triangulate_keeps_triangulations():
    assert triangulate(icosahedron()) == icosahedron()


def test_triangulate_too_small():
    with pytest.raises(TriangulationError):
        triangulate(edge)


def test_triangulate_disconnected():
    with pytest.raises(TriangulationError):
        triangulate(two_triangles)


def test_flip_octahedron_edge():
    editor = RotationEditor(octahedron().rotation)
    assert editor.can_flip(0, 1)
    assert set(editor.flip(0, 1)) == {2, 4}
    g = editor.freeze()
    assert g.is_triangulation
    assert not g.has_edge(0, 1)
    assert g.has_edge(2, 4)
    assert g.degree(0) == 3 and g.degree(1) == 3


def test_no_flip_on_degree_3():
    editor = RotationEditor(tetrahedron().rotation)
    assert not editor.can_flip(0, 1)


def test_insert_in_face():
    editor = RotationEditor(tetrahedron().rotation)
    w = editor.insert_in_face(0, 1, 2)
    assert w == 4
    g = editor.freeze()
    assert g.is_triangulation
    assert g.neighbors(4) == {0, 1, 2}
