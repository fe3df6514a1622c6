#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

"""A few standard triangulated spheres, built from consistently oriented faces."""

from __future__ import annotations

from planarrecolor.model.plane import PlaneGraph, plane_graph_from_faces


def tetrahedron() -> PlaneGraph:
    return plane_graph_from_faces(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])


def bipyramid(m: int) -> PlaneGraph:
    """Two poles (0 and m+1) joined to every vertex of an m-cycle. bipyramid(4) is the octahedron."""
    bottom = m + 1
    faces = []
    for i in range(m):
        r, s = 1 + i, 1 + (i + 1) % m
        faces.append((0, r, s))
        faces.append((s, r, bottom))
    return plane_graph_from_faces(m + 2, faces)


def octahedron() -> PlaneGraph:
    return bipyramid(4)


def antiprism_sphere(m: int) -> PlaneGraph:
    """Two poles, each joined to an m-cycle, with an antiprism band between the two cycles.

    The rings have degree 5 and the poles degree m : m=5 is the icosahedron, m=6 has 14 vertices
    and two 6-vertices.
    """
    top, bottom = 0, 2 * m + 1
    faces = []
    for i in range(m):
        u, u1 = 1 + i, 1 + (i + 1) % m
        lo, lo1 = 1 + m + i, 1 + m + (i + 1) % m
        faces.append((top, u, u1))
        faces.append((u1, u, lo))
        faces.append((u1, lo, lo1))
        faces.append((lo1, lo, bottom))
    return plane_graph_from_faces(2 * m + 2, faces)


def icosahedron() -> PlaneGraph:
    return antiprism_sphere(5)
