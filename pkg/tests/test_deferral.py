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

from planarrecolor.catalog.certificate import node_bounds
from planarrecolor.catalog.loader import get_entry
from planarrecolor.catalog.matcher import MatchEmbedding, match_configuration
from planarrecolor.cli.generate import InstanceBundle, greedy_coloring
from planarrecolor.engine.deferral import DeferArc, DeferralPlan, Stage, check_plan, extend_with_deferral
from planarrecolor.engine.exceptions import NotKGoodError, PlanError
from planarrecolor.engine.extension import extend_single_vertex
from planarrecolor.engine.planar import recolor_planar
from planarrecolor.model.coloring import Coloring, RecolorSequence, RecolorStep
from planarrecolor.model.solids import icosahedron, octahedron
from planarrecolor.model.validation import validate_sequence

from .common import ten_lists, with_leaves


def test_stage_overhead():
    assert Stage((0,), (), "single").overhead == 1
    assert Stage((0, 1)).overhead == 2


def test_plan_helpers():
    plan = DeferralPlan((Stage(("w",), (), "single"), Stage(("v1", "v2"), (DeferArc("v1", "v2", 40),))))
    assert plan.vertices == ("w", "v1", "v2")
    assert plan.later(0) == {"v1", "v2"}
    assert plan.later(1) == set()
    relabeled = plan.relabel({"w": 4, "v1": 0, "v2": 1})
    assert relabeled.vertices == (4, 0, 1)
    assert relabeled.arcs == (DeferArc(0, 1, 40),)
    assert DeferralPlan.single_vertex(3).vertices == (3,)


def test_plan_must_cover_configuration():
    with pytest.raises(PlanError):
        check_plan(icosahedron(), (0, 1, 2), DeferralPlan((Stage((0, 1)),)))


def test_arc_along_non_edge():
    with pytest.raises(PlanError):
        check_plan(icosahedron(), (0, 11), DeferralPlan((Stage((0, 11), (DeferArc(0, 11, 5),)),)))


def test_one_yielder_per_vertex():
    plan = DeferralPlan((Stage((0, 1, 2), (DeferArc(1, 0, 1), DeferArc(2, 0, 1))),))
    with pytest.raises(PlanError):
        check_plan(icosahedron(), (0, 1, 2), plan)


def test_inner_must_be_k_good(icosahedron_instance: InstanceBundle):
    bundle = icosahedron_instance
    inner = RecolorSequence(bundle.alpha, ((5, 0),))
    plan = DeferralPlan((Stage((0, 1, 2)),))
    with pytest.raises(NotKGoodError):
        extend_with_deferral(bundle.graph, bundle.lists, (0, 1, 2), plan, inner, bundle.beta, 0)


def test_extend_configuration(icosahedron_instance: InstanceBundle):
    bundle = icosahedron_instance
    g, lists, a, b = bundle.graph, bundle.lists, bundle.alpha, bundle.beta
    embedding = match_configuration(g)
    h = embedding.vertices
    sub, labels = g.without(h)
    inner = recolor_planar(sub, lists.restrict(labels), a.restrict(labels), b.restrict(labels)).produced
    inner = inner.relabel(labels, a)
    trace = extend_with_deferral(g, lists, h, embedding.host_plan(), inner, b)
    assert validate_sequence(g, lists, trace.produced, b).ok
    assert trace.k_good
    assert all(trace.per_vertex_counts[v] <= 416 for v in h)


RC_5263A = {"a": ["c", "b"], "b": ["d", "c", "a"], "c": ["a", "b", "d"], "d": ["c", "b", "e"], "e": ["d"]}
RC_5362A = {"a": ["b"], "b": ["c", "a", "d"], "c": ["b", "d"], "d": ["e", "c", "b"], "e": ["d"]}
RING = "abcdefg"
RC_6771A = {"h": list(reversed(RING)), **{v: [RING[i - 1], "h", RING[(i + 1) % 7]] for i, v in enumerate(RING)}}


def hammering_inner(lists, a: Coloring, b: Coloring, outside, rounds: int, seed: int) -> RecolorSequence:
    """Recolors every outside vertex once per round to a random other color, then moves each to b.

    The outside vertices must be pairwise non-adjacent.
    """
    rng = random.Random(seed)
    cur = list(a.colors)
    steps = []
    for _ in range(rounds):
        for u in outside:
            cur[u] = rng.choice(sorted(lists[u] - {cur[u]}))
            steps.append(RecolorStep(u, cur[u]))
    steps.extend(RecolorStep(u, b[u]) for u in outside if cur[u] != b[u])
    return RecolorSequence(a, tuple(steps))


def hammered_configuration(eid: str, core, degrees, rounds: int = 200, seed: int = 7):
    entry = get_entry(eid)
    g, ids = with_leaves(core, degrees)
    assert MatchEmbedding(entry, ids).verify(g)
    lists = ten_lists(g.n)
    rng = random.Random(seed)
    a, b = greedy_coloring(g, lists, rng), greedy_coloring(g, lists, rng)
    h = tuple(ids[v] for v in entry.vertices)
    inner = hammering_inner(lists, a, b, [u for u in range(g.n) if u not in h], rounds, seed)
    trace = extend_with_deferral(g, lists, h, entry.plan.relabel(ids), inner, b)
    assert validate_sequence(g, lists, trace.produced, b).ok
    return entry, ids, trace


@pytest.mark.parametrize("eid, core", [("RC-5263a", RC_5263A), ("RC-5362a", RC_5362A)])
def test_hammered_configuration_defers_within_its_bounds(eid, core):
    entry, ids, trace = hammered_configuration(eid, core, get_entry(eid).deg)
    assert trace.deferral_log
    arcs = {(ids[arc.yielder], ids[arc.beneficiary]) for arc in entry.certificate.arcs}
    assert all((e.yielder, e.beneficiary) in arcs for e in trace.deferral_log)
    bounds = node_bounds(entry.certificate, 416)
    assert all(trace.per_vertex_counts[ids[v]] <= bounds[v] for v in entry.vertices)


def test_hammered_neighborhood_center():
    degrees = {"h": 7, **{v: 6 for v in RING}}
    entry, ids, trace = hammered_configuration("RC-6771a", RC_6771A, degrees)
    # the center has no outside neighbor: it moves only to yield, and twice to finish
    assert trace.per_vertex_counts[ids["h"]] <= 6 * 7 + 2
    assert node_bounds(entry.certificate, 416)["h"] == 44


def test_path_configuration_closes_exactly():
    bounds = node_bounds(get_entry("RC-5263a").certificate, 416)
    assert bounds["a"] == math.ceil(3 * 416 / 4) + 384 // 4 + 24 // 4 + 2 == 416
    assert bounds["e"] == (4 * 416 - 40) // 4 + 40 // 5 + 2 == 416


def test_plan_without_arcs_is_a_single_vertex_extension():
    g = octahedron()
    lists = ten_lists(g.n)
    rng = random.Random(4)
    a, b = greedy_coloring(g, lists, rng), greedy_coloring(g, lists, rng)
    sub, labels = g.without((0,))
    inner = recolor_planar(sub, lists.restrict(labels), a.restrict(labels), b.restrict(labels)).produced
    inner = inner.relabel(labels, a)
    planned = extend_with_deferral(g, lists, (0,), DeferralPlan.single_vertex(0), inner, b)
    single = extend_single_vertex(g, lists, 0, inner, b[0])
    assert planned.produced == single.produced
    assert planned.deferral_log == ()
