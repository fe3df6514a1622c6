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

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Hashable, Mapping, Tuple, Union

import networkx as nx

from planarrecolor.catalog.certificate import NodeShape, OutTreeCertificate
from planarrecolor.catalog.exceptions import CatalogError
from planarrecolor.engine.deferral import DeferralPlan
from planarrecolor.settings import globalsettings

DegreeSpec = Union[int, str, None]
"""An exact host degree, a lower bound written "6+", an upper bound written "6-", or None for an unconstrained
vertex."""

LOWER_BOUND = re.compile(r"^(\d+)\+$")
UPPER_BOUND = re.compile(r"^(\d+)-$")


def parse_degree_spec(raw) -> DegreeSpec:
    """Checks a degree spec read from the catalog.

    Example:
    >>> parse_degree_spec("6-")
    '6-'
    """
    if raw is None:
        return None
    if isinstance(raw, int) and not isinstance(raw, bool) and raw >= 1:
        return raw
    if isinstance(raw, str) and (LOWER_BOUND.match(raw) or UPPER_BOUND.match(raw)):
        return raw
    raise CatalogError(f"invalid degree spec {raw!r}")


def degree_matches(spec: DegreeSpec, degree: int) -> bool:
    if spec is None:
        return True
    if isinstance(spec, int):
        return degree == spec
    if m := UPPER_BOUND.match(spec):
        return degree <= int(m.group(1))
    return degree >= int(LOWER_BOUND.match(spec).group(1))


def worst_degree(spec: DegreeSpec) -> int:
    """The host degree a certificate assumes: the exact degree, or the bound of an "N-" spec."""
    if isinstance(spec, int):
        return spec
    if isinstance(spec, str) and (m := UPPER_BOUND.match(spec)):
        return int(m.group(1))
    raise CatalogError(f"a certificate needs an exact degree or an upper bound, got {spec!r}")


def _specificity(spec: DegreeSpec) -> int:
    if isinstance(spec, int):
        return 2
    return 1 if spec is not None else 0


@dataclass(frozen=True)
class ConfigurationPattern:
    """A reducible configuration : a small graph whose vertices carry host-degree constraints,
    with the certificate that bounds its recolorings.

    Example:
    >>> entry = get_entry("RC-53a")
    >>> entry.deg
    {'a': 5, 'b': 5, 'c': 5}
    """

    id: str
    source: str
    deg: Mapping[str, DegreeSpec]
    edges: Tuple[Tuple[str, str], ...]
    certificate: OutTreeCertificate
    k_threshold: int
    aliases: Tuple[str, ...] = ()

    @property
    def vertices(self) -> Tuple[str, ...]:
        return tuple(self.deg)

    @property
    def plan(self) -> DeferralPlan:
        return self.certificate.plan()

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def pattern_degree(self, v: str) -> int:
        return self.graph.degree[v]

    def specificity(self, v: str) -> int:
        return _specificity(self.deg[v])

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "source": self.source,
            "deg": dict(self.deg),
            "edges": [list(e) for e in self.edges],
            "certificate": self.certificate.to_dict(),
            "k": self.k_threshold,
            "aliases": list(self.aliases),
        }

    def __repr__(self) -> str:
        return f"ConfigurationPattern({self.id}: {len(self.deg)} vertices, {len(self.edges)} edges)"


def shapes_of(deg: Mapping[str, DegreeSpec], edges, overrides: Mapping[str, int] = None) -> Dict[Hashable, NodeShape]:
    """The r_s shape of every vertex: r its worst host degree, s its degree in the pattern unless overridden.

    A smaller host degree only lowers a bound, so an "N-" vertex is certified at degree N.
    """
    overrides = overrides or {}
    g = nx.Graph()
    g.add_nodes_from(deg)
    g.add_edges_from(edges)
    return {v: NodeShape(worst_degree(spec), overrides.get(v, g.degree[v])) for v, spec in deg.items()}


def neighborhood_plan(d: int, k: int = None) -> ConfigurationPattern:
    """A d-vertex surrounded by a cycle of d neighbors of degree at most 6, each deferring to the center for 24 colors.

    The center is recolored at most 6 d + 2 times.

    Example:
    >>> verify_certificate(neighborhood_plan(7).certificate).bounds["h"]
    Fraction(44, 1)
    """
    if not 3 <= d <= 7:
        raise CatalogError(f"neighborhood plans exist for degrees 3 to 7, not {d}")
    ring = [f"n{i}" for i in range(1, d + 1)]
    deg: Dict[str, DegreeSpec] = {"h": d, **{v: "6-" for v in ring}}
    edges = tuple((ring[i], ring[(i + 1) % d]) for i in range(d)) + tuple(("h", v) for v in ring)
    leaf = 24  # 6_3 leaf
    cert = OutTreeCertificate.from_arcs(
        shapes_of(deg, edges), [("h", v, leaf) for v in ring], adjacency=edges, name=f"neighborhood-{d}"
    )
    return ConfigurationPattern(
        f"neighborhood-{d}", "neighborhood", deg, edges, cert, k if k is not None else globalsettings.k
    )
