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
This module loads the builtin catalog of reducible configurations shipped in data/catalog.json.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Mapping, Tuple

from planarrecolor.catalog.certificate import NodeShape, OutTreeCertificate, check_structure
from planarrecolor.catalog.exceptions import CatalogError
from planarrecolor.catalog.pattern import ConfigurationPattern, parse_degree_spec, shapes_of
from planarrecolor.engine.deferral import DeferArc, Stage
from planarrecolor.model.io import load_document

logger = logging.getLogger(__name__)

CATALOG_FILE = Path(__file__).parent / "data" / "catalog.json"


def _stage(raw: dict) -> Stage:
    kind = raw.get("kind", "simultaneous")
    if kind not in ("single", "simultaneous"):
        raise CatalogError(f"unknown stage kind {kind}")
    arcs = tuple(DeferArc(y, b, int(budget)) for y, b, budget in raw.get("arcs", ()))
    return Stage(tuple(raw["vertices"]), arcs, kind)


def parse_entry(raw: dict, *, k: int, list_size: int, aliases: Tuple[str, ...] = ()) -> ConfigurationPattern:
    """Builds a pattern and its certificate from one catalog record.

    A record carries either "outtrees" (one simultaneous stage) or "plan" (a list of stages).
    """
    try:
        eid = raw["id"]
        deg = {v: parse_degree_spec(spec) for v, spec in raw["deg"].items()}
        edges = tuple((a, b) for a, b in raw["edges"])
    except (KeyError, TypeError, ValueError) as e:
        raise CatalogError(f"malformed catalog entry {raw.get('id', '?')}: {e}") from e
    unknown = {v for e in edges for v in e} - set(deg)
    if unknown:
        raise CatalogError(f"{eid}: edges use undeclared vertices {sorted(unknown)}")

    shapes = shapes_of(deg, edges, raw.get("dh"))
    if "plan" in raw:
        stages = tuple(_stage(s) for s in raw["plan"])
    else:
        arcs = tuple(DeferArc(y, b, int(budget)) for tree in raw.get("outtrees", ()) for y, b, budget in tree["arcs"])
        stages = (Stage(tuple(deg), arcs, "simultaneous"),)
    covered = [v for stage in stages for v in stage.vertices]
    if sorted(covered) != sorted(deg):
        raise CatalogError(f"{eid}: stages cover {sorted(covered)}, vertices are {sorted(deg)}")
    cert = OutTreeCertificate(shapes, stages, frozenset(frozenset(e) for e in edges), list_size, eid)
    check_structure(cert)
    return ConfigurationPattern(eid, raw.get("source", "out-tree"), deg, edges, cert, int(raw.get("k", k)), aliases)


@lru_cache(maxsize=1)
def _load() -> Tuple[Tuple[ConfigurationPattern, ...], Mapping[str, str], Mapping[int, OutTreeCertificate]]:
    doc = load_document(CATALOG_FILE)
    k = doc.get("k", 416)
    list_size = doc.get("list_size", 10)
    aliases: Dict[str, str] = doc.get("aliases", {})
    by_target: Dict[str, List[str]] = {}
    for alias, target in aliases.items():
        by_target.setdefault(target, []).append(alias)

    entries = {}
    for raw in doc["entries"]:
        entry = parse_entry(raw, k=k, list_size=list_size, aliases=tuple(by_target.get(raw.get("id"), ())))
        if entry.id in entries:
            raise CatalogError(f"duplicate catalog entry {entry.id}")
        entries[entry.id] = entry
    priority = doc.get("priority", list(entries))
    if sorted(priority) != sorted(entries):
        raise CatalogError("priority list does not name every catalog entry exactly once")
    for alias, target in aliases.items():
        if target not in entries:
            raise CatalogError(f"alias {alias} points to unknown entry {target}")

    trees = {
        int(name): OutTreeCertificate.from_arcs(
            {v: NodeShape(d_g, d_h) for v, (d_g, d_h) in tree["nodes"].items()},
            [tuple(arc) for arc in tree["arcs"]],
            name=f"out-tree-{name}",
            list_size=list_size,
        )
        for name, tree in doc.get("reference_trees", {}).items()
    }
    logger.debug(f"loaded {len(entries)} configurations and {len(trees)} reference out-trees")
    return tuple(entries[eid] for eid in priority), aliases, trees


def builtin_catalog() -> List[ConfigurationPattern]:
    """The builtin configurations in matching priority order.

    Example:
    >>> len(builtin_catalog())
    35
    """
    return list(_load()[0])


def resolve_alias(eid: str) -> str:
    return _load()[1].get(eid, eid)


def get_entry(eid: str) -> ConfigurationPattern:
    """Looks an entry up by id or alias."""
    target = resolve_alias(eid)
    for entry in _load()[0]:
        if entry.id == target:
            return entry
    raise CatalogError(f"no catalog entry {eid}")


def reference_trees() -> Dict[int, OutTreeCertificate]:
    """The four reference out-trees, numbered 1 to 4."""
    return dict(_load()[2])
